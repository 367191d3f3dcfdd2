#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsm/rational.hpp"

namespace dsm {

/// (row, col) index pair, 0-based. Human-facing output is 1-based everywhere.
using Cell = std::pair<int, int>;

/// The set of nonzero cells of a matrix.
using SupportSet = std::set<Cell>;

/// Dense matrix of exact rationals, the candidate members of M(n, m):
/// n rows each summing to m, m columns each summing to n. Construction does
/// not enforce membership or nonnegativity; validate() reports both.
class UMatrix {
public:
    UMatrix(int rows, int cols);
    static UMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
    Rational& at(int i, int j) { return entries_[index(i, j)]; }

    UMatrix transposed() const;

    friend bool operator==(const UMatrix& a, const UMatrix& b);
    friend bool operator!=(const UMatrix& a, const UMatrix& b) { return !(a == b); }

    /// Deterministic total order: dimensions, then entries row-major.
    static bool lex_less(const UMatrix& a, const UMatrix& b);

    // Documented dense-storage limits; exceeding them raises capacity_error.
    static constexpr long long kMaxDim = 1'000'000;
    static constexpr long long kMaxCells = 4'000'000;

private:
    size_t index(int i, int j) const;

    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

/// Exact row/column sums plus every membership violation found.
struct MarginalReport {
    std::vector<Rational> row_sums;
    std::vector<Rational> col_sums;
    std::vector<Cell> negative_cells;
    std::vector<int> bad_rows;  // rows whose sum != m
    std::vector<int> bad_cols;  // cols whose sum != n
    bool is_member = false;

    /// Human-readable account of all violations, 1-based indices.
    std::string summary() const;
};

/// Membership test against M(n, m): nonnegative entries, every row sums to m,
/// every column sums to n. Reports all violations, not just the first.
MarginalReport validate(const UMatrix& M);

/// Cells holding nonzero entries.
SupportSet support(const UMatrix& M);

/// Reads M as a function on Z_n x Z_m and checks both translate-sum tiling
/// conditions (row translates summing to m, column translates summing to n)
/// together with nonnegativity. Agrees with validate().is_member by
/// construction; tests assert the equivalence rather than assuming it.
bool verify_tiling(const UMatrix& M);

/// Square members only: true iff (1/n) M is a permutation matrix.
/// Throws std::invalid_argument on non-square or non-member input.
bool scale_check_birkhoff(const UMatrix& M);

/// Multiset of nonzero entries with multiplicities.
std::map<Rational, long long> entry_multiset(const UMatrix& M);

/// Sum of all entries (n*m for members).
Rational total_sum(const UMatrix& M);

}  // namespace dsm
