#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsm/matrix.hpp"

namespace dsm {

/// True iff some member of M(n, m) has support contained in S. Decided by an
/// exact integer max-flow (source -> rows at capacity m, cols -> sink at
/// capacity n, an uncapped arc per allowed cell); feasible iff the flow
/// saturates at n*m.
bool feasible_support(long long n, long long m, const SupportSet& S);

/// Solves the marginal equations on an acyclic support by leaf elimination.
/// Returns the unique solution when it is strictly positive on all of S and
/// meets every marginal, none otherwise. A returned matrix is extremal with
/// support exactly S. Throws std::invalid_argument when S is cyclic.
std::optional<UMatrix> solve_forest(long long n, long long m, const SupportSet& S);

enum class MinSupportMethod {
    subset,  // smallest s with a feasible s-cell subset; assumes nothing
    forest,  // smallest acyclic support with a positive solution
};

/// S(n, m) by exhaustion. Limits: n*m <= 24 for subset, n+m <= 16 for forest;
/// capacity_error beyond.
long long min_support_bruteforce(long long n, long long m, MinSupportMethod method);

/// Complete census of extremal supports of M(n, m). Supports are stored as
/// row-major bitmasks (bit i*m + j), canonically sorted: ascending size, then
/// lexicographic cell order. Solved matrices are recovered on demand.
struct ExtremalCensus {
    int n = 0;
    int m = 0;
    std::vector<uint64_t> supports;

    size_t size() const { return supports.size(); }
    SupportSet support_at(size_t index) const;
    UMatrix matrix_at(size_t index) const;
    bool contains(const SupportSet& S) const;

    static uint64_t mask_of(const SupportSet& S, int m);
};

/// Streams every extremal support of M(n, m) exactly once (unsorted order).
/// Enumerates column by column, growing acyclic supports with positive
/// integer entries; union-find plus demand pruning keeps the search tight.
/// Limit n + m <= 14.
void for_each_extremal(int n, int m, const std::function<void(uint64_t mask, int size)>& emit);

/// Materialized census (same limit), canonically sorted.
ExtremalCensus enumerate_extremal(int n, int m);

/// True iff some row permutation composed with a column permutation maps A
/// onto B exactly. Decided by canonical forms (backtracking over row orders
/// with pruning, columns sorted). Limited to min(n, m) <= 8.
bool are_equivalent(const UMatrix& A, const UMatrix& B);

/// Canonical key under row/column permutation: equal keys iff equivalent.
/// Same size limit as are_equivalent.
std::string canonical_equivalence_key(const UMatrix& M);

struct CensusStatistics {
    std::map<int, long long> size_histogram;
    long long equivalence_classes = 0;
    int min_size = 0;
    int max_size = 0;
};

CensusStatistics census_statistics(const ExtremalCensus& census);

/// JSON lines, one record per support:
/// {"support": [[i,j],...], "matrix": {...}, "size": s} with 1-based indices.
void write_census_jsonl(const ExtremalCensus& census, std::ostream& out);

/// CSV "size,count" rows, ascending.
void write_histogram_csv(const CensusStatistics& stats, std::ostream& out);

}  // namespace dsm
