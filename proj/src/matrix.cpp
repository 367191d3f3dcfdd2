#include "dsm/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "dsm/errors.hpp"

namespace dsm {

UMatrix::UMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw std::domain_error("matrix: dimensions must be positive");
    }
    if (rows > kMaxDim || cols > kMaxDim ||
        static_cast<long long>(rows) * cols > kMaxCells) {
        throw capacity_error("matrix: dense storage limited to " +
                             std::to_string(kMaxDim) + " per dimension and " +
                             std::to_string(kMaxCells) + " cells");
    }
    entries_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

UMatrix UMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::domain_error("matrix: dimensions must be positive");
    }
    UMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < M.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != M.cols()) {
            throw std::invalid_argument("matrix: ragged row " + std::to_string(i + 1));
        }
        for (int j = 0; j < M.cols(); ++j) {
            M.at(i, j) = rows[i][j];
        }
    }
    return M;
}

size_t UMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw std::out_of_range("matrix: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of bounds");
    }
    return static_cast<size_t>(i) * cols_ + j;
}

UMatrix UMatrix::transposed() const {
    UMatrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            T.at(j, i) = at(i, j);
        }
    }
    return T;
}

bool operator==(const UMatrix& a, const UMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool UMatrix::lex_less(const UMatrix& a, const UMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (size_t k = 0; k < a.entries_.size(); ++k) {
        if (a.entries_[k] != b.entries_[k]) return a.entries_[k] < b.entries_[k];
    }
    return false;
}

MarginalReport validate(const UMatrix& M) {
    const int n = M.rows(), m = M.cols();
    MarginalReport report;
    report.row_sums.assign(n, Rational(0));
    report.col_sums.assign(m, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const Rational& e = M.at(i, j);
            if (e.is_negative()) {
                report.negative_cells.emplace_back(i, j);
            }
            report.row_sums[i] += e;
            report.col_sums[j] += e;
        }
    }
    const Rational row_target(m), col_target(n);
    for (int i = 0; i < n; ++i) {
        if (report.row_sums[i] != row_target) report.bad_rows.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
        if (report.col_sums[j] != col_target) report.bad_cols.push_back(j);
    }
    report.is_member = report.negative_cells.empty() && report.bad_rows.empty() &&
                       report.bad_cols.empty();
    return report;
}

std::string MarginalReport::summary() const {
    if (is_member) {
        return "member of M(" + std::to_string(row_sums.size()) + "," +
               std::to_string(col_sums.size()) + ")";
    }
    std::ostringstream out;
    out << "not a member:";
    for (const Cell& c : negative_cells) {
        out << " negative entry at (" << c.first + 1 << "," << c.second + 1 << ");";
    }
    for (int i : bad_rows) {
        out << " row " << i + 1 << " sums to " << row_sums[i] << " (want "
            << col_sums.size() << ");";
    }
    for (int j : bad_cols) {
        out << " col " << j + 1 << " sums to " << col_sums[j] << " (want "
            << row_sums.size() << ");";
    }
    return out.str();
}

SupportSet support(const UMatrix& M) {
    SupportSet cells;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (!M.at(i, j).is_zero()) {
                cells.emplace(i, j);
            }
        }
    }
    return cells;
}

bool verify_tiling(const UMatrix& M) {
    const int n = M.rows(), m = M.cols();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (M.at(i, j).is_negative()) return false;
        }
    }
    const Rational row_target(m), col_target(n);
    // Translates of G2 = {0} x Z_m sweep a full row; of G1 = Z_n x {0} a full
    // column. Both sums are evaluated at every point of Z_n x Z_m.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Rational s(0);
            for (int b = 0; b < m; ++b) {
                s += M.at(i, (j - b + m) % m);
            }
            if (s != row_target) return false;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Rational s(0);
            for (int a = 0; a < n; ++a) {
                s += M.at((i - a + n) % n, j);
            }
            if (s != col_target) return false;
        }
    }
    return true;
}

bool scale_check_birkhoff(const UMatrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("scale_check_birkhoff: matrix must be square");
    }
    if (!validate(M).is_member) {
        throw std::invalid_argument("scale_check_birkhoff: matrix is not a member");
    }
    const int n = M.rows();
    const Rational scale(n);
    std::vector<int> col_hits(n, 0);
    for (int i = 0; i < n; ++i) {
        int row_hits = 0;
        for (int j = 0; j < n; ++j) {
            if (M.at(i, j).is_zero()) continue;
            if (M.at(i, j) != scale) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        if (col_hits[j] != 1) return false;
    }
    return true;
}

std::map<Rational, long long> entry_multiset(const UMatrix& M) {
    std::map<Rational, long long> counts;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (!M.at(i, j).is_zero()) {
                ++counts[M.at(i, j)];
            }
        }
    }
    return counts;
}

Rational total_sum(const UMatrix& M) {
    Rational s(0);
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            s += M.at(i, j);
        }
    }
    return s;
}

}  // namespace dsm
