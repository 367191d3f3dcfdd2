#include "dsm/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "dsm/errors.hpp"

namespace dsm {

namespace {

constexpr long long kMaxSide = UMatrix::kMaxDim;

void check_positive(long long n, long long m) {
    if (n < 1 || m < 1) {
        throw std::domain_error("construction: dimensions must be positive");
    }
    if (n > kMaxSide || m > kMaxSide) {
        throw capacity_error("construction: dimensions limited to " + std::to_string(kMaxSide));
    }
}

// [A | B] with matching row counts.
UMatrix hconcat(const UMatrix& A, const UMatrix& B) {
    if (A.rows() != B.rows()) {
        throw std::invalid_argument("hconcat: row counts differ");
    }
    UMatrix M(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) M.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols(); ++j) M.at(i, A.cols() + j) = B.at(i, j);
    }
    return M;
}

}  // namespace

long long EuclideanTrace::gcd() const {
    if (steps.empty()) return n;
    if (steps.size() == 1) return n;  // first step divided exactly
    return steps[steps.size() - 2].remainder;
}

std::vector<std::pair<long long, long long>> EuclideanTrace::entry_multiplicities() const {
    // Divisors down the trace: n, r1, ..., rt; each value v at step i occurs
    // k_i * v times in F(n, m).
    std::vector<std::pair<long long, long long>> out;
    long long divisor = n;
    for (const EuclideanStep& step : steps) {
        out.emplace_back(divisor, step.quotient * divisor);
        divisor = step.remainder;
    }
    return out;
}

EuclideanTrace euclidean_trace(long long n, long long m) {
    check_positive(n, m);
    EuclideanTrace trace;
    trace.swapped = n > m;
    if (trace.swapped) std::swap(n, m);
    trace.n = n;
    trace.m = m;
    long long a = m, b = n;
    while (true) {
        const long long q = a / b, r = a % b;
        trace.steps.push_back({q, r});
        if (r == 0) break;
        a = b;
        b = r;
    }
    return trace;
}

UMatrix build_E(long long n, long long k) {
    if (n < 1 || k < 1) {
        throw std::domain_error("build_E: n and k must be positive");
    }
    if (n > kMaxSide || k > kMaxSide) {
        throw capacity_error("build_E: arguments limited to " + std::to_string(kMaxSide));
    }
    check_positive(n, k * n);
    UMatrix M(static_cast<int>(n), static_cast<int>(k * n));
    const Rational value(n);
    for (long long i = 0; i < n; ++i) {
        for (long long t = 0; t < k; ++t) {
            M.at(static_cast<int>(i), static_cast<int>(i * k + t)) = value;
        }
    }
    return M;
}

UMatrix build_F(long long n, long long m) {
    check_positive(n, m);
    if (n > m) {
        throw std::invalid_argument("build_F: requires n <= m (transpose for the other orientation)");
    }
    const long long k = m / n, r = m % n;
    if (r == 0) {
        return build_E(n, k);
    }
    return hconcat(build_E(n, k), build_F(r, n).transposed());
}

UMatrix build_Y(long long n, long long m) {
    check_positive(n, m);
    if (n > m) {
        throw std::invalid_argument("build_Y: requires n <= m");
    }
    const long long d = m % n;
    const long long k1 = m / n;
    if (d <= 1) {
        throw std::invalid_argument("build_Y: condition m = k1*n + d with d > 1 fails (d = " +
                                    std::to_string(d) + ")");
    }
    if (n % d != 0) {
        throw std::invalid_argument("build_Y: condition n = k2*d fails (" + std::to_string(d) +
                                    " does not divide " + std::to_string(n) + ")");
    }
    const long long k2 = n / d;

    // C block, 2*k2 rows by 2*(k1*k2 + 1) columns. Column layout: a column of
    // d's; a column holding n-d, 0, d; the left diagonal of k1-runs of n for
    // rows 1..k2-1 (row 0 contributing only k1-1 of them); row k2's k1-run; a
    // second column of d's; the right diagonal for rows k2+1..2*k2-1. The
    // (4,6) instance reproduces the 4x6 counterexample matrix T exactly.
    const int c_rows = static_cast<int>(2 * k2);
    const int c_cols = static_cast<int>(2 * (k1 * k2 + 1));
    const Rational vd(d), vn(n), vnd(n - d);
    const long long right_d_col = k1 * k2 + k1 + 1;

    UMatrix C(c_rows, c_cols);
    C.at(0, 0) = vd;
    C.at(0, 1) = vnd;
    for (long long t = 0; t < k1 - 1; ++t) {
        C.at(0, static_cast<int>(2 + t)) = vn;
    }
    C.at(0, static_cast<int>(right_d_col)) = vd;
    for (long long i = 1; i < k2; ++i) {
        C.at(static_cast<int>(i), 0) = vd;
        for (long long t = 0; t < k1; ++t) {
            C.at(static_cast<int>(i), static_cast<int>(i * k1 + 1 + t)) = vn;
        }
    }
    C.at(static_cast<int>(k2), 1) = vd;
    for (long long t = 0; t < k1; ++t) {
        C.at(static_cast<int>(k2), static_cast<int>(k1 * k2 + 1 + t)) = vn;
    }
    for (long long j = 1; j < k2; ++j) {
        C.at(static_cast<int>(k2 + j), static_cast<int>(right_d_col)) = vd;
        for (long long t = 0; t < k1; ++t) {
            C.at(static_cast<int>(k2 + j),
                 static_cast<int>(right_d_col + (j - 1) * k1 + 1 + t)) = vn;
        }
    }

    // B block, k2 rows by k1*k2 + 1 columns: a column of d's then a staircase
    // of k1-runs of n.
    const int b_rows = static_cast<int>(k2);
    const int b_cols = static_cast<int>(k1 * k2 + 1);

    UMatrix Y(static_cast<int>(n), static_cast<int>(m));
    for (int i = 0; i < c_rows; ++i) {
        for (int j = 0; j < c_cols; ++j) {
            Y.at(i, j) = C.at(i, j);
        }
    }
    for (long long block = 0; block < d - 2; ++block) {
        const int row0 = static_cast<int>(c_rows + block * b_rows);
        const int col0 = static_cast<int>(c_cols + block * b_cols);
        for (long long i = 0; i < k2; ++i) {
            Y.at(row0 + static_cast<int>(i), col0) = vd;
            for (long long t = 0; t < k1; ++t) {
                Y.at(row0 + static_cast<int>(i), col0 + static_cast<int>(i * k1 + 1 + t)) = vn;
            }
        }
    }

    if (!validate(Y).is_member) {
        throw std::logic_error("build_Y: assembled matrix fails membership; construction bug");
    }
    return Y;
}

namespace {

UMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.emplace_back(row.begin(), row.end());
    }
    return UMatrix::from_rows(out);
}

}  // namespace

UMatrix gallery(GalleryId id) {
    switch (id) {
        case GalleryId::T_4x6:
            return from_ints({{2, 2, 0, 0, 2, 0},
                              {2, 0, 4, 0, 0, 0},
                              {0, 2, 0, 4, 0, 0},
                              {0, 0, 0, 0, 2, 4}});
        case GalleryId::F_3x4_nonextremal:
            return from_ints({{3, 0, 0, 1},
                              {0, 2, 2, 0},
                              {0, 1, 1, 2}});
        case GalleryId::MIN_4x5_A:
            return from_ints({{1, 4, 0, 0, 0},
                              {0, 0, 4, 0, 1},
                              {3, 0, 0, 2, 0},
                              {0, 0, 0, 2, 3}});
        case GalleryId::MIN_4x5_B:
            return from_ints({{4, 0, 0, 0, 1},
                              {0, 4, 0, 0, 1},
                              {0, 0, 4, 0, 1},
                              {0, 0, 0, 4, 1}});
        case GalleryId::F_8x27: {
            std::vector<std::vector<long long>> rows(8, std::vector<long long>(27, 0));
            // Three 8s per row marching right, then the transposed tail of
            // F(3, 8) in the last three columns.
            for (int i = 0; i < 8; ++i) {
                for (int t = 0; t < 3; ++t) rows[i][3 * i + t] = 8;
            }
            rows[0][24] = 3;
            rows[1][24] = 3;
            rows[2][25] = 3;
            rows[3][25] = 3;
            rows[4][26] = 3;
            rows[5][26] = 3;
            rows[6][24] = 2;
            rows[6][26] = 1;
            rows[7][25] = 2;
            rows[7][26] = 1;
            return from_ints(rows);
        }
    }
    throw std::invalid_argument("gallery: unknown id");
}

GalleryId gallery_id_from_string(const std::string& tag) {
    for (GalleryId id : all_gallery_ids()) {
        if (tag == to_string(id)) return id;
    }
    throw std::invalid_argument("gallery: unknown tag '" + tag + "'");
}

const char* to_string(GalleryId id) {
    switch (id) {
        case GalleryId::T_4x6: return "T_4x6";
        case GalleryId::F_3x4_nonextremal: return "F_3x4_nonextremal";
        case GalleryId::MIN_4x5_A: return "MIN_4x5_A";
        case GalleryId::MIN_4x5_B: return "MIN_4x5_B";
        case GalleryId::F_8x27: return "F_8x27";
    }
    return "?";
}

const std::vector<GalleryId>& all_gallery_ids() {
    static const std::vector<GalleryId> ids = {
        GalleryId::T_4x6, GalleryId::F_3x4_nonextremal, GalleryId::MIN_4x5_A,
        GalleryId::MIN_4x5_B, GalleryId::F_8x27};
    return ids;
}

long long s_formula(long long n, long long m) {
    if (n < 1 || m < 1) {
        throw std::domain_error("s_formula: arguments must be positive");
    }
    return n + m - std::gcd(n, m);
}

}  // namespace dsm
