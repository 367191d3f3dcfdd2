#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsm/matrix.hpp"

namespace dsm {

struct EuclideanStep {
    long long quotient;
    long long remainder;
    friend bool operator==(const EuclideanStep&, const EuclideanStep&) = default;
};

/// Full quotient/remainder sequence of the Euclidean algorithm on (n, m),
/// oriented so n <= m: m = k1*n + r1, n = k2*r1 + r2, ..., ending with
/// remainder 0. The last nonzero remainder is gcd(n, m).
struct EuclideanTrace {
    long long n = 0;
    long long m = 0;
    bool swapped = false;  // inputs arrived as (m, n) and were reoriented
    std::vector<EuclideanStep> steps;

    long long gcd() const;

    /// (value, multiplicity) pairs: the divisor of each step appears
    /// quotient * divisor times among the entries of F(n, m).
    std::vector<std::pair<long long, long long>> entry_multiplicities() const;
};

EuclideanTrace euclidean_trace(long long n, long long m);

/// The n x kn matrix with entry n at (i, i*k .. i*k+k-1): one nonzero per
/// column, k per row.
UMatrix build_E(long long n, long long k);

/// Minimum-support member of M(n, m), assembled recursively down the
/// Euclidean trace: F(n, m) = [ E(n, k1*n) | F(r1, n)^T ], base F(n, kn) = E(n, k).
/// Requires 1 <= n <= m.
UMatrix build_F(long long n, long long m);

/// Extremal-but-not-minimum member of M(n, m), defined whenever
/// m = k1*n + d with n > d > 1 and d dividing n. Support size is one above
/// the minimum. Throws std::invalid_argument naming the failing clause when
/// the condition does not hold.
UMatrix build_Y(long long n, long long m);

/// Literal example matrices, entry for entry.
enum class GalleryId { T_4x6, F_3x4_nonextremal, MIN_4x5_A, MIN_4x5_B, F_8x27 };

UMatrix gallery(GalleryId id);
GalleryId gallery_id_from_string(const std::string& tag);
const char* to_string(GalleryId id);
const std::vector<GalleryId>& all_gallery_ids();

/// n + m - gcd(n, m), the minimum support size over M(n, m).
long long s_formula(long long n, long long m);

}  // namespace dsm
