#pragma once

// Integer bookkeeping for spectral curves of the split real forms: genera,
// Prym dimensions, branch counts, canonical degrees and characteristic classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chvar/bigint.hpp"

namespace chvar::spectral {

enum class GroupKind { SL, Sp };

std::string to_string(GroupKind kind);

struct CurveGeometry {
    GroupKind kind = GroupKind::SL;
    /// n for SL(n), m for Sp(2m).
    std::int64_t rank_param = 0;
    std::int64_t g = 0;
    /// Size of the matrices: n, or 2m.
    std::int64_t n = 0;
    std::int64_t g_S = 0;
    /// Dimension of the Prym variety that carries the order-2 points.
    std::int64_t p = 0;
    // Sp only: quotient curve genus (also called q), branch count.
    std::optional<std::int64_t> g_Sbar;
    std::optional<std::int64_t> N;
};

/// Throws ParameterOutOfRange for g < 2, n < 2 (SL) or m < 1 (Sp).
CurveGeometry geometry(GroupKind kind, std::int64_t rank_param, std::int64_t g);

/// A rational number with denominator dividing 2, stored as twice its value.
struct HalfInteger {
    std::int64_t twice = 0;

    static HalfInteger whole(std::int64_t v) { return {2 * v}; }
    static HalfInteger half(std::int64_t numerator) { return {numerator}; }
    bool is_integral() const noexcept { return twice % 2 == 0; }
    friend bool operator==(const HalfInteger &, const HalfInteger &) = default;
    std::string to_string() const;
};

/// Powers of K in a direct sum of line bundles.
struct DegreeLedger {
    std::vector<HalfInteger> exponents;

    HalfInteger exponent_sum() const;
    /// deg K^e = e(2g-2) for each exponent; always integral.
    std::vector<std::int64_t> degrees(std::int64_t g) const;
    std::int64_t total_degree(std::int64_t g) const;
};

/// Dimension of P[2] / p^* H^1(Sbar, Z2): 4m(g-1) - 2.
std::int64_t hz_dim(std::int64_t m, std::int64_t g);

/// Exponents of the canonical SL(n,R) bundle: -m..m (n = 2m+1) or -(2m-1)/2..(2m-1)/2 (n = 2m).
DegreeLedger canonical_exponents_sl(std::int64_t n);

/// The maximal isotropic subbundle K^{1/2} + ... + K^{(2m-1)/2} or K + ... + K^m.
DegreeLedger isotropic_exponents_sl(std::int64_t n);

/// m^2(g-1) for n = 2m, m(m+1)(g-1) for n = 2m+1.
std::int64_t canonical_spin_degree(std::int64_t n, std::int64_t g);

int canonical_w2_sl(std::int64_t n, std::int64_t g);

/// W = K^{(2m-1)/2} + K^{(2m-1)/2 - 2} + ... + K^{-(2m-3)/2}.
DegreeLedger canonical_w_exponents_sp(std::int64_t m);

std::int64_t canonical_c1_sp(std::int64_t m, std::int64_t g);

/// Milnor-Wood bound m(g-1) for Sp(2m,R).
std::int64_t milnor_wood_bound(std::int64_t m, std::int64_t g);
bool milnor_wood_sp(std::int64_t m, std::int64_t g, std::int64_t c1);

/// c1(W) = -ell/2 + m(g-1). Throws OddEll for odd ell, ParameterOutOfRange outside [0, 4m(g-1)].
std::int64_t c1_from_ell(std::int64_t m, std::int64_t g, std::int64_t ell);

struct LefschetzDims {
    /// dim H0^+ - dim H0^-
    std::int64_t diff = 0;
    /// dim H0^+ + dim H0^-
    std::int64_t total = 0;
    std::int64_t dim_plus = 0;
    std::int64_t c1 = 0;
};

/// Eigenspace dimensions for L pi^*M under the involution, with deg M = deg_m.
/// Throws ParameterOutOfRange if deg_m is too small for the dimensions to be nonnegative.
LefschetzDims lefschetz_dims(std::int64_t m, std::int64_t g, std::int64_t ell, std::int64_t deg_m);

/// deg pi_* L = deg L + (1 - g_S) + n(g-1).
std::int64_t direct_image_degree(std::int64_t deg_l, std::int64_t n, std::int64_t g);

/// (2g-2) * rk V with rk V = 2m equals the branch count 4m(g-1).
bool dirac_rank_check(std::int64_t m, std::int64_t g);

/// Rank of the exterior power of degree 2k of the rank-4m(g-1) bundle: C(4m(g-1), 2k).
BigInt lambda_rank(std::int64_t m, std::int64_t g, std::int64_t k);

} // namespace chvar::spectral
