#pragma once

// Exact counts of order-2 spectral data per characteristic class for the split
// real forms SL(n,R) and Sp(2m,R), with the identities that tie them together.

#include <cstdint>
#include <string>
#include <vector>

#include "chvar/bigint.hpp"
#include "chvar/f2_forms.hpp"

namespace chvar::census {

struct SLCensus {
    std::int64_t n = 0;
    std::int64_t g = 0;
    std::int64_t p = 0;
    BigInt count_w2_0;
    BigInt count_w2_1;
    BigInt total;

    friend bool operator==(const SLCensus &, const SLCensus &) = default;
};

struct SpRow {
    std::int64_t c1 = 0;
    std::int64_t ell = 0;
    BigInt count;

    friend bool operator==(const SpRow &, const SpRow &) = default;
};

struct SpCensus {
    std::int64_t m = 0;
    std::int64_t g = 0;
    /// Ordered from c1 = m(g-1) down to c1 = -m(g-1).
    std::vector<SpRow> rows;

    BigInt row_sum() const;
};

/// Structure of the quadratic function on P[2] for SL(n,R).
struct PrymModelSL {
    std::int64_t total_dim = 0;
    /// 0 for odd n, 2g for even n.
    std::int64_t radical_dim = 0;
    int quotient_arf = 0;
};

/// Closed form for the number of order-2 Prym points with w2 = 0.
SLCensus census_sl(std::int64_t n, std::int64_t g);

PrymModelSL prym_model_sl(std::int64_t n, std::int64_t g);

/// Same counts via the zero count of the model quadratic function.
SLCensus census_sl_via_model(std::int64_t n, std::int64_t g);

inline constexpr std::int64_t kExplicitPrymMaxDim = 20;

/// An explicit form with the model's radical, hyperbolic rank and Arf invariant,
/// written in a scrambled (but deterministic) basis. Throws DimensionTooLarge if 2p > 20.
f2::F2QuadraticForm build_explicit_prym_form(std::int64_t n, std::int64_t g);

SpCensus census_sp(std::int64_t m, std::int64_t g);

/// Element of H(Z): an even subset of {1..N} modulo complementation.
struct HZClass {
    std::int64_t N = 0;
    /// Sorted; the lexicographically smaller of the subset and its complement.
    std::vector<std::int64_t> subset;

    friend bool operator==(const HZClass &, const HZClass &) = default;
};

/// Throws OddSubset for odd cardinality, ParameterOutOfRange for bad elements or odd N.
HZClass hz_orbit(const std::vector<std::int64_t> &subset, std::int64_t N);

/// min(|A|, N - |A|); classes share a symmetric-group orbit iff labels agree.
std::int64_t orbit_label(const HZClass &hz);

/// Number of H(Z) elements carrying a given orbit label.
BigInt orbit_size(std::int64_t N, std::int64_t label);

/// Sum of C(N, l) over l = r mod 4, by direct summation.
BigInt residue_sum_direct(std::int64_t N, int r);

/// Same sum by the filter (1/4) sum_j i^{-jr} (1 + i^j)^N in Gaussian integers.
/// Throws Error if the imaginary part is nonzero or the division is inexact.
BigInt residue_sum_gaussian(std::int64_t N, int r);

/// Both routes; throws Error if they disagree.
BigInt roots_of_unity_filter(std::int64_t N, int r);

struct CrosscheckN2 {
    std::int64_t g = 0;
    std::int64_t N = 0;
    /// C(r) = (1/2) sum_{l = r mod 4} C(N, l) 2^{2g}.
    BigInt count_r0;
    BigInt count_r2;
    BigInt census_w2_0;
    BigInt census_w2_1;
    BigInt closed_plus;  // 2^{6g-7} + 2^{4g-4}
    BigInt closed_minus; // 2^{6g-7} - 2^{4g-4}
    /// Residue the library adopts for w2 = 0: l = 0 mod 4.
    int adopted_residue = 0;
    /// Residue of the literal congruence l = 2g - 2 mod 4.
    int literal_residue = 0;
    BigInt adopted_count;
    BigInt literal_count;
    bool adopted_matches_census = false;
    bool literal_matches_census = false;
    /// Residues in {0, 2} whose count equals the census w2 = 0 value.
    std::vector<int> matching_residues;
    /// "plus", "minus" or "none": which closed form equals the census w2 = 0 value.
    std::string matching_closed_form;
    /// count_r0 + count_r2 == 2^{6(g-1)} == 2^{2p}.
    bool total_consistent = false;
};

CrosscheckN2 crosscheck_n2(std::int64_t g);

/// sum over even l of C(4m(g-1), l) 2^{2q} equals 2 * 2^{2(g_S - g_Sbar)}.
bool sp_total_check(std::int64_t m, std::int64_t g);

/// sum over H(Z) orbits of (orbit size * 2^{2q}) equals |P[2]| = 2^{2p}.
bool hz_preimage_check(std::int64_t m, std::int64_t g);

} // namespace chvar::census
