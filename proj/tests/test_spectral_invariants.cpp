#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chvar/errors.hpp"
#include "chvar/spectral_invariants.hpp"
#include "oracles.hpp"

using namespace chvar;
using namespace chvar::spectral;

namespace {

std::vector<std::int64_t> twice(const DegreeLedger &l) {
    std::vector<std::int64_t> out;
    for (const auto &e : l.exponents) {
        out.push_back(e.twice);
    }
    return out;
}

} // namespace

TEST_CASE("curve geometry reference values") {
    const auto sl = geometry(GroupKind::SL, 2, 2);
    CHECK(sl.g_S == 5);
    CHECK(sl.p == 3);
    CHECK(!sl.N.has_value());
    const auto sp = geometry(GroupKind::Sp, 1, 2);
    CHECK(sp.g_S == 5);
    CHECK(sp.g_Sbar == 2);
    CHECK(sp.N == 4);
    CHECK(sp.p == 3);
    CHECK_THROWS_AS(geometry(GroupKind::SL, 1, 2), ParameterOutOfRange);
    CHECK_THROWS_AS(geometry(GroupKind::SL, 3, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(geometry(GroupKind::Sp, 0, 2), ParameterOutOfRange);
}

TEST_CASE("Riemann-Hurwitz and Prym dimensions from first principles") {
    for (std::int64_t g = 2; g <= 8; ++g) {
        for (std::int64_t m = 1; m <= 8; ++m) {
            const auto geo = geometry(GroupKind::Sp, m, g);
            // S -> Sbar is a double cover branched at N points
            CHECK(2 - 2 * geo.g_S == 2 * (2 - 2 * *geo.g_Sbar) - *geo.N);
            // spectral curve of a degree-2m cover of Sigma in K
            CHECK(geo.g_S == 4 * m * m * (g - 1) + 1);
            CHECK(geo.p == geo.g_S - *geo.g_Sbar);
            CHECK(2 * geo.p == hz_dim(m, g) + 2 * *geo.g_Sbar);
            CHECK(dirac_rank_check(m, g));
        }
        for (std::int64_t n = 2; n <= 8; ++n) {
            const auto geo = geometry(GroupKind::SL, n, g);
            CHECK(geo.g_S == n * n * (g - 1) + 1);
            CHECK(geo.p == geo.g_S - g);
        }
    }
    CHECK(hz_dim(1, 2) == 2);
    CHECK(hz_dim(2, 3) == 14);
}

TEST_CASE("canonical exponents") {
    CHECK(twice(canonical_exponents_sl(3)) == std::vector<std::int64_t>{-2, 0, 2});
    CHECK(twice(canonical_exponents_sl(2)) == std::vector<std::int64_t>{-1, 1});
    CHECK(twice(canonical_exponents_sl(4)) == std::vector<std::int64_t>{-3, -1, 1, 3});
    CHECK(twice(isotropic_exponents_sl(4)) == std::vector<std::int64_t>{1, 3});
    CHECK(twice(isotropic_exponents_sl(5)) == std::vector<std::int64_t>{2, 4});
    for (std::int64_t n = 2; n <= 10; ++n) {
        CHECK(canonical_exponents_sl(n).exponent_sum() == HalfInteger::whole(0));
        CHECK(canonical_exponents_sl(n).exponents.size() == static_cast<std::size_t>(n));
        CHECK(canonical_exponents_sl(n).total_degree(3) == 0);
    }
    CHECK(canonical_exponents_sl(2).degrees(2) == std::vector<std::int64_t>{-1, 1});
    CHECK(HalfInteger::half(-3).to_string() == "-3/2");
    CHECK(HalfInteger::whole(2).to_string() == "2");
}

TEST_CASE("spin degree and w2") {
    CHECK(canonical_spin_degree(4, 2) == 4);
    CHECK(canonical_spin_degree(3, 3) == 4);
    CHECK(canonical_spin_degree(2, 2) == 1);
    CHECK(canonical_w2_sl(5, 2) == 0);
    CHECK(canonical_w2_sl(5, 3) == 0);
    CHECK(canonical_w2_sl(4, 2) == 0);
    CHECK(canonical_w2_sl(2, 2) == 1);
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (std::int64_t g = 2; g <= 8; ++g) {
            CHECK(canonical_w2_sl(n, g) == canonical_spin_degree(n, g) % 2);
            // isotropic exponent sum times deg K
            CHECK(canonical_spin_degree(n, g) == isotropic_exponents_sl(n).total_degree(g));
            const int expected = n % 2 == 1 ? 0 : (g % 2 == 1 ? 0 : static_cast<int>((n / 2) % 2));
            CHECK(canonical_w2_sl(n, g) == expected);
        }
    }
}

TEST_CASE("Sp characteristic class") {
    CHECK(canonical_c1_sp(1, 2) == 1);
    CHECK(canonical_c1_sp(2, 3) == 4);
    CHECK(canonical_c1_sp(3, 2) == 3);
    CHECK(twice(canonical_w_exponents_sp(2)) == std::vector<std::int64_t>{3, -1});
    CHECK(twice(canonical_w_exponents_sp(3)) == std::vector<std::int64_t>{5, 1, -3});
    CHECK(milnor_wood_bound(3, 4) == 9);
    CHECK(milnor_wood_sp(1, 2, 1));
    CHECK(!milnor_wood_sp(1, 2, 2));
    CHECK(milnor_wood_sp(1, 2, -1));
    CHECK(milnor_wood_sp(5, 5, 0));
}

TEST_CASE("c1 from the fixed-point count") {
    CHECK(c1_from_ell(1, 2, 0) == 1);
    CHECK(c1_from_ell(1, 2, 2) == 0);
    CHECK(c1_from_ell(1, 2, 4) == -1);
    CHECK_THROWS_AS(c1_from_ell(1, 2, 3), OddEll);
    CHECK_THROWS_AS(c1_from_ell(1, 2, 6), ParameterOutOfRange);
    CHECK_THROWS_AS(c1_from_ell(1, 2, -2), ParameterOutOfRange);
    for (std::int64_t m = 1; m <= 5; ++m) {
        for (std::int64_t g = 2; g <= 6; ++g) {
            const auto n_branch = 4 * m * (g - 1);
            for (std::int64_t l = 0; l <= n_branch; l += 2) {
                CHECK(c1_from_ell(m, g, l) + c1_from_ell(m, g, n_branch - l) == 0);
            }
        }
    }
}

TEST_CASE("Lefschetz bookkeeping") {
    const auto d = lefschetz_dims(1, 2, 2, 10);
    CHECK(d.diff == 0);
    CHECK(d.total == 18);
    CHECK(d.dim_plus == 9);
    CHECK(d.c1 == 0);
    for (std::int64_t m = 1; m <= 4; ++m) {
        for (std::int64_t g = 2; g <= 5; ++g) {
            const auto n_branch = 4 * m * (g - 1);
            const auto deg_m = 4 * g;
            CHECK(lefschetz_dims(m, g, 0, deg_m).dim_plus == m * deg_m);
            CHECK(lefschetz_dims(m, g, 0, deg_m).c1 == m * (g - 1));
            CHECK(lefschetz_dims(m, g, n_branch, deg_m).c1 == -m * (g - 1));
            for (std::int64_t l = 0; l <= n_branch; l += 2) {
                const auto x = lefschetz_dims(m, g, l, deg_m);
                CHECK(2 * x.dim_plus == x.diff + x.total);
                CHECK(x.c1 == c1_from_ell(m, g, l));
            }
        }
    }
    CHECK_THROWS_AS(lefschetz_dims(1, 2, 2, -5), ParameterOutOfRange);
}

TEST_CASE("direct image degree") {
    CHECK(direct_image_degree(0, 2, 2) == -2);
    CHECK(direct_image_degree(7, 1, 4) == 7);
    for (std::int64_t n = 1; n <= 8; ++n) {
        for (std::int64_t g = 2; g <= 8; ++g) {
            CHECK(direct_image_degree(n * (n - 1) * (g - 1), n, g) == 0);
            // pi_* O = O + K^-1 + ... + K^-(n-1)
            CHECK(direct_image_degree(0, n, g) == -(2 * g - 2) * n * (n - 1) / 2);
        }
    }
}

TEST_CASE("exterior power ranks") {
    const auto t = oracle::pascal(64);
    CHECK(lambda_rank(1, 2, 0) == 1);
    CHECK(lambda_rank(1, 2, 1) == 6);
    for (std::int64_t m = 1; m <= 4; ++m) {
        for (std::int64_t g = 2; g <= 5; ++g) {
            const auto n_branch = 4 * m * (g - 1);
            for (std::int64_t k = 0; 2 * k <= n_branch; ++k) {
                CHECK(lambda_rank(m, g, k) == t[n_branch][2 * k]);
                CHECK(lambda_rank(m, g, k) == lambda_rank(m, g, n_branch / 2 - k));
            }
        }
    }
    CHECK_THROWS_AS(lambda_rank(1, 2, 3), ParameterOutOfRange);
}
