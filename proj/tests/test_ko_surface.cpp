#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chvar/errors.hpp"
#include "chvar/ko_surface.hpp"
#include "chvar/spectral_invariants.hpp"
#include "oracles.hpp"

using namespace chvar;
using namespace chvar::ko;
using f2::F2Vector;

namespace {

F2Vector random_vector(std::mt19937_64 &rng, std::size_t dim) {
    return F2Vector::from_mask(dim, rng() & ((std::uint64_t{1} << dim) - 1));
}

KOClass random_class(std::mt19937_64 &rng, std::size_t dim) {
    std::uniform_int_distribution<std::int64_t> rank(-20, 20);
    return {rank(rng), random_vector(rng, dim), static_cast<int>(rng() & 1U)};
}

int cup(const SurfaceH1 &s, const F2Vector &x, const F2Vector &y) { return s.intersection()(x, y) ? 1 : 0; }

} // namespace

TEST_CASE("surface construction") {
    CHECK_THROWS_AS(SurfaceH1(1), ParameterOutOfRange);
    const SurfaceH1 s(3);
    CHECK(s.dim() == 6);
    CHECK(s.intersection().rank() == 6);
}

TEST_CASE("group axioms on random classes") {
    std::mt19937_64 rng(21);
    for (int genus = 2; genus <= 5; ++genus) {
        const KOSurface ko{SurfaceH1(genus)};
        const auto d = ko.surface().dim();
        for (int trial = 0; trial < 250; ++trial) {
            const auto a = random_class(rng, d);
            const auto b = random_class(rng, d);
            const auto c = random_class(rng, d);
            REQUIRE(ko.add(ko.add(a, b), c) == ko.add(a, ko.add(b, c)));
            CHECK(ko.add(a, b) == ko.add(b, a));
            CHECK(ko.add(a, ko.zero()) == a);
            CHECK(ko.add(a, ko.negate(a)) == ko.zero());
        }
    }
}

TEST_CASE("addition twists w2 by the cup product") {
    const KOSurface ko{SurfaceH1(2)};
    const SurfaceH1 &s = ko.surface();
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_vector(rng, s.dim());
        const auto y = random_vector(rng, s.dim());
        const auto lhs = ko.alpha(x + y);
        auto rhs = ko.add(ko.add(ko.alpha(x), ko.alpha(y)), ko.negate(ko.unit()));
        if (cup(s, x, y) == 1) {
            rhs = ko.add(rhs, ko.omega());
        }
        CHECK(lhs == rhs);
    }
    CHECK(ko.alpha(F2Vector(4)) == ko.unit());
    CHECK(ko.add(ko.omega(), ko.omega()) == ko.zero());
}

TEST_CASE("class of a bundle") {
    const KOSurface ko{SurfaceH1(3)};
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = 1 + trial % 7;
        const auto w1 = random_vector(rng, 6);
        const int w2 = trial % 2;
        const auto c = ko.class_of_bundle(n, w1, w2);
        CHECK(c.rank == n);
        auto sum = ko.add(ko.alpha(w1), w2 == 1 ? ko.omega() : ko.zero());
        for (std::int64_t k = 1; k < n; ++k) {
            sum = ko.add(sum, ko.unit());
        }
        CHECK(sum == c);
        CHECK(c.w1 == w1);
        CHECK(c.w2 == w2);
    }
    CHECK_THROWS_AS(ko.class_of_bundle(0, F2Vector(6), 0), ParameterOutOfRange);
    CHECK_THROWS_AS(ko.add(ko.zero(), KOClass{0, F2Vector(4), 0}), DimensionMismatch);
}

TEST_CASE("phi is additive exactly for refinements") {
    std::mt19937_64 rng(24);
    for (int genus = 2; genus <= 4; ++genus) {
        const SurfaceH1 s(genus);
        const KOSurface ko{s};
        for (const auto &theta : {ThetaModel(s), ThetaModel::odd(s)}) {
            for (int trial = 0; trial < 200; ++trial) {
                const auto a = random_class(rng, s.dim());
                const auto b = random_class(rng, s.dim());
                CHECK(phi(ko.add(a, b), theta) == (phi(a, theta) + phi(b, theta)) % 2);
            }
            CHECK(phi(ko.omega(), theta) == 1);
            CHECK(phi(ko.unit(), theta) == theta.phi_of_1());
        }
        // a function with the wrong polarization breaks additivity somewhere
        const auto broken = ThetaModel::unchecked(f2::F2QuadraticForm::zero(s.dim()), 0);
        bool additive = true;
        for (std::size_t i = 0; i < s.dim() && additive; ++i) {
            for (std::size_t j = 0; j < s.dim() && additive; ++j) {
                const auto a = ko.alpha(F2Vector::unit(s.dim(), i));
                const auto b = ko.alpha(F2Vector::unit(s.dim(), j));
                additive = phi(ko.add(a, b), broken) == (phi(a, broken) + phi(b, broken)) % 2;
            }
        }
        CHECK(!additive);
    }
}

TEST_CASE("theta models validate refinement") {
    const SurfaceH1 s(2);
    CHECK_THROWS_AS(ThetaModel(s, f2::F2QuadraticForm::zero(4), 0), InvalidForm);
    CHECK(f2::arf(ThetaModel(s).q()) == 0);
    CHECK(f2::arf(ThetaModel::odd(s).q()) == 1);
    // even theta characteristics: 2^(g-1)(2^g+1)
    for (int g = 2; g <= 6; ++g) {
        const SurfaceH1 sg(g);
        CHECK(oracle::naive_zeros(ThetaModel(sg).q()) == (std::uint64_t{1} << (g - 1)) * ((1U << g) + 1));
    }
}

TEST_CASE("theorem w2 reproduces the canonical w2") {
    for (int g = 2; g <= 8; ++g) {
        const ThetaModel theta{SurfaceH1(g)};
        for (std::int64_t n = 2; n <= 8; ++n) {
            const int phi_s = static_cast<int>(spectral::canonical_spin_degree(n, g) % 2);
            CHECK(theorem_w2(phi_s, F2Vector(2 * static_cast<std::size_t>(g)), theta) ==
                  spectral::canonical_w2_sl(n, g));
        }
    }
}
