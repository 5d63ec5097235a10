#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chvar/bigint.hpp"
#include "chvar/errors.hpp"
#include "oracles.hpp"

using namespace chvar;

TEST_CASE("pow2") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(to_decimal(pow2(100)) == "1267650600228229401496703205376");
    CHECK_THROWS_AS(pow2(-1), Error);
}

TEST_CASE("binomial matches Pascal's triangle up to 80") {
    const auto t = oracle::pascal(80);
    for (std::int64_t n = 0; n <= 80; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == t[n][k]);
        }
        CHECK(binomial(n, -1) == 0);
        CHECK(binomial(n, n + 1) == 0);
    }
}

TEST_CASE("decimal round trip") {
    for (const char *s : {"0", "7", "-12", "340282366920938463463374607431768211456"}) {
        CHECK(to_decimal(from_decimal(s)) == s);
    }
    CHECK(from_decimal("+5") == 5);
    CHECK_THROWS_AS(from_decimal(""), Error);
    CHECK_THROWS_AS(from_decimal("12a"), Error);
    CHECK_THROWS_AS(from_decimal("-"), Error);
}

TEST_CASE("gaussian integers") {
    CHECK(i_power(0) == GaussianInt{1, 0});
    CHECK(i_power(1) == GaussianInt{0, 1});
    CHECK(i_power(2) == GaussianInt{-1, 0});
    CHECK(i_power(-1) == GaussianInt{0, -1});
    CHECK(i_power(7) == i_power(-1));
    // (1+i)^2 = 2i, (1+i)^8 = 16
    CHECK(pow(GaussianInt{1, 1}, 2) == GaussianInt{0, 2});
    CHECK(pow(GaussianInt{1, 1}, 8) == GaussianInt{16, 0});
    CHECK(pow(GaussianInt{3, -2}, 0) == GaussianInt{1, 0});
}
