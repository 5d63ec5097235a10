#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chvar {

using BigInt = boost::multiprecision::cpp_int;

/// 2^exponent. Negative exponents are rejected.
BigInt pow2(std::int64_t exponent);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

std::string to_decimal(const BigInt &value);

/// Parses an optionally signed decimal string. Throws chvar::Error on malformed input.
BigInt from_decimal(const std::string &text);

/// Gaussian integer a + b*i with unbounded components.
struct GaussianInt {
    BigInt re;
    BigInt im;

    friend GaussianInt operator+(const GaussianInt &x, const GaussianInt &y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussianInt operator*(const GaussianInt &x, const GaussianInt &y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussianInt &, const GaussianInt &) = default;
};

GaussianInt pow(GaussianInt base, std::uint64_t exponent);

/// i^k for any integer k.
GaussianInt i_power(std::int64_t k);

} // namespace chvar
