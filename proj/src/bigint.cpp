#include "chvar/bigint.hpp"

#include "chvar/errors.hpp"

namespace chvar {

BigInt pow2(std::int64_t exponent) {
    if (exponent < 0) {
        throw ParameterOutOfRange("pow2: negative exponent " + std::to_string(exponent));
    }
    BigInt result = 1;
    result <<= static_cast<unsigned>(exponent);
    return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    // result stays an integer: after step i it equals C(n-k+i, i)
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

std::string to_decimal(const BigInt &value) { return value.str(); }

BigInt from_decimal(const std::string &text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        pos = 1;
    }
    if (pos == text.size()) {
        throw Error("not a decimal integer: '" + text + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw Error("not a decimal integer: '" + text + "'");
        }
    }
    BigInt value(text.substr(pos));
    return text[0] == '-' ? BigInt(-value) : value;
}

GaussianInt pow(GaussianInt base, std::uint64_t exponent) {
    GaussianInt result{1, 0};
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

GaussianInt i_power(std::int64_t k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1, 0};
    case 1:
        return {0, 1};
    case 2:
        return {-1, 0};
    default:
        return {0, -1};
    }
}

} // namespace chvar
