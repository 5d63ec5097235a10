#pragma once

// Exact integer polynomials in lambda and weighted generators a_1, a_2, ...,
// matrices over that ring, and characteristic polynomials of the canonical
// Higgs fields for SL(n,R) and Sp(2m,R).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chvar/bigint.hpp"

namespace chvar::sym {

/// Exponents of (lambda, a_1, a_2, ...). Trailing zeros are trimmed.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial lambda(std::uint32_t power = 1);
    static Monomial generator(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t var) const noexcept {
        return var < exps_.size() ? exps_[var] : 0;
    }
    std::uint32_t lambda_power() const noexcept { return exponent(0); }
    const std::vector<std::uint32_t> &exponents() const noexcept { return exps_; }
    std::size_t var_count() const noexcept { return exps_.size(); }

    /// lambda has weight 1, a_i has weight i.
    std::uint64_t weight() const noexcept;
    bool is_one() const noexcept { return exps_.empty(); }

    Monomial operator*(const Monomial &other) const;
    friend bool operator==(const Monomial &, const Monomial &) = default;

  private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

/// Graded order: higher weight first, ties broken by descending lexicographic
/// comparison of (lambda, a_1, a_2, ...).
struct GradedOrder {
    bool operator()(const Monomial &lhs, const Monomial &rhs) const;
};

class WeightedPolynomial {
  public:
    using Terms = std::map<Monomial, BigInt, GradedOrder>;

    WeightedPolynomial() = default;
    WeightedPolynomial(std::int64_t constant); // NOLINT(google-explicit-constructor)
    WeightedPolynomial(const BigInt &coefficient, Monomial monomial);

    static WeightedPolynomial lambda();
    /// The generator a_index.
    static WeightedPolynomial a(std::size_t index);

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of one monomial (zero if absent).
    BigInt coefficient(const Monomial &m) const;

    /// Common weight of every term, or nullopt if the terms disagree. Zero polynomial -> 0.
    std::optional<std::uint64_t> homogeneous_weight() const;
    std::uint32_t lambda_degree() const;
    /// Coefficient of lambda^k as a polynomial in the generators only.
    WeightedPolynomial lambda_coefficient(std::uint32_t k) const;
    /// Substitutes lambda -> lambda^power.
    WeightedPolynomial substitute_lambda_power(std::uint32_t power) const;
    /// True if no term involves a generator with index outside `allowed`.
    bool uses_only_generators(std::span<const std::size_t> allowed) const;

    /// values[0] is lambda, values[i] is a_i; missing variables are an error.
    BigInt evaluate(std::span<const BigInt> values) const;

    WeightedPolynomial &operator+=(const WeightedPolynomial &other);
    WeightedPolynomial &operator-=(const WeightedPolynomial &other);
    WeightedPolynomial &operator*=(const WeightedPolynomial &other);
    friend WeightedPolynomial operator+(WeightedPolynomial lhs, const WeightedPolynomial &rhs) { return lhs += rhs; }
    friend WeightedPolynomial operator-(WeightedPolynomial lhs, const WeightedPolynomial &rhs) { return lhs -= rhs; }
    friend WeightedPolynomial operator*(const WeightedPolynomial &lhs, const WeightedPolynomial &rhs);
    WeightedPolynomial operator-() const;
    friend bool operator==(const WeightedPolynomial &, const WeightedPolynomial &) = default;

    /// "lambda^3 - 2*a2*lambda - a3"; generators before lambda inside a term.
    std::string to_string() const;
    /// [{"coeff": "<decimal>", "exponents": [e_lambda, e_a1, ...]}, ...]
    nlohmann::json to_json() const;

  private:
    void add_term(const Monomial &m, const BigInt &c);
    Terms terms_;
};

class SymbolicMatrix {
  public:
    explicit SymbolicMatrix(std::size_t size);
    static SymbolicMatrix identity(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    /// Zero-based indexing.
    const WeightedPolynomial &at(std::size_t row, std::size_t col) const;
    WeightedPolynomial &at(std::size_t row, std::size_t col);

    friend bool operator==(const SymbolicMatrix &, const SymbolicMatrix &) = default;

  private:
    std::size_t size_;
    std::vector<WeightedPolynomial> entries_;
};

/// Monic characteristic polynomial; coefficient(k) multiplies lambda^k.
class CharPoly {
  public:
    explicit CharPoly(std::vector<WeightedPolynomial> coefficients);
    /// Splits a polynomial in lambda and the generators by powers of lambda.
    static CharPoly from_polynomial(const WeightedPolynomial &p);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const WeightedPolynomial &coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<WeightedPolynomial> &coefficients() const noexcept { return coeffs_; }
    bool is_monic() const;
    WeightedPolynomial as_polynomial() const;

    friend bool operator==(const CharPoly &, const CharPoly &) = default;

  private:
    std::vector<WeightedPolynomial> coeffs_;
};

inline constexpr std::size_t kMaxDeterminantSize = 16;

/// Laplace expansion memoized over column subsets. Throws ParameterOutOfRange above 16.
WeightedPolynomial determinant(const SymbolicMatrix &m);

/// Superdiagonal of ones and a_{i-j+1} below the diagonal.
SymbolicMatrix canonical_higgs_sl(std::size_t n);

struct SpHiggs {
    SymbolicMatrix a_block;
    SymbolicMatrix phi;
};

/// A = a_2 on the diagonal, ones above it, a_{2(i-j+1)} below; Phi = [[0, I], [A, 0]].
SpHiggs canonical_higgs_sp(std::size_t m);

/// det(lambda I - M).
CharPoly char_poly_direct(const SymbolicMatrix &m);

/// Constant term of b(x) in a(x) p(x) + b(x) x^n = 1, p(x) = 1 - lambda x + a_2 x^2 + ... + a_n x^n.
CharPoly char_poly_bezout(std::size_t n);

/// lambda^n + a_2 lambda^{n-2} + ... + a_n.
CharPoly companion_char_poly(std::size_t n);

/// det(lambda I - Phi) == det(mu I - A) at mu = lambda^2.
bool verify_sp_factorization(std::size_t m);

/// Recovers generator values a_2..a_n from numerical coefficient values by
/// elimination in weight order. coefficient_values[k] is the value of the
/// lambda^k coefficient. Returns nullopt if the system is not triangular or a division is inexact.
/// Result index i holds a_i (indices 0 and 1 are zero).
std::optional<std::vector<BigInt>> solve_generators(const CharPoly &cp, std::span<const BigInt> coefficient_values);

} // namespace chvar::sym
