#pragma once

// Linear algebra over the two-element field: vectors, alternating bilinear
// forms, quadratic refinements and their Arf classification.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chvar/bigint.hpp"

namespace chvar::f2 {

/// A vector in F2^dim, packed 64 bits per word.
class F2Vector {
  public:
    F2Vector() = default;
    explicit F2Vector(std::size_t dim);
    F2Vector(std::initializer_list<int> bits);

    static F2Vector unit(std::size_t dim, std::size_t index);
    static F2Vector from_mask(std::size_t dim, std::uint64_t mask);

    std::size_t dim() const noexcept { return dim_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;
    /// Lowest index holding a 1, or nullopt for the zero vector.
    std::optional<std::size_t> lowest_set() const noexcept;

    F2Vector &operator+=(const F2Vector &other);
    friend F2Vector operator+(F2Vector lhs, const F2Vector &rhs) { return lhs += rhs; }
    friend bool operator==(const F2Vector &, const F2Vector &) = default;

    /// Standard dot product sum x_i y_i.
    bool dot(const F2Vector &other) const;

    std::string to_string() const;

  private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Symmetric, zero-diagonal (alternating) bilinear form on F2^dim.
class F2BilinearForm {
  public:
    F2BilinearForm() = default;
    /// Zero form.
    explicit F2BilinearForm(std::size_t dim);
    /// Throws InvalidForm unless rows describe a symmetric zero-diagonal matrix.
    explicit F2BilinearForm(std::vector<F2Vector> rows);

    /// Pairs (e_{2i}, e_{2i+1}) with pairing 1, everything else 0.
    static F2BilinearForm standard_symplectic(std::size_t half_dim);

    std::size_t dim() const noexcept { return rows_.size(); }
    bool at(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
    const F2Vector &row(std::size_t i) const { return rows_.at(i); }
    const std::vector<F2Vector> &rows() const noexcept { return rows_; }

    /// Sets B(i,j) = B(j,i) = value; i != j.
    void set_pair(std::size_t i, std::size_t j, bool value);

    bool operator()(const F2Vector &x, const F2Vector &y) const;
    std::size_t rank() const;

    friend bool operator==(const F2BilinearForm &, const F2BilinearForm &) = default;

  private:
    std::vector<F2Vector> rows_;
};

/// q(sum x_i e_i) = sum x_i q(e_i) + sum_{i<j} x_i x_j B(e_i, e_j).
class F2QuadraticForm {
  public:
    F2QuadraticForm() = default;
    F2QuadraticForm(F2Vector basis_values, F2BilinearForm form);

    /// The hyperbolic plane xy.
    static F2QuadraticForm hyperbolic();
    /// The anisotropic plane x^2 + xy + y^2.
    static F2QuadraticForm anisotropic();
    /// Identically zero form on F2^dim (zero bilinear form).
    static F2QuadraticForm zero(std::size_t dim);

    std::size_t dim() const noexcept { return basis_values_.dim(); }
    const F2Vector &basis_values() const noexcept { return basis_values_; }
    const F2BilinearForm &form() const noexcept { return form_; }

    friend bool operator==(const F2QuadraticForm &, const F2QuadraticForm &) = default;

  private:
    F2Vector basis_values_;
    F2BilinearForm form_;
};

struct FormClassification {
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    bool q_on_radical_zero = true;
    std::size_t hyperbolic_rank = 0;
    /// Set only when q vanishes on the radical.
    std::optional<int> arf;
};

/// A symplectic pair (a, b) with B(a, b) = 1.
struct SymplecticPair {
    F2Vector a;
    F2Vector b;
};

bool evaluate(const F2QuadraticForm &q, const F2Vector &v);

F2BilinearForm polarize(const F2QuadraticForm &q);

/// Basis of {x : B(x, y) = 0 for all y} in reduced row echelon form.
std::vector<F2Vector> radical(const F2BilinearForm &b);

/// Deterministic symplectic basis; the lowest-index remaining vector is paired
/// with the lowest-index remaining vector it meets. Throws DegenerateForm.
std::vector<SymplecticPair> symplectic_basis(const F2BilinearForm &b);

/// Sum q(a_i) q(b_i) over a symplectic basis. Throws DegenerateForm.
int arf(const F2QuadraticForm &q);

FormClassification classify(const F2QuadraticForm &q);

/// Closed-form zero count determined by a classification alone.
BigInt zero_count(const FormClassification &c);

BigInt count_zeros(const F2QuadraticForm &q);

inline constexpr std::size_t kBruteForceMaxDim = 24;

/// Exhaustive zero count over all 2^dim vectors. Throws DimensionTooLarge above 24.
BigInt brute_force_zeros(const F2QuadraticForm &q);

F2QuadraticForm direct_sum(const F2QuadraticForm &lhs, const F2QuadraticForm &rhs);

/// Form expressed in the coordinates of the given vectors: the result's e_i is basis[i].
/// The vectors need not span; the result is then the restriction to their span.
F2QuadraticForm restrict_to(const F2QuadraticForm &q, std::span<const F2Vector> basis);

/// True if the rows are linearly independent.
bool is_independent(std::span<const F2Vector> vectors);

/// Text format: dim, basis values, then dim matrix rows, all whitespace-separated bits.
/// Throws ParseError carrying the offending line and column.
F2QuadraticForm parse_form(std::istream &in);
F2QuadraticForm parse_form(const std::string &text);
std::string format_form(const F2QuadraticForm &q);

} // namespace chvar::f2
