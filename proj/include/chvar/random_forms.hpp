#pragma once

// Seeded generators of F2 quadratic forms, shared by the verification suite
// and the property tests.

#include <cstddef>
#include <random>
#include <vector>

#include "chvar/f2_forms.hpp"

namespace chvar::f2 {

/// Rows of a uniformly scrambled invertible matrix (product of elementary operations).
std::vector<F2Vector> random_invertible_basis(std::mt19937_64 &rng, std::size_t dim);

/// Uniform alternating matrix and uniform basis values; usually degenerate for odd dim.
F2QuadraticForm random_form(std::mt19937_64 &rng, std::size_t dim);

/// Nondegenerate form on F2^{2 half_dim} with random Arf invariant, in a random basis.
F2QuadraticForm random_nondegenerate_form(std::mt19937_64 &rng, std::size_t half_dim);

/// Form with a radical of the given dimension on which it vanishes, in a random basis.
/// dim - radical_dim must be even.
F2QuadraticForm random_radical_zero_form(std::mt19937_64 &rng, std::size_t dim, std::size_t radical_dim);

} // namespace chvar::f2
