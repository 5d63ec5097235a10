#include "chvar/random_forms.hpp"

#include <algorithm>

#include "chvar/errors.hpp"

namespace chvar::f2 {

std::vector<F2Vector> random_invertible_basis(std::mt19937_64 &rng, std::size_t dim) {
    std::vector<F2Vector> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(F2Vector::unit(dim, i));
    }
    if (dim < 2) {
        return basis;
    }
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    for (std::size_t step = 0; step < 4 * dim * dim; ++step) {
        const auto i = pick(rng);
        const auto j = pick(rng);
        if (i != j) {
            basis[i] += basis[j];
        }
    }
    std::shuffle(basis.begin(), basis.end(), rng);
    return basis;
}

F2QuadraticForm random_form(std::mt19937_64 &rng, std::size_t dim) {
    std::bernoulli_distribution coin(0.5);
    F2Vector values(dim);
    F2BilinearForm b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        values.set(i, coin(rng));
        for (std::size_t j = i + 1; j < dim; ++j) {
            b.set_pair(i, j, coin(rng));
        }
    }
    return {std::move(values), std::move(b)};
}

F2QuadraticForm random_nondegenerate_form(std::mt19937_64 &rng, std::size_t half_dim) {
    std::bernoulli_distribution coin(0.5);
    const std::size_t dim = 2 * half_dim;
    F2Vector values(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        values.set(i, coin(rng));
    }
    const F2QuadraticForm canonical(std::move(values), F2BilinearForm::standard_symplectic(half_dim));
    const auto basis = random_invertible_basis(rng, dim);
    return restrict_to(canonical, basis);
}

F2QuadraticForm random_radical_zero_form(std::mt19937_64 &rng, std::size_t dim, std::size_t radical_dim) {
    if (radical_dim > dim || (dim - radical_dim) % 2 != 0) {
        throw ParameterOutOfRange("radical dimension must leave an even-dimensional complement");
    }
    std::bernoulli_distribution coin(0.5);
    const std::size_t half = (dim - radical_dim) / 2;
    F2Vector values(dim);
    for (std::size_t i = radical_dim; i < dim; ++i) {
        values.set(i, coin(rng));
    }
    F2BilinearForm b(dim);
    for (std::size_t k = 0; k < half; ++k) {
        b.set_pair(radical_dim + 2 * k, radical_dim + 2 * k + 1, true);
    }
    const F2QuadraticForm canonical(std::move(values), std::move(b));
    const auto basis = random_invertible_basis(rng, dim);
    return restrict_to(canonical, basis);
}

} // namespace chvar::f2
