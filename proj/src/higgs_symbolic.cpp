#include "chvar/higgs_symbolic.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>


#include "chvar/errors.hpp"

namespace chvar::sym {

// ---- Monomial ----

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::lambda(std::uint32_t power) { return Monomial({power}); }

Monomial Monomial::generator(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
}

std::uint64_t Monomial::weight() const noexcept {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        w += static_cast<std::uint64_t>(exps_[i]) * (i == 0 ? 1 : i);
    }
    return w;
}

Monomial Monomial::operator*(const Monomial &other) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = exponent(i) + other.exponent(i);
    }
    return Monomial(std::move(e));
}

bool GradedOrder::operator()(const Monomial &lhs, const Monomial &rhs) const {
    const auto wl = lhs.weight();
    const auto wr = rhs.weight();
    if (wl != wr) {
        return wl > wr;
    }
    const std::size_t n = std::max(lhs.var_count(), rhs.var_count());
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.exponent(i) != rhs.exponent(i)) {
            return lhs.exponent(i) > rhs.exponent(i);
        }
    }
    return false;
}

// ---- WeightedPolynomial ----

WeightedPolynomial::WeightedPolynomial(std::int64_t constant) {
    if (constant != 0) {
        terms_.emplace(Monomial{}, BigInt(constant));
    }
}

WeightedPolynomial::WeightedPolynomial(const BigInt &coefficient, Monomial monomial) {
    if (coefficient != 0) {
        terms_.emplace(std::move(monomial), coefficient);
    }
}

WeightedPolynomial WeightedPolynomial::lambda() { return {BigInt(1), Monomial::lambda()}; }

WeightedPolynomial WeightedPolynomial::a(std::size_t index) {
    if (index == 0) {
        throw ParameterOutOfRange("generator indices start at 1");
    }
    return {BigInt(1), Monomial::generator(index)};
}

BigInt WeightedPolynomial::coefficient(const Monomial &m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<std::uint64_t> WeightedPolynomial::homogeneous_weight() const {
    if (terms_.empty()) {
        return 0;
    }
    const auto w = terms_.begin()->first.weight();
    for (const auto &[m, c] : terms_) {
        if (m.weight() != w) {
            return std::nullopt;
        }
    }
    return w;
}

std::uint32_t WeightedPolynomial::lambda_degree() const {
    std::uint32_t d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.lambda_power());
    }
    return d;
}

WeightedPolynomial WeightedPolynomial::lambda_coefficient(std::uint32_t k) const {
    WeightedPolynomial out;
    for (const auto &[m, c] : terms_) {
        if (m.lambda_power() == k) {
            auto e = m.exponents();
            e[0] = 0;
            out.add_term(Monomial(std::move(e)), c);
        }
    }
    return out;
}

WeightedPolynomial WeightedPolynomial::substitute_lambda_power(std::uint32_t power) const {
    WeightedPolynomial out;
    for (const auto &[m, c] : terms_) {
        auto e = m.exponents();
        if (!e.empty()) {
            e[0] *= power;
        }
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

bool WeightedPolynomial::uses_only_generators(std::span<const std::size_t> allowed) const {
    for (const auto &[m, c] : terms_) {
        for (std::size_t i = 1; i < m.var_count(); ++i) {
            if (m.exponent(i) != 0 && std::find(allowed.begin(), allowed.end(), i) == allowed.end()) {
                return false;
            }
        }
    }
    return true;
}

BigInt WeightedPolynomial::evaluate(std::span<const BigInt> values) const {
    BigInt total = 0;
    for (const auto &[m, c] : terms_) {
        if (m.var_count() > values.size()) {
            throw DimensionMismatch("evaluate: polynomial uses " + std::to_string(m.var_count()) +
                                    " variables, only " + std::to_string(values.size()) + " supplied");
        }
        BigInt term = c;
        for (std::size_t i = 0; i < m.var_count(); ++i) {
            for (std::uint32_t p = 0; p < m.exponent(i); ++p) {
                term *= values[i];
            }
        }
        total += term;
    }
    return total;
}

void WeightedPolynomial::add_term(const Monomial &m, const BigInt &c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

WeightedPolynomial &WeightedPolynomial::operator+=(const WeightedPolynomial &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

WeightedPolynomial &WeightedPolynomial::operator-=(const WeightedPolynomial &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

WeightedPolynomial operator*(const WeightedPolynomial &lhs, const WeightedPolynomial &rhs) {
    WeightedPolynomial out;
    for (const auto &[ml, cl] : lhs.terms_) {
        for (const auto &[mr, cr] : rhs.terms_) {
            out.add_term(ml * mr, cl * cr);
        }
    }
    return out;
}

WeightedPolynomial &WeightedPolynomial::operator*=(const WeightedPolynomial &other) {
    *this = *this * other;
    return *this;
}

WeightedPolynomial WeightedPolynomial::operator-() const {
    WeightedPolynomial out = *this;
    for (auto &[m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

namespace {

std::string monomial_text(const Monomial &m) {
    std::ostringstream out;
    bool first = true;
    auto factor = [&](const std::string &name, std::uint32_t power) {
        if (power == 0) {
            return;
        }
        out << (first ? "" : "*") << name;
        if (power > 1) {
            out << '^' << power;
        }
        first = false;
    };
    for (std::size_t i = 1; i < m.var_count(); ++i) {
        factor("a" + std::to_string(i), m.exponent(i));
    }
    factor("lambda", m.lambda_power());
    return out.str();
}

} // namespace

std::string WeightedPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        if (m.is_one()) {
            out << magnitude;
        } else {
            if (magnitude != 1) {
                out << magnitude << '*';
            }
            out << monomial_text(m);
        }
        first = false;
    }
    return out.str();
}

nlohmann::json WeightedPolynomial::to_json() const {
    auto out = nlohmann::json::array();
    for (const auto &[m, c] : terms_) {
        out.push_back({{"coeff", to_decimal(c)}, {"exponents", m.exponents()}});
    }
    return out;
}

// ---- SymbolicMatrix ----

SymbolicMatrix::SymbolicMatrix(std::size_t size) : size_(size), entries_(size * size) {}

SymbolicMatrix SymbolicMatrix::identity(std::size_t size) {
    SymbolicMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

const WeightedPolynomial &SymbolicMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= size_ || col >= size_) {
        throw DimensionMismatch("matrix index out of range");
    }
    return entries_[row * size_ + col];
}

WeightedPolynomial &SymbolicMatrix::at(std::size_t row, std::size_t col) {
    if (row >= size_ || col >= size_) {
        throw DimensionMismatch("matrix index out of range");
    }
    return entries_[row * size_ + col];
}

// ---- CharPoly ----

CharPoly::CharPoly(std::vector<WeightedPolynomial> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw ParameterOutOfRange("characteristic polynomial needs at least one coefficient");
    }
    for (const auto &c : coeffs_) {
        if (c.lambda_degree() != 0) {
            throw InvalidForm("characteristic polynomial coefficients must not involve lambda");
        }
    }
}

CharPoly CharPoly::from_polynomial(const WeightedPolynomial &p) {
    const auto d = p.lambda_degree();
    std::vector<WeightedPolynomial> coeffs;
    coeffs.reserve(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) {
        coeffs.push_back(p.lambda_coefficient(k));
    }
    return CharPoly(std::move(coeffs));
}

bool CharPoly::is_monic() const { return coeffs_.back() == WeightedPolynomial(1); }

WeightedPolynomial CharPoly::as_polynomial() const {
    WeightedPolynomial out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out += coeffs_[k] * WeightedPolynomial(BigInt(1), Monomial::lambda(static_cast<std::uint32_t>(k)));
    }
    return out;
}

// ---- determinant and canonical matrices ----

WeightedPolynomial determinant(const SymbolicMatrix &m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n > kMaxDeterminantSize) {
        throw ParameterOutOfRange("determinant limited to size " + std::to_string(kMaxDeterminantSize));
    }
    // minor(used) = determinant of rows popcount(used).. n-1 restricted to the unused columns
    std::unordered_map<std::uint32_t, WeightedPolynomial> memo;
    auto minor = [&](auto &&self, std::uint32_t used) -> WeightedPolynomial {
        const auto row = static_cast<std::size_t>(std::popcount(used));
        if (row == n) {
            return 1;
        }
        if (const auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        WeightedPolynomial total;
        std::size_t position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if ((used >> col) & 1U) {
                continue;
            }
            const auto &entry = m.at(row, col);
            if (!entry.is_zero()) {
                auto term = entry * self(self, used | (1U << col));
                if (position % 2 == 0) {
                    total += term;
                } else {
                    total -= term;
                }
            }
            ++position;
        }
        memo.emplace(used, total);
        return total;
    };
    return minor(minor, 0U);
}

SymbolicMatrix canonical_higgs_sl(std::size_t n) {
    if (n < 2) {
        throw ParameterOutOfRange("canonical SL Higgs field needs n >= 2, got " + std::to_string(n));
    }
    SymbolicMatrix phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) {
            phi.at(i, i + 1) = 1;
        }
        for (std::size_t j = 0; j < i; ++j) {
            phi.at(i, j) = WeightedPolynomial::a(i - j + 1);
        }
    }
    return phi;
}

SpHiggs canonical_higgs_sp(std::size_t m) {
    if (m < 1) {
        throw ParameterOutOfRange("canonical Sp Higgs field needs m >= 1");
    }
    SymbolicMatrix a_block(m);
    for (std::size_t i = 0; i < m; ++i) {
        a_block.at(i, i) = WeightedPolynomial::a(2);
        if (i + 1 < m) {
            a_block.at(i, i + 1) = 1;
        }
        for (std::size_t j = 0; j < i; ++j) {
            a_block.at(i, j) = WeightedPolynomial::a(2 * (i - j + 1));
        }
    }
    SymbolicMatrix phi(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        phi.at(i, m + i) = 1;
        for (std::size_t j = 0; j < m; ++j) {
            phi.at(m + i, j) = a_block.at(i, j);
        }
    }
    return {std::move(a_block), std::move(phi)};
}

CharPoly char_poly_direct(const SymbolicMatrix &m) {
    const std::size_t n = m.size();
    SymbolicMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            shifted.at(i, j) = -m.at(i, j);
        }
        shifted.at(i, i) += WeightedPolynomial::lambda();
    }
    auto cp = CharPoly::from_polynomial(determinant(shifted));
    if (cp.degree() != n) {
        throw Error("characteristic polynomial has unexpected degree");
    }
    return cp;
}

CharPoly char_poly_bezout(std::size_t n) {
    if (n < 2) {
        throw ParameterOutOfRange("Bezout characteristic polynomial needs n >= 2, got " + std::to_string(n));
    }
    // p(x) = 1 - lambda x + a_2 x^2 + ... + a_n x^n
    std::vector<WeightedPolynomial> p(n + 1);
    p[0] = 1;
    p[1] = -WeightedPolynomial::lambda();
    for (std::size_t k = 2; k <= n; ++k) {
        p[k] = WeightedPolynomial::a(k);
    }
    // a(x) = p(x)^{-1} mod x^n, so 1 - a(x)p(x) = b(x) x^n
    std::vector<WeightedPolynomial> inverse(n);
    inverse[0] = 1;
    for (std::size_t j = 1; j < n; ++j) {
        WeightedPolynomial acc;
        for (std::size_t i = 1; i <= j; ++i) {
            acc += p[i] * inverse[j - i];
        }
        inverse[j] = -acc;
    }
    WeightedPolynomial b0;
    for (std::size_t i = 1; i <= n; ++i) {
        b0 -= p[i] * inverse[n - i];
    }
    return CharPoly::from_polynomial(b0);
}

CharPoly companion_char_poly(std::size_t n) {
    if (n < 2) {
        throw ParameterOutOfRange("companion polynomial needs n >= 2, got " + std::to_string(n));
    }
    std::vector<WeightedPolynomial> coeffs(n + 1);
    coeffs[n] = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        coeffs[n - k] = WeightedPolynomial::a(k);
    }
    return CharPoly(std::move(coeffs));
}

bool verify_sp_factorization(std::size_t m) {
    const auto higgs = canonical_higgs_sp(m);
    const auto full = char_poly_direct(higgs.phi).as_polynomial();
    const auto half = char_poly_direct(higgs.a_block).as_polynomial().substitute_lambda_power(2);
    return full == half;
}

std::optional<std::vector<BigInt>> solve_generators(const CharPoly &cp, std::span<const BigInt> coefficient_values) {
    const std::size_t n = cp.degree();
    if (coefficient_values.size() != n + 1) {
        throw DimensionMismatch("solve_generators: expected " + std::to_string(n + 1) + " coefficient values");
    }
    std::vector<BigInt> a(n + 1, 0);
    std::vector<std::size_t> known;
    for (std::size_t k = 2; k <= n; ++k) {
        const auto &c = cp.coefficient(n - k);
        const BigInt lead = c.coefficient(Monomial::generator(k));
        if (lead == 0) {
            return std::nullopt;
        }
        const auto rest = c - WeightedPolynomial(lead, Monomial::generator(k));
        if (!rest.uses_only_generators(known)) {
            return std::nullopt;
        }
        const BigInt residual = coefficient_values[n - k] - rest.evaluate(a);
        if (residual % lead != 0) {
            return std::nullopt;
        }
        a[k] = residual / lead;
        known.push_back(k);
    }
    return a;
}

} // namespace chvar::sym
