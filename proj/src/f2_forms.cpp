#include "chvar/f2_forms.hpp"

#include <bit>
#include <istream>
#include <sstream>

#include "chvar/errors.hpp"

namespace chvar::f2 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t dim) { return (dim + kWordBits - 1) / kWordBits; }

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

// Row-reduces in place to reduced echelon form, drops zero rows, returns pivot columns.
std::vector<std::size_t> rref(std::vector<F2Vector> &rows, std::size_t dim) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < dim && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(col)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) {
                rows[r] += rows[next];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

} // namespace

// ---- F2Vector ----

F2Vector::F2Vector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

F2Vector::F2Vector(std::initializer_list<int> bits) : F2Vector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) {
        set(i++, b != 0);
    }
}

F2Vector F2Vector::unit(std::size_t dim, std::size_t index) {
    F2Vector v(dim);
    v.set(index, true);
    return v;
}

F2Vector F2Vector::from_mask(std::size_t dim, std::uint64_t mask) {
    F2Vector v(dim);
    for (std::size_t i = 0; i < dim && i < kWordBits; ++i) {
        v.set(i, ((mask >> i) & 1U) != 0);
    }
    return v;
}

bool F2Vector::get(std::size_t i) const {
    if (i >= dim_) {
        throw DimensionMismatch("F2Vector index " + std::to_string(i) + " out of range " + std::to_string(dim_));
    }
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
}

void F2Vector::set(std::size_t i, bool value) {
    if (i >= dim_) {
        throw DimensionMismatch("F2Vector index " + std::to_string(i) + " out of range " + std::to_string(dim_));
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

void F2Vector::flip(std::size_t i) { set(i, !get(i)); }

bool F2Vector::is_zero() const noexcept {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t F2Vector::weight() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::optional<std::size_t> F2Vector::lowest_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return std::nullopt;
}

F2Vector &F2Vector::operator+=(const F2Vector &other) {
    require_same_dim(dim_, other.dim_, "F2Vector addition");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool F2Vector::dot(const F2Vector &other) const {
    require_same_dim(dim_, other.dim_, "F2Vector dot");
    int parity = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        parity ^= std::popcount(words_[w] & other.words_[w]) & 1;
    }
    return parity != 0;
}

std::string F2Vector::to_string() const {
    std::string out;
    out.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out.push_back(get(i) ? '1' : '0');
    }
    return out;
}

// ---- F2BilinearForm ----

F2BilinearForm::F2BilinearForm(std::size_t dim) : rows_(dim, F2Vector(dim)) {}

F2BilinearForm::F2BilinearForm(std::vector<F2Vector> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].dim() != n) {
            throw InvalidForm("bilinear form row " + std::to_string(i) + " has length " +
                              std::to_string(rows_[i].dim()) + ", expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].get(i)) {
            throw InvalidForm("bilinear form has nonzero diagonal entry at " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows_[i].get(j) != rows_[j].get(i)) {
                throw InvalidForm("bilinear form is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            }
        }
    }
}

F2BilinearForm F2BilinearForm::standard_symplectic(std::size_t half_dim) {
    F2BilinearForm b(2 * half_dim);
    for (std::size_t i = 0; i < half_dim; ++i) {
        b.set_pair(2 * i, 2 * i + 1, true);
    }
    return b;
}

void F2BilinearForm::set_pair(std::size_t i, std::size_t j, bool value) {
    if (i == j) {
        throw InvalidForm("alternating form cannot have a diagonal entry");
    }
    rows_.at(i).set(j, value);
    rows_.at(j).set(i, value);
}

bool F2BilinearForm::operator()(const F2Vector &x, const F2Vector &y) const {
    require_same_dim(x.dim(), dim(), "bilinear form argument");
    require_same_dim(y.dim(), dim(), "bilinear form argument");
    bool acc = false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x.get(i)) {
            acc ^= rows_[i].dot(y);
        }
    }
    return acc;
}

std::size_t F2BilinearForm::rank() const {
    auto rows = rows_;
    return rref(rows, dim()).size();
}

// ---- F2QuadraticForm ----

F2QuadraticForm::F2QuadraticForm(F2Vector basis_values, F2BilinearForm form)
    : basis_values_(std::move(basis_values)), form_(std::move(form)) {
    require_same_dim(basis_values_.dim(), form_.dim(), "quadratic form");
}

F2QuadraticForm F2QuadraticForm::hyperbolic() {
    F2BilinearForm b(2);
    b.set_pair(0, 1, true);
    return {F2Vector{0, 0}, b};
}

F2QuadraticForm F2QuadraticForm::anisotropic() {
    F2BilinearForm b(2);
    b.set_pair(0, 1, true);
    return {F2Vector{1, 1}, b};
}

F2QuadraticForm F2QuadraticForm::zero(std::size_t dim) { return {F2Vector(dim), F2BilinearForm(dim)}; }

// ---- operations ----

bool evaluate(const F2QuadraticForm &q, const F2Vector &v) {
    require_same_dim(v.dim(), q.dim(), "evaluate");
    bool acc = v.dot(q.basis_values());
    const auto &b = q.form();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        if (!v.get(i)) {
            continue;
        }
        for (std::size_t j = i + 1; j < q.dim(); ++j) {
            if (v.get(j) && b.at(i, j)) {
                acc = !acc;
            }
        }
    }
    return acc;
}

F2BilinearForm polarize(const F2QuadraticForm &q) {
    const std::size_t n = q.dim();
    F2BilinearForm out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = F2Vector::unit(n, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ej = F2Vector::unit(n, j);
            const bool value = evaluate(q, ei + ej) ^ evaluate(q, ei) ^ evaluate(q, ej);
            out.set_pair(i, j, value);
        }
    }
    return out;
}

std::vector<F2Vector> radical(const F2BilinearForm &b) {
    const std::size_t n = b.dim();
    auto rows = b.rows();
    const auto pivots = rref(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<F2Vector> kernel;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        F2Vector v = F2Vector::unit(n, free);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (rows[r].get(free)) {
                v.set(pivots[r], true);
            }
        }
        kernel.push_back(std::move(v));
    }
    rref(kernel, n);
    return kernel;
}

std::vector<SymplecticPair> symplectic_basis(const F2BilinearForm &b) {
    const std::size_t n = b.dim();
    if (const auto rad = radical(b); !rad.empty()) {
        throw DegenerateForm("symplectic basis requested for a form with radical of dimension " +
                             std::to_string(rad.size()));
    }
    std::vector<F2Vector> remaining;
    remaining.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        remaining.push_back(F2Vector::unit(n, i));
    }

    std::vector<SymplecticPair> pairs;
    while (!remaining.empty()) {
        F2Vector a = remaining.front();
        std::size_t partner = 0;
        for (std::size_t k = 1; k < remaining.size(); ++k) {
            if (b(a, remaining[k])) {
                partner = k;
                break;
            }
        }
        if (partner == 0) {
            throw DegenerateForm("vector " + a.to_string() + " pairs trivially with its complement");
        }
        F2Vector bv = remaining[partner];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        remaining.erase(remaining.begin());
        // project the rest onto the orthogonal complement of span(a, b)
        for (auto &c : remaining) {
            const bool ca = b(c, a);
            const bool cb = b(c, bv);
            if (cb) {
                c += a;
            }
            if (ca) {
                c += bv;
            }
        }
        pairs.push_back({std::move(a), std::move(bv)});
    }
    return pairs;
}

int arf(const F2QuadraticForm &q) {
    int total = 0;
    for (const auto &[a, b] : symplectic_basis(q.form())) {
        total ^= static_cast<int>(evaluate(q, a) && evaluate(q, b));
    }
    return total;
}

FormClassification classify(const F2QuadraticForm &q) {
    const std::size_t n = q.dim();
    auto rad = radical(q.form());
    FormClassification c;
    c.dim = n;
    c.radical_dim = rad.size();
    c.hyperbolic_rank = (n - rad.size()) / 2;
    c.q_on_radical_zero = true;
    for (const auto &r : rad) {
        if (evaluate(q, r)) {
            c.q_on_radical_zero = false;
            break;
        }
    }
    if (!c.q_on_radical_zero) {
        return c;
    }

    // unit vectors at the non-pivot columns of the reduced radical basis span a complement
    std::vector<bool> is_pivot(n, false);
    for (const auto &r : rad) {
        is_pivot[*r.lowest_set()] = true;
    }
    std::vector<F2Vector> complement;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_pivot[i]) {
            complement.push_back(F2Vector::unit(n, i));
        }
    }
    c.arf = arf(restrict_to(q, complement));
    return c;
}

BigInt zero_count(const FormClassification &c) {
    if (!c.q_on_radical_zero) {
        return pow2(static_cast<std::int64_t>(c.dim) - 1);
    }
    const auto r = static_cast<std::int64_t>(c.radical_dim);
    const auto k = static_cast<std::int64_t>(c.hyperbolic_rank);
    if (k == 0) {
        return pow2(r);
    }
    BigInt nondegenerate = pow2(k - 1) * (c.arf.value_or(0) == 0 ? pow2(k) + 1 : pow2(k) - 1);
    return pow2(r) * nondegenerate;
}

BigInt count_zeros(const F2QuadraticForm &q) { return zero_count(classify(q)); }

BigInt brute_force_zeros(const F2QuadraticForm &q) {
    const std::size_t n = q.dim();
    if (n > kBruteForceMaxDim) {
        throw DimensionTooLarge("brute force limited to dimension " + std::to_string(kBruteForceMaxDim) + ", got " +
                                std::to_string(n));
    }
    std::uint32_t linear = 0;
    std::vector<std::uint32_t> upper(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (q.basis_values().get(i)) {
            linear |= 1U << i;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (q.form().at(i, j)) {
                upper[i] |= 1U << j;
            }
        }
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t zeros = 0;
    for (std::uint64_t raw = 0; raw < limit; ++raw) {
        const auto x = static_cast<std::uint32_t>(raw);
        int parity = std::popcount(x & linear);
        for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
            parity += std::popcount(x & upper[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        zeros += static_cast<std::uint64_t>((parity & 1) == 0);
    }
    return BigInt(zeros);
}

F2QuadraticForm direct_sum(const F2QuadraticForm &lhs, const F2QuadraticForm &rhs) {
    const std::size_t n1 = lhs.dim();
    const std::size_t n = n1 + rhs.dim();
    F2Vector values(n);
    F2BilinearForm b(n);
    for (std::size_t i = 0; i < n1; ++i) {
        values.set(i, lhs.basis_values().get(i));
        for (std::size_t j = i + 1; j < n1; ++j) {
            b.set_pair(i, j, lhs.form().at(i, j));
        }
    }
    for (std::size_t i = 0; i < rhs.dim(); ++i) {
        values.set(n1 + i, rhs.basis_values().get(i));
        for (std::size_t j = i + 1; j < rhs.dim(); ++j) {
            b.set_pair(n1 + i, n1 + j, rhs.form().at(i, j));
        }
    }
    return {std::move(values), std::move(b)};
}

F2QuadraticForm restrict_to(const F2QuadraticForm &q, std::span<const F2Vector> basis) {
    const std::size_t k = basis.size();
    F2Vector values(k);
    F2BilinearForm b(k);
    for (std::size_t i = 0; i < k; ++i) {
        values.set(i, evaluate(q, basis[i]));
        for (std::size_t j = i + 1; j < k; ++j) {
            b.set_pair(i, j, q.form()(basis[i], basis[j]));
        }
    }
    return {std::move(values), std::move(b)};
}

bool is_independent(std::span<const F2Vector> vectors) {
    if (vectors.empty()) {
        return true;
    }
    std::vector<F2Vector> rows(vectors.begin(), vectors.end());
    return rref(rows, rows.front().dim()).size() == vectors.size();
}

// ---- text format ----

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream &in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
                ++i;
            }
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

F2Vector parse_bits(const Line &line, std::size_t dim, const char *what) {
    if (line.tokens.size() != dim) {
        const std::size_t column = line.tokens.size() > dim ? line.tokens[dim].column : line.tokens.back().column;
        throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " bits, found " +
                             std::to_string(line.tokens.size()),
                         line.number, column);
    }
    F2Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto &tok = line.tokens[i];
        if (tok.text != "0" && tok.text != "1") {
            throw ParseError(std::string(what) + ": expected 0 or 1, found '" + tok.text + "'", line.number,
                             tok.column);
        }
        v.set(i, tok.text == "1");
    }
    return v;
}

} // namespace

F2QuadraticForm parse_form(std::istream &in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError("empty input, expected the dimension", 1, 1);
    }
    const auto &header = lines.front();
    if (header.tokens.size() != 1) {
        throw ParseError("first line must hold only the dimension", header.number, header.tokens[1].column);
    }
    const auto &dim_text = header.tokens.front().text;
    std::size_t dim = 0;
    for (char ch : dim_text) {
        if (ch < '0' || ch > '9' || dim > 1'000'000) {
            throw ParseError("dimension must be a nonnegative integer, found '" + dim_text + "'", header.number,
                             header.tokens.front().column);
        }
        dim = dim * 10 + static_cast<std::size_t>(ch - '0');
    }
    const std::size_t expected_lines = dim == 0 ? 1 : dim + 2;
    if (lines.size() < expected_lines) {
        const auto &last = lines.back();
        throw ParseError("expected " + std::to_string(expected_lines) + " non-empty lines, found " +
                             std::to_string(lines.size()),
                         last.number + 1, 1);
    }
    if (lines.size() > expected_lines) {
        const auto &extra = lines[expected_lines];
        throw ParseError("unexpected trailing content", extra.number, extra.tokens.front().column);
    }
    if (dim == 0) {
        return F2QuadraticForm::zero(0);
    }
    F2Vector values = parse_bits(lines[1], dim, "basis values");
    std::vector<F2Vector> rows;
    rows.reserve(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        rows.push_back(parse_bits(lines[2 + r], dim, "matrix row"));
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const auto &line = lines[2 + i];
        if (rows[i].get(i)) {
            throw ParseError("diagonal entry must be 0", line.number, line.tokens[i].column);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rows[i].get(j) != rows[j].get(i)) {
                throw ParseError("matrix is not symmetric: entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") differs from its transpose",
                                 line.number, line.tokens[j].column);
            }
        }
    }
    return {std::move(values), F2BilinearForm(std::move(rows))};
}

F2QuadraticForm parse_form(const std::string &text) {
    std::istringstream in(text);
    return parse_form(in);
}

std::string format_form(const F2QuadraticForm &q) {
    std::ostringstream out;
    const std::size_t n = q.dim();
    out << n << '\n';
    auto write_row = [&](const F2Vector &v) {
        for (std::size_t i = 0; i < n; ++i) {
            out << (i == 0 ? "" : " ") << (v.get(i) ? '1' : '0');
        }
        out << '\n';
    };
    if (n == 0) {
        return out.str();
    }
    write_row(q.basis_values());
    for (const auto &row : q.form().rows()) {
        write_row(row);
    }
    return out.str();
}

} // namespace chvar::f2
