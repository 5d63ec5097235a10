#include "chvar/spectral_invariants.hpp"

#include <numeric>

#include "chvar/errors.hpp"

namespace chvar::spectral {

namespace {

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ParameterOutOfRange(message);
    }
}

void require_genus(std::int64_t g) { require(g >= 2, "genus must be at least 2, got " + std::to_string(g)); }

void require_m(std::int64_t m) { require(m >= 1, "m must be at least 1, got " + std::to_string(m)); }

void require_n(std::int64_t n) { require(n >= 2, "n must be at least 2, got " + std::to_string(n)); }

// Internal consistency failures are bugs, not user errors.
void ensure(bool condition, const char *what) {
    if (!condition) {
        throw Error(std::string("internal identity violated: ") + what);
    }
}

} // namespace

std::string to_string(GroupKind kind) { return kind == GroupKind::SL ? "SL" : "Sp"; }

CurveGeometry geometry(GroupKind kind, std::int64_t rank_param, std::int64_t g) {
    require_genus(g);
    CurveGeometry geo;
    geo.kind = kind;
    geo.rank_param = rank_param;
    geo.g = g;
    if (kind == GroupKind::SL) {
        require_n(rank_param);
        geo.n = rank_param;
        geo.g_S = geo.n * geo.n * (g - 1) + 1;
        geo.p = (g - 1) * (geo.n * geo.n - 1);
        return geo;
    }
    require_m(rank_param);
    const std::int64_t m = rank_param;
    geo.n = 2 * m;
    geo.g_S = geo.n * geo.n * (g - 1) + 1;
    geo.g_Sbar = (2 * m * m - m) * (g - 1) + 1;
    geo.N = 4 * m * (g - 1);
    geo.p = geo.g_S - *geo.g_Sbar;
    ensure(2 - 2 * geo.g_S == 2 * (2 - 2 * *geo.g_Sbar) - *geo.N, "Riemann-Hurwitz");
    ensure(geo.p == (2 * m * m + m) * (g - 1), "Sp Prym dimension");
    return geo;
}

std::string HalfInteger::to_string() const {
    if (is_integral()) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

HalfInteger DegreeLedger::exponent_sum() const {
    HalfInteger sum{0};
    for (const auto &e : exponents) {
        sum.twice += e.twice;
    }
    return sum;
}

std::vector<std::int64_t> DegreeLedger::degrees(std::int64_t g) const {
    std::vector<std::int64_t> out;
    out.reserve(exponents.size());
    for (const auto &e : exponents) {
        // e * (2g - 2) = twice * (g - 1)
        out.push_back(e.twice * (g - 1));
    }
    return out;
}

std::int64_t DegreeLedger::total_degree(std::int64_t g) const {
    const auto d = degrees(g);
    return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

std::int64_t hz_dim(std::int64_t m, std::int64_t g) {
    require_m(m);
    require_genus(g);
    const std::int64_t dim = 4 * m * (g - 1) - 2;
    const auto geo = geometry(GroupKind::Sp, m, g);
    ensure(2 * geo.p == dim + 2 * *geo.g_Sbar, "Prym dimension ledger");
    return dim;
}

DegreeLedger canonical_exponents_sl(std::int64_t n) {
    require_n(n);
    DegreeLedger ledger;
    // twice the exponents run over -(n-1), -(n-3), ..., n-1
    for (std::int64_t t = -(n - 1); t <= n - 1; t += 2) {
        ledger.exponents.push_back(HalfInteger{t});
    }
    return ledger;
}

DegreeLedger isotropic_exponents_sl(std::int64_t n) {
    require_n(n);
    DegreeLedger ledger;
    if (n % 2 == 0) {
        for (std::int64_t t = 1; t <= n - 1; t += 2) {
            ledger.exponents.push_back(HalfInteger::half(t));
        }
    } else {
        for (std::int64_t k = 1; k <= (n - 1) / 2; ++k) {
            ledger.exponents.push_back(HalfInteger::whole(k));
        }
    }
    return ledger;
}

std::int64_t canonical_spin_degree(std::int64_t n, std::int64_t g) {
    require_n(n);
    require_genus(g);
    const std::int64_t m = n / 2;
    const std::int64_t closed = n % 2 == 0 ? m * m * (g - 1) : m * (m + 1) * (g - 1);
    ensure(isotropic_exponents_sl(n).total_degree(g) == closed, "spin degree from isotropic ledger");
    return closed;
}

int canonical_w2_sl(std::int64_t n, std::int64_t g) {
    require_n(n);
    require_genus(g);
    int w2 = 0;
    if (n % 2 == 0) {
        w2 = g % 2 == 1 ? 0 : static_cast<int>((n / 2) % 2);
    }
    ensure(w2 == static_cast<int>(canonical_spin_degree(n, g) % 2), "w2 equals spin degree mod 2");
    return w2;
}

DegreeLedger canonical_w_exponents_sp(std::int64_t m) {
    require_m(m);
    DegreeLedger ledger;
    for (std::int64_t j = 0; j < m; ++j) {
        ledger.exponents.push_back(HalfInteger{(2 * m - 1) - 4 * j});
    }
    return ledger;
}

std::int64_t canonical_c1_sp(std::int64_t m, std::int64_t g) {
    require_m(m);
    require_genus(g);
    const std::int64_t c1 = m * (g - 1);
    const auto ledger = canonical_w_exponents_sp(m);
    ensure(ledger.exponent_sum() == HalfInteger::half(m), "W exponents sum to m/2");
    ensure(ledger.total_degree(g) == c1, "c1(W) from exponent ledger");
    return c1;
}

std::int64_t milnor_wood_bound(std::int64_t m, std::int64_t g) {
    require_m(m);
    require_genus(g);
    return m * (g - 1);
}

bool milnor_wood_sp(std::int64_t m, std::int64_t g, std::int64_t c1) {
    const auto bound = milnor_wood_bound(m, g);
    return -bound <= c1 && c1 <= bound;
}

std::int64_t c1_from_ell(std::int64_t m, std::int64_t g, std::int64_t ell) {
    require_m(m);
    require_genus(g);
    const std::int64_t branch = 4 * m * (g - 1);
    if (ell % 2 != 0) {
        throw OddEll("the number of -1 fixed points must be even, got " + std::to_string(ell));
    }
    require(0 <= ell && ell <= branch,
            "ell must lie in [0, " + std::to_string(branch) + "], got " + std::to_string(ell));
    return -ell / 2 + m * (g - 1);
}

LefschetzDims lefschetz_dims(std::int64_t m, std::int64_t g, std::int64_t ell, std::int64_t deg_m) {
    const std::int64_t expected_c1 = c1_from_ell(m, g, ell);
    const std::int64_t branch = 4 * m * (g - 1);
    LefschetzDims d;
    d.diff = (-ell + (branch - ell)) / 2;
    d.total = 2 * m * (1 - g + deg_m);
    d.dim_plus = -ell / 2 + m * deg_m;
    const std::int64_t dim_minus = d.total - d.dim_plus;
    require(d.total >= 0 && d.dim_plus >= 0 && dim_minus >= 0,
            "degree of M too small for the vanishing assumption: " + std::to_string(deg_m));
    ensure(2 * d.dim_plus == d.diff + d.total, "eigenspace dimensions");
    // dim H0(W M) = m(1-g) + c1(W) + m deg M
    d.c1 = d.dim_plus - (m * (1 - g) + m * deg_m);
    ensure(d.c1 == expected_c1, "Lefschetz c1 agrees with the degree formula");
    return d;
}

std::int64_t direct_image_degree(std::int64_t deg_l, std::int64_t n, std::int64_t g) {
    require(n >= 1, "n must be at least 1, got " + std::to_string(n));
    require_genus(g);
    const std::int64_t g_S = n * n * (g - 1) + 1;
    return deg_l + (1 - g_S) + n * (g - 1);
}

bool dirac_rank_check(std::int64_t m, std::int64_t g) {
    require_m(m);
    require_genus(g);
    const auto geo = geometry(GroupKind::Sp, m, g);
    return (2 * g - 2) * (2 * m) == 4 * m * (g - 1) && 4 * m * (g - 1) == *geo.N;
}

BigInt lambda_rank(std::int64_t m, std::int64_t g, std::int64_t k) {
    require_m(m);
    require_genus(g);
    const std::int64_t branch = 4 * m * (g - 1);
    require(k >= 0 && 2 * k <= branch,
            "exterior degree 2k must lie in [0, " + std::to_string(branch) + "], got " + std::to_string(2 * k));
    BigInt rank = binomial(branch, 2 * k);
    ensure(rank == binomial(branch, branch - 2 * k), "exterior power duality");
    return rank;
}

} // namespace chvar::spectral
