#include "chvar/component_census.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "chvar/errors.hpp"
#include "chvar/spectral_invariants.hpp"

namespace chvar::census {

namespace {

void ensure(bool condition, const char *what) {
    if (!condition) {
        throw Error(std::string("internal identity violated: ") + what);
    }
}

int sign_parity(std::int64_t e) { return static_cast<int>(((e % 2) + 2) % 2); }

} // namespace

BigInt SpCensus::row_sum() const {
    BigInt total = 0;
    for (const auto &row : rows) {
        total += row.count;
    }
    return total;
}

SLCensus census_sl(std::int64_t n, std::int64_t g) {
    const auto geo = spectral::geometry(spectral::GroupKind::SL, n, g);
    const std::int64_t p = geo.p;
    SLCensus c{n, g, p, 0, 0, pow2(2 * p)};
    if (n % 2 == 1) {
        c.count_w2_0 = pow2(2 * p - 1) + pow2(p - 1);
    } else {
        const std::int64_t m = n / 2;
        const BigInt correction = pow2(p + g - 1);
        c.count_w2_0 = sign_parity(m * (g - 1)) == 0 ? pow2(2 * p - 1) + correction : pow2(2 * p - 1) - correction;
    }
    c.count_w2_1 = c.total - c.count_w2_0;
    return c;
}

PrymModelSL prym_model_sl(std::int64_t n, std::int64_t g) {
    const auto geo = spectral::geometry(spectral::GroupKind::SL, n, g);
    PrymModelSL model;
    model.total_dim = 2 * geo.p;
    if (n % 2 == 1) {
        // nondegenerate mod 2, and every theta characteristic on S has Arf 0
        model.radical_dim = 0;
        model.quotient_arf = 0;
    } else {
        // pi^* H^1(Sigma, Z2) is the radical; the quotient Arf is m(g-1) mod 2
        model.radical_dim = 2 * g;
        model.quotient_arf = sign_parity((n / 2) * (g - 1));
    }
    return model;
}

SLCensus census_sl_via_model(std::int64_t n, std::int64_t g) {
    const auto model = prym_model_sl(n, g);
    f2::FormClassification cls;
    cls.dim = static_cast<std::size_t>(model.total_dim);
    cls.radical_dim = static_cast<std::size_t>(model.radical_dim);
    cls.q_on_radical_zero = true;
    cls.hyperbolic_rank = static_cast<std::size_t>((model.total_dim - model.radical_dim) / 2);
    cls.arf = model.quotient_arf;

    SLCensus c{n, g, model.total_dim / 2, f2::zero_count(cls), 0, pow2(model.total_dim)};
    c.count_w2_1 = c.total - c.count_w2_0;
    return c;
}

f2::F2QuadraticForm build_explicit_prym_form(std::int64_t n, std::int64_t g) {
    const auto model = prym_model_sl(n, g);
    if (model.total_dim > kExplicitPrymMaxDim) {
        throw DimensionTooLarge("explicit Prym form limited to dimension " + std::to_string(kExplicitPrymMaxDim) +
                                ", (n, g) = (" + std::to_string(n) + ", " + std::to_string(g) + ") needs " +
                                std::to_string(model.total_dim));
    }
    const auto blocks = (model.total_dim - model.radical_dim) / 2;
    auto q = f2::F2QuadraticForm::zero(static_cast<std::size_t>(model.radical_dim));
    for (std::int64_t i = 0; i < blocks; ++i) {
        const bool odd_block = i == blocks - 1 && model.quotient_arf == 1;
        q = f2::direct_sum(q, odd_block ? f2::F2QuadraticForm::anisotropic() : f2::F2QuadraticForm::hyperbolic());
    }

    // Deterministic change of basis: elementary row operations keep it invertible.
    const auto dim = static_cast<std::size_t>(model.total_dim);
    std::vector<f2::F2Vector> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(f2::F2Vector::unit(dim, i));
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(n * 1009 + g));
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    for (std::size_t step = 0; step < 4 * dim; ++step) {
        const auto i = pick(rng);
        const auto j = pick(rng);
        if (i != j) {
            basis[i] += basis[j];
        }
    }
    return f2::restrict_to(q, basis);
}

SpCensus census_sp(std::int64_t m, std::int64_t g) {
    const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
    const std::int64_t branch = *geo.N;
    const BigInt kernel = pow2(2 * *geo.g_Sbar);
    SpCensus census{m, g, {}};
    for (std::int64_t ell = 0; ell <= branch; ell += 2) {
        const std::int64_t c1 = spectral::c1_from_ell(m, g, ell);
        ensure(spectral::milnor_wood_sp(m, g, c1), "census row inside the Milnor-Wood range");
        census.rows.push_back({c1, ell, binomial(branch, ell) * kernel});
    }
    return census;
}

HZClass hz_orbit(const std::vector<std::int64_t> &subset, std::int64_t N) {
    if (N < 0 || N % 2 != 0) {
        throw ParameterOutOfRange("branch set size must be even and nonnegative, got " + std::to_string(N));
    }
    std::set<std::int64_t> members;
    for (auto x : subset) {
        if (x < 1 || x > N) {
            throw ParameterOutOfRange("subset element " + std::to_string(x) + " outside {1.." + std::to_string(N) +
                                      "}");
        }
        if (!members.insert(x).second) {
            throw ParameterOutOfRange("subset element " + std::to_string(x) + " repeated");
        }
    }
    if (members.size() % 2 != 0) {
        throw OddSubset("subset has odd cardinality " + std::to_string(members.size()));
    }
    std::vector<std::int64_t> chosen(members.begin(), members.end());
    std::vector<std::int64_t> complement;
    for (std::int64_t x = 1; x <= N; ++x) {
        if (members.count(x) == 0) {
            complement.push_back(x);
        }
    }
    if (std::lexicographical_compare(complement.begin(), complement.end(), chosen.begin(), chosen.end())) {
        chosen = std::move(complement);
    }
    return {N, std::move(chosen)};
}

std::int64_t orbit_label(const HZClass &hz) {
    const auto size = static_cast<std::int64_t>(hz.subset.size());
    return std::min(size, hz.N - size);
}

BigInt orbit_size(std::int64_t N, std::int64_t label) {
    if (label < 0 || label % 2 != 0 || 2 * label > N) {
        return 0;
    }
    return 2 * label == N ? BigInt(binomial(N, label) / 2) : binomial(N, label);
}

BigInt residue_sum_direct(std::int64_t N, int r) {
    if (N < 0 || r < 0 || r > 3) {
        throw ParameterOutOfRange("residue sum needs N >= 0 and r in {0,1,2,3}");
    }
    BigInt total = 0;
    for (std::int64_t l = r; l <= N; l += 4) {
        total += binomial(N, l);
    }
    return total;
}

BigInt residue_sum_gaussian(std::int64_t N, int r) {
    if (N < 0 || r < 0 || r > 3) {
        throw ParameterOutOfRange("residue sum needs N >= 0 and r in {0,1,2,3}");
    }
    GaussianInt total{0, 0};
    for (int j = 0; j < 4; ++j) {
        const GaussianInt base = GaussianInt{1, 0} + i_power(j);
        total = total + i_power(-static_cast<std::int64_t>(j) * r) * pow(base, static_cast<std::uint64_t>(N));
    }
    if (total.im != 0 || total.re % 4 != 0) {
        throw Error("roots-of-unity filter produced a non-integral value");
    }
    return total.re / 4;
}

BigInt roots_of_unity_filter(std::int64_t N, int r) {
    BigInt direct = residue_sum_direct(N, r);
    if (direct != residue_sum_gaussian(N, r)) {
        throw Error("roots-of-unity filter disagrees with direct summation at N=" + std::to_string(N));
    }
    return direct;
}

CrosscheckN2 crosscheck_n2(std::int64_t g) {
    const auto sl = census_sl(2, g);
    CrosscheckN2 report;
    report.g = g;
    report.N = 4 * (g - 1);
    const BigInt kernel = pow2(2 * g);
    // the halving undoes the W / W* double count
    report.count_r0 = roots_of_unity_filter(report.N, 0) * kernel / 2;
    report.count_r2 = roots_of_unity_filter(report.N, 2) * kernel / 2;
    report.census_w2_0 = sl.count_w2_0;
    report.census_w2_1 = sl.count_w2_1;
    report.closed_plus = pow2(6 * g - 7) + pow2(4 * g - 4);
    report.closed_minus = pow2(6 * g - 7) - pow2(4 * g - 4);
    report.adopted_residue = 0;
    report.literal_residue = static_cast<int>((2 * g - 2) % 4);
    report.adopted_count = report.count_r0;
    report.literal_count = report.literal_residue == 0 ? report.count_r0 : report.count_r2;
    report.adopted_matches_census = report.adopted_count == report.census_w2_0;
    report.literal_matches_census = report.literal_count == report.census_w2_0;
    if (report.count_r0 == report.census_w2_0) {
        report.matching_residues.push_back(0);
    }
    if (report.count_r2 == report.census_w2_0) {
        report.matching_residues.push_back(2);
    }
    if (report.closed_plus == report.census_w2_0) {
        report.matching_closed_form = "plus";
    } else if (report.closed_minus == report.census_w2_0) {
        report.matching_closed_form = "minus";
    } else {
        report.matching_closed_form = "none";
    }
    report.total_consistent = report.count_r0 + report.count_r2 == pow2(6 * (g - 1)) && sl.total == pow2(6 * (g - 1));
    return report;
}

bool sp_total_check(std::int64_t m, std::int64_t g) {
    const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
    const auto census = census_sp(m, g);
    const bool integer_identity = *geo.N - 1 + 2 * *geo.g_Sbar == 2 * geo.p + 1;
    return integer_identity && census.row_sum() == 2 * pow2(2 * geo.p);
}

bool hz_preimage_check(std::int64_t m, std::int64_t g) {
    const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
    const std::int64_t branch = *geo.N;
    const BigInt kernel = pow2(2 * *geo.g_Sbar);
    BigInt classes = 0;
    BigInt total = 0;
    for (std::int64_t label = 0; 2 * label <= branch; label += 2) {
        classes += orbit_size(branch, label);
        total += orbit_size(branch, label) * kernel;
    }
    return classes == pow2(spectral::hz_dim(m, g)) && total == pow2(2 * geo.p);
}

} // namespace chvar::census
