#include "chvar/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "chvar/component_census.hpp"
#include "chvar/errors.hpp"
#include "chvar/f2_forms.hpp"
#include "chvar/higgs_symbolic.hpp"
#include "chvar/ko_surface.hpp"
#include "chvar/random_forms.hpp"
#include "chvar/spectral_invariants.hpp"

namespace chvar::verify {

bool VerifyReport::overall_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

void VerifyReport::add(std::string name, std::string parameters, bool pass, std::string details) {
    checks.push_back({std::move(name), std::move(parameters), pass, std::move(details)});
}

void VerifyReport::append(const VerifyReport &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Suite parse_suite(const std::string &name) {
    if (name == "all") {
        return Suite::All;
    }
    if (name == "f2") {
        return Suite::F2;
    }
    if (name == "ko") {
        return Suite::KO;
    }
    if (name == "symbolic") {
        return Suite::Symbolic;
    }
    if (name == "census") {
        return Suite::Census;
    }
    throw ParameterOutOfRange("unknown suite '" + name + "'");
}

namespace {

// Runs a check body; the body returns an empty string on success or a
// description of the first counterexample.
void run_check(VerifyReport &report, const std::string &name, const std::string &params,
               const std::function<std::string()> &body) {
    try {
        auto failure = body();
        report.add(name, params, failure.empty(), failure);
    } catch (const std::exception &e) {
        report.add(name, params, false, std::string("exception: ") + e.what());
    }
}

std::string range(const char *var, std::int64_t lo, std::int64_t hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

f2::F2Vector random_vector(std::mt19937_64 &rng, std::size_t dim) {
    std::bernoulli_distribution coin(0.5);
    f2::F2Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v.set(i, coin(rng));
    }
    return v;
}

} // namespace

VerifyReport run_f2(const Bounds &bounds) {
    VerifyReport report;
    std::mt19937_64 rng(bounds.seed);
    using namespace f2;

    run_check(report, "polarize==form", "200 random forms, dim<=12", [&]() -> std::string {
        std::uniform_int_distribution<std::size_t> dim_dist(0, 12);
        for (int s = 0; s < 200; ++s) {
            const auto q = random_form(rng, dim_dist(rng));
            if (polarize(q) != q.form()) {
                return "mismatch for form:\n" + format_form(q);
            }
        }
        return {};
    });

    run_check(report, "substitution identity (x^2+xy+y^2)+(u^2+uv+v^2)", "all 16 points of F2^4", []() -> std::string {
        const auto lhs_form = direct_sum(F2QuadraticForm::anisotropic(), F2QuadraticForm::anisotropic());
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            const int x = static_cast<int>(mask & 1U);
            const int y = static_cast<int>((mask >> 1U) & 1U);
            const int u = static_cast<int>((mask >> 2U) & 1U);
            const int v = static_cast<int>((mask >> 3U) & 1U);
            const int rhs = ((x + u) * (x + y + u) + (y + v) * (y + u + v)) % 2;
            const int lhs = static_cast<int>(evaluate(lhs_form, F2Vector::from_mask(4, mask)));
            if (lhs != rhs) {
                return "differs at (x,y,u,v)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                       std::to_string(u) + "," + std::to_string(v) + ")";
            }
        }
        return {};
    });

    run_check(report, "canonical planes", "xy and x^2+xy+y^2", []() -> std::string {
        const auto h = F2QuadraticForm::hyperbolic();
        const auto a = F2QuadraticForm::anisotropic();
        if (arf(h) != 0 || count_zeros(h) != 3) {
            return "xy should have arf 0 and 3 zeros";
        }
        if (arf(a) != 1 || count_zeros(a) != 1) {
            return "x^2+xy+y^2 should have arf 1 and 1 zero";
        }
        return {};
    });

    run_check(report, "arf basis independence", "100 nondegenerate forms, dim<=12", [&]() -> std::string {
        std::uniform_int_distribution<std::size_t> half(1, 6);
        for (int s = 0; s < 100; ++s) {
            const auto q = random_nondegenerate_form(rng, half(rng));
            const auto moved = restrict_to(q, random_invertible_basis(rng, q.dim()));
            if (arf(q) != arf(moved)) {
                return "arf changed under change of basis for:\n" + format_form(q);
            }
        }
        return {};
    });

    run_check(report, "count_zeros==brute_force_zeros", "200 forms, dim<=16 incl. degenerate", [&]() -> std::string {
        std::uniform_int_distribution<std::size_t> dim_dist(0, 16);
        for (int s = 0; s < 200; ++s) {
            const auto dim = dim_dist(rng);
            F2QuadraticForm q;
            if (s % 2 == 0) {
                q = random_form(rng, dim);
            } else {
                std::uniform_int_distribution<std::size_t> rad(0, dim / 2);
                const auto r = std::min(dim, 2 * rad(rng) + dim % 2);
                q = random_radical_zero_form(rng, dim, r);
            }
            if (count_zeros(q) != brute_force_zeros(q)) {
                return "closed form " + to_decimal(count_zeros(q)) + " vs brute force " +
                       to_decimal(brute_force_zeros(q)) + " for:\n" + format_form(q);
            }
        }
        return {};
    });

    run_check(report, "arf additivity under direct sum", "100 pairs, dim<=8", [&]() -> std::string {
        std::uniform_int_distribution<std::size_t> half(1, 4);
        for (int s = 0; s < 100; ++s) {
            const auto q1 = random_nondegenerate_form(rng, half(rng));
            const auto q2 = random_nondegenerate_form(rng, half(rng));
            if (arf(direct_sum(q1, q2)) != (arf(q1) ^ arf(q2))) {
                return "additivity fails";
            }
        }
        return {};
    });

    run_check(report, "zero count restated as 2^(d-1) + (-1)^arf 2^((d+r)/2-1)", "100 radical-zero forms, dim<=16",
              [&]() -> std::string {
                  std::uniform_int_distribution<std::size_t> dim_dist(1, 16);
                  for (int s = 0; s < 100; ++s) {
                      const auto dim = dim_dist(rng);
                      std::uniform_int_distribution<std::size_t> rad(0, dim / 2);
                      const auto r = std::min(dim, 2 * rad(rng) + dim % 2);
                      const auto q = random_radical_zero_form(rng, dim, r);
                      const auto c = classify(q);
                      const auto d = static_cast<std::int64_t>(dim);
                      const auto rd = static_cast<std::int64_t>(c.radical_dim);
                      const BigInt correction = pow2((d + rd) / 2 - 1);
                      const BigInt expected = c.arf.value_or(0) == 0 ? pow2(d - 1) + correction : pow2(d - 1) - correction;
                      if (!c.q_on_radical_zero || brute_force_zeros(q) != expected) {
                          return "restatement fails for:\n" + format_form(q);
                      }
                  }
                  return {};
              });
    return report;
}

VerifyReport run_ko(const Bounds &bounds) {
    VerifyReport report;
    std::mt19937_64 rng(bounds.seed + 1);
    std::uniform_int_distribution<int> genus_dist(2, 5);
    std::uniform_int_distribution<std::int64_t> rank_dist(-6, 6);
    std::bernoulli_distribution coin(0.5);

    auto random_class = [&](const ko::KOSurface &ring) {
        return ko::KOClass{rank_dist(rng), random_vector(rng, ring.surface().dim()), coin(rng) ? 1 : 0};
    };

    run_check(report, "KO associativity", "1000 random triples, g=2..5", [&]() -> std::string {
        for (int s = 0; s < 1000; ++s) {
            const ko::KOSurface ring(ko::SurfaceH1(genus_dist(rng)));
            const auto a = random_class(ring);
            const auto b = random_class(ring);
            const auto c = random_class(ring);
            if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
                return "associativity fails";
            }
        }
        return {};
    });

    run_check(report, "KO commutativity, identity and inverse", "1000 random pairs, g=2..5", [&]() -> std::string {
        for (int s = 0; s < 1000; ++s) {
            const ko::KOSurface ring(ko::SurfaceH1(genus_dist(rng)));
            const auto a = random_class(ring);
            const auto b = random_class(ring);
            if (ring.add(a, b) != ring.add(b, a)) {
                return "commutativity fails";
            }
            if (ring.add(a, ring.zero()) != a || ring.add(a, ring.negate(a)) != ring.zero()) {
                return "identity or inverse fails";
            }
        }
        return {};
    });

    run_check(report, "alpha(x+y) = alpha(x) + alpha(y) - 1 + <x,y> Omega", "500 random pairs", [&]() -> std::string {
        for (int s = 0; s < 500; ++s) {
            const ko::KOSurface ring(ko::SurfaceH1(genus_dist(rng)));
            const auto dim = ring.surface().dim();
            const auto x = random_vector(rng, dim);
            const auto y = random_vector(rng, dim);
            auto rhs = ring.add(ring.add(ring.alpha(x), ring.alpha(y)), ring.negate(ring.unit()));
            if (ring.surface().intersection()(x, y)) {
                rhs = ring.add(rhs, ring.omega());
            }
            if (rhs != ring.alpha(x + y)) {
                return "rule fails";
            }
        }
        return {};
    });

    run_check(report, "class_of_bundle == (n-1) + alpha(w1) + w2 Omega", "100 random inputs", [&]() -> std::string {
        std::uniform_int_distribution<std::int64_t> n_dist(1, 8);
        for (int s = 0; s < 100; ++s) {
            const ko::KOSurface ring(ko::SurfaceH1(genus_dist(rng)));
            const auto n = n_dist(rng);
            const auto w1 = random_vector(rng, ring.surface().dim());
            const int w2 = coin(rng) ? 1 : 0;
            auto expansion = ring.alpha(w1);
            for (std::int64_t i = 1; i < n; ++i) {
                expansion = ring.add(expansion, ring.unit());
            }
            if (w2 == 1) {
                expansion = ring.add(expansion, ring.omega());
            }
            if (ring.class_of_bundle(n, w1, w2) != expansion) {
                return "expansion mismatch at n=" + std::to_string(n);
            }
        }
        return {};
    });

    run_check(report, "phi additive for quadratic refinements", "500 pairs, even and odd models", [&]() -> std::string {
        for (int s = 0; s < 500; ++s) {
            const ko::SurfaceH1 surface(genus_dist(rng));
            const ko::KOSurface ring(surface);
            const auto theta = coin(rng) ? ko::ThetaModel(surface) : ko::ThetaModel::odd(surface);
            const auto a = random_class(ring);
            const auto b = random_class(ring);
            if (ko::phi(ring.add(a, b), theta) != (ko::phi(a, theta) ^ ko::phi(b, theta))) {
                return "additivity fails";
            }
        }
        return {};
    });

    run_check(report, "phi not additive for a non-refinement", "g=2..5, zero bilinear form", [&]() -> std::string {
        for (int g = 2; g <= 5; ++g) {
            const ko::SurfaceH1 surface(g);
            const ko::KOSurface ring(surface);
            // a linear functional polarizes to zero, not to the intersection form
            const auto broken = ko::ThetaModel::unchecked(f2::F2QuadraticForm::zero(surface.dim()), 0);
            bool found = false;
            for (std::size_t i = 0; i < surface.dim() && !found; ++i) {
                for (std::size_t j = 0; j < surface.dim() && !found; ++j) {
                    const auto a = ring.alpha(f2::F2Vector::unit(surface.dim(), i));
                    const auto b = ring.alpha(f2::F2Vector::unit(surface.dim(), j));
                    found = ko::phi(ring.add(a, b), broken) != (ko::phi(a, broken) ^ ko::phi(b, broken));
                }
            }
            if (!found) {
                return "broken model unexpectedly additive at g=" + std::to_string(g);
            }
        }
        return {};
    });

    run_check(report, "phi(Omega)=1, phi(1)=0, phi(alpha(x))=q(x)", "g=2..5", [&]() -> std::string {
        for (int g = 2; g <= 5; ++g) {
            const ko::SurfaceH1 surface(g);
            const ko::KOSurface ring(surface);
            const ko::ThetaModel theta(surface);
            if (ko::phi(ring.omega(), theta) != 1 || ko::phi(ring.unit(), theta) != 0) {
                return "values on Omega or 1 wrong at g=" + std::to_string(g);
            }
            for (int s = 0; s < 50; ++s) {
                const auto x = random_vector(rng, surface.dim());
                if (ko::phi(ring.alpha(x), theta) != static_cast<int>(f2::evaluate(theta.q(), x))) {
                    return "phi(alpha(x)) differs from q(x)";
                }
            }
        }
        return {};
    });

    run_check(report, "default theta: arf 0 and 2^(g-1)(2^g+1) zeros", "g=2..6", []() -> std::string {
        for (int g = 2; g <= 6; ++g) {
            const ko::ThetaModel theta{ko::SurfaceH1(g)};
            const BigInt expected = pow2(g - 1) * (pow2(g) + 1);
            if (f2::arf(theta.q()) != 0 || theta.phi_of_1() != 0 || f2::count_zeros(theta.q()) != expected ||
                f2::brute_force_zeros(theta.q()) != expected) {
                return "default theta model wrong at g=" + std::to_string(g);
            }
        }
        return {};
    });

    run_check(report, "theorem_w2 at w1=0 matches canonical w2",
              range("n", 2, bounds.max_rank) + ", " + range("g", 2, bounds.max_g), [&]() -> std::string {
                  for (std::int64_t g = 2; g <= bounds.max_g; ++g) {
                      const ko::SurfaceH1 surface(static_cast<int>(g));
                      const ko::ThetaModel theta(surface);
                      for (std::int64_t n = 2; n <= bounds.max_rank; ++n) {
                          const int phi_s = static_cast<int>(spectral::canonical_spin_degree(n, g) % 2);
                          if (ko::theorem_w2(phi_s, f2::F2Vector(surface.dim()), theta) !=
                              spectral::canonical_w2_sl(n, g)) {
                              return "mismatch at n=" + std::to_string(n) + ", g=" + std::to_string(g);
                          }
                      }
                  }
                  return {};
              });
    return report;
}

VerifyReport run_symbolic(const Bounds &bounds) {
    VerifyReport report;
    std::mt19937_64 rng(bounds.seed + 2);
    using namespace sym;
    const auto max_n = static_cast<std::size_t>(bounds.max_symbolic_n);

    run_check(report, "bezout==direct", "n=2.." + std::to_string(max_n), [&]() -> std::string {
        for (std::size_t n = 2; n <= max_n; ++n) {
            if (char_poly_bezout(n) != char_poly_direct(canonical_higgs_sl(n))) {
                return "routes differ at n=" + std::to_string(n);
            }
        }
        return {};
    });

    run_check(report, "companion polynomial differs from the actual one", "n=3", []() -> std::string {
        if (companion_char_poly(3) == char_poly_direct(canonical_higgs_sl(3))) {
            return "companion polynomial unexpectedly equal";
        }
        return {};
    });

    run_check(report, "sp factorization det(lambda-Phi)=det(lambda^2-A)", "m=1..4", []() -> std::string {
        for (std::size_t m = 1; m <= 4; ++m) {
            if (!verify_sp_factorization(m)) {
                return "fails at m=" + std::to_string(m);
            }
        }
        return {};
    });

    run_check(report, "monic, trace zero, weight homogeneous", "n=2.." + std::to_string(max_n), [&]() -> std::string {
        for (std::size_t n = 2; n <= max_n; ++n) {
            const auto cp = char_poly_direct(canonical_higgs_sl(n));
            if (!cp.is_monic() || !cp.coefficient(n - 1).is_zero()) {
                return "not monic or not trace free at n=" + std::to_string(n);
            }
            for (std::size_t k = 0; k <= n; ++k) {
                const auto w = cp.coefficient(n - k).homogeneous_weight();
                if (!w || (!cp.coefficient(n - k).is_zero() && *w != k)) {
                    return "coefficient of lambda^" + std::to_string(n - k) + " not of weight " + std::to_string(k);
                }
            }
        }
        return {};
    });

    run_check(report, "sp characteristic polynomial even and homogeneous", "m=1..4", []() -> std::string {
        for (std::size_t m = 1; m <= 4; ++m) {
            const auto cp = char_poly_direct(canonical_higgs_sp(m).phi);
            for (std::size_t k = 0; k <= 2 * m; ++k) {
                const auto &c = cp.coefficient(2 * m - k);
                if (k % 2 == 1 && !c.is_zero()) {
                    return "odd power of lambda at m=" + std::to_string(m);
                }
                const auto w = c.homogeneous_weight();
                if (!w || (!c.is_zero() && *w != k)) {
                    return "inhomogeneous coefficient at m=" + std::to_string(m);
                }
            }
        }
        return {};
    });

    run_check(report, "canonical SL Higgs field is persymmetric", "n=2..8", []() -> std::string {
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto phi = canonical_higgs_sl(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (phi.at(i, j) != phi.at(n - 1 - j, n - 1 - i)) {
                        return "fails at n=" + std::to_string(n);
                    }
                }
            }
        }
        return {};
    });

    run_check(report, "generators recovered from coefficients by triangular elimination", "n=2..5, 20 samples each",
              [&]() -> std::string {
                  std::uniform_int_distribution<int> value(-9, 9);
                  for (std::size_t n = 2; n <= 5; ++n) {
                      const auto cp = char_poly_direct(canonical_higgs_sl(n));
                      for (int s = 0; s < 20; ++s) {
                          std::vector<BigInt> a(n + 1, 0);
                          for (std::size_t k = 2; k <= n; ++k) {
                              a[k] = value(rng);
                          }
                          std::vector<BigInt> coeff_values;
                          for (std::size_t k = 0; k <= n; ++k) {
                              coeff_values.push_back(cp.coefficient(k).evaluate(a));
                          }
                          const auto solved = solve_generators(cp, coeff_values);
                          if (!solved || *solved != a) {
                              return "solve-back failed at n=" + std::to_string(n);
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "polynomial ring axioms", "100 random triples", [&]() -> std::string {
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::uniform_int_distribution<std::uint32_t> expo(0, 2);
        auto random_poly = [&]() {
            WeightedPolynomial p;
            for (int t = 0; t < 4; ++t) {
                p += WeightedPolynomial(BigInt(coeff(rng)), Monomial({expo(rng), 0, expo(rng), expo(rng)}));
            }
            return p;
        };
        for (int s = 0; s < 100; ++s) {
            const auto x = random_poly();
            const auto y = random_poly();
            const auto z = random_poly();
            if ((x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z || (x + y) + z != x + (y + z) ||
                x * y != y * x || x - x != WeightedPolynomial()) {
                return "axiom fails for " + x.to_string() + ", " + y.to_string() + ", " + z.to_string();
            }
        }
        return {};
    });
    return report;
}

VerifyReport run_census(const Bounds &bounds) {
    VerifyReport report;
    using namespace census;
    const std::int64_t max_g = bounds.max_g;
    const std::int64_t model_g = std::min<std::int64_t>(max_g, 6);

    run_check(report, "census_sl==census_sl_via_model", range("n", 2, 6) + ", " + range("g", 2, model_g),
              [&]() -> std::string {
                  for (std::int64_t n = 2; n <= 6; ++n) {
                      for (std::int64_t g = 2; g <= model_g; ++g) {
                          const auto a = census_sl(n, g);
                          const auto b = census_sl_via_model(n, g);
                          if (a != b || a.count_w2_0 + a.count_w2_1 != pow2(2 * a.p)) {
                              return "routes differ at n=" + std::to_string(n) + ", g=" + std::to_string(g);
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "census_sl reference values", "(3,2)->32896, (2,3)->2304, (2,2)->16", []() -> std::string {
        if (census_sl(3, 2).count_w2_0 != 32896 || census_sl(2, 3).count_w2_0 != 2304 ||
            census_sl(2, 2).count_w2_0 != 16) {
            return "reference value mismatch";
        }
        return {};
    });

    run_check(report, "explicit Prym forms reproduce census_sl by enumeration", "(n,g) in {(2,2),(2,3),(3,2)}",
              []() -> std::string {
                  for (auto [n, g] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {3, 2}}) {
                      const auto q = build_explicit_prym_form(n, g);
                      const auto c = census_sl(n, g);
                      if (static_cast<std::int64_t>(q.dim()) != 2 * c.p || f2::brute_force_zeros(q) != c.count_w2_0) {
                          return "mismatch at n=" + std::to_string(n) + ", g=" + std::to_string(g);
                      }
                  }
                  return {};
              });

    run_check(report, "sp_total_check", range("m", 1, 5) + ", " + range("g", 2, max_g), [&]() -> std::string {
        for (std::int64_t m = 1; m <= 5; ++m) {
            for (std::int64_t g = 2; g <= max_g; ++g) {
                if (!sp_total_check(m, g)) {
                    return "fails at m=" + std::to_string(m) + ", g=" + std::to_string(g);
                }
            }
        }
        return {};
    });

    run_check(report, "census_sp(1,2) rows", "16/96/16", []() -> std::string {
        const auto c = census_sp(1, 2);
        const std::vector<SpRow> expected{{1, 0, 16}, {0, 2, 96}, {-1, 4, 16}};
        return c.rows == expected ? std::string{} : std::string("unexpected rows");
    });

    run_check(report, "sp census symmetry, maximal rows and Milnor-Wood",
              range("m", 1, 5) + ", " + range("g", 2, max_g), [&]() -> std::string {
                  for (std::int64_t m = 1; m <= 5; ++m) {
                      for (std::int64_t g = 2; g <= max_g; ++g) {
                          const auto c = census_sp(m, g);
                          const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
                          const auto bound = m * (g - 1);
                          if (static_cast<std::int64_t>(c.rows.size()) != 2 * bound + 1) {
                              return "row count wrong";
                          }
                          for (std::size_t i = 0; i < c.rows.size(); ++i) {
                              const auto &row = c.rows[i];
                              const auto &mirror = c.rows[c.rows.size() - 1 - i];
                              if (row.count != mirror.count || row.c1 != -mirror.c1 ||
                                  !spectral::milnor_wood_sp(m, g, row.c1) || row.ell != 2 * (bound - row.c1)) {
                                  return "row invariant fails at m=" + std::to_string(m) + ", g=" + std::to_string(g);
                              }
                          }
                          if (c.rows.front().count != pow2(2 * *geo.g_Sbar)) {
                              return "maximal row is not 2^(2q)";
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "n=2 cross-check: l=0 mod 4 reproduces the SL(2,R) census", range("g", 2, max_g),
              [&]() -> std::string {
                  for (std::int64_t g = 2; g <= max_g; ++g) {
                      const auto r = crosscheck_n2(g);
                      const std::string expected_form = (g - 1) % 2 == 0 ? "plus" : "minus";
                      if (!r.adopted_matches_census || r.matching_residues != std::vector<int>{0} ||
                          r.matching_closed_form != expected_form || !r.total_consistent) {
                          return "fails at g=" + std::to_string(g);
                      }
                  }
                  return {};
              });

    run_check(report, "roots-of-unity filter equals direct summation", "N=0..64, r=0..3", []() -> std::string {
        for (std::int64_t N = 0; N <= 64; ++N) {
            for (int r = 0; r < 4; ++r) {
                if (residue_sum_direct(N, r) != residue_sum_gaussian(N, r)) {
                    return "disagree at N=" + std::to_string(N) + ", r=" + std::to_string(r);
                }
            }
        }
        return {};
    });

    run_check(report, "H(Z) orbit preimages account for P[2]", range("m", 1, 5) + ", " + range("g", 2, max_g),
              [&]() -> std::string {
                  for (std::int64_t m = 1; m <= 5; ++m) {
                      for (std::int64_t g = 2; g <= max_g; ++g) {
                          if (!hz_preimage_check(m, g)) {
                              return "fails at m=" + std::to_string(m) + ", g=" + std::to_string(g);
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "geometry ledger (Riemann-Hurwitz, hz_dim, Dirac rank, Prym factorization)",
              range("m", 1, bounds.max_rank) + ", " + range("g", 2, max_g), [&]() -> std::string {
                  for (std::int64_t m = 1; m <= bounds.max_rank; ++m) {
                      for (std::int64_t g = 2; g <= max_g; ++g) {
                          const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
                          const bool rh = 2 - 2 * geo.g_S == 2 * (2 - 2 * *geo.g_Sbar) - *geo.N;
                          const bool ledger = 2 * geo.p == spectral::hz_dim(m, g) + 2 * *geo.g_Sbar;
                          const bool prym = geo.p == (g - 1) * m * (2 * m + 1);
                          if (!rh || !ledger || !prym || !spectral::dirac_rank_check(m, g)) {
                              return "fails at m=" + std::to_string(m) + ", g=" + std::to_string(g);
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "canonical w2 == spin degree mod 2; direct image of U K^((n-1)/2) has degree 0",
              range("n", 2, std::max<std::int64_t>(bounds.max_rank, 10)) + ", " + range("g", 2, max_g),
              [&]() -> std::string {
                  for (std::int64_t n = 2; n <= std::max<std::int64_t>(bounds.max_rank, 10); ++n) {
                      for (std::int64_t g = 2; g <= max_g; ++g) {
                          if (spectral::canonical_w2_sl(n, g) != spectral::canonical_spin_degree(n, g) % 2 ||
                              spectral::direct_image_degree(n * (n - 1) * (g - 1), n, g) != 0 ||
                              spectral::canonical_exponents_sl(n).exponent_sum().twice != 0) {
                              return "fails at n=" + std::to_string(n) + ", g=" + std::to_string(g);
                          }
                      }
                  }
                  return {};
              });

    run_check(report, "c1(l) + c1(N-l) = 0 and Lefschetz bookkeeping",
              range("m", 1, bounds.max_rank) + ", " + range("g", 2, max_g), [&]() -> std::string {
                  for (std::int64_t m = 1; m <= bounds.max_rank; ++m) {
                      for (std::int64_t g = 2; g <= max_g; ++g) {
                          const auto branch = 4 * m * (g - 1);
                          for (std::int64_t ell = 0; ell <= branch; ell += 2) {
                              const auto c1 = spectral::c1_from_ell(m, g, ell);
                              if (c1 + spectral::c1_from_ell(m, g, branch - ell) != 0 ||
                                  spectral::lefschetz_dims(m, g, ell, 4 * g).c1 != c1) {
                                  return "fails at m=" + std::to_string(m) + ", g=" + std::to_string(g) +
                                         ", l=" + std::to_string(ell);
                              }
                          }
                          if (spectral::canonical_c1_sp(m, g) != spectral::c1_from_ell(m, g, 0)) {
                              return "canonical c1 is not the l=0 value";
                          }
                      }
                  }
                  return {};
              });
    return report;
}

VerifyReport run(Suite suite, const Bounds &bounds) {
    switch (suite) {
    case Suite::F2:
        return run_f2(bounds);
    case Suite::KO:
        return run_ko(bounds);
    case Suite::Symbolic:
        return run_symbolic(bounds);
    case Suite::Census:
        return run_census(bounds);
    case Suite::All:
        break;
    }
    VerifyReport report = run_f2(bounds);
    report.append(run_ko(bounds));
    report.append(run_symbolic(bounds));
    report.append(run_census(bounds));
    return report;
}

} // namespace chvar::verify
