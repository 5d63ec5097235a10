// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "chvar/component_census.hpp"
#include "chvar/f2_forms.hpp"
#include "chvar/higgs_symbolic.hpp"
#include "chvar/ko_surface.hpp"
#include "chvar/random_forms.hpp"
#include "chvar/spectral_invariants.hpp"
#include "oracles.hpp"

using namespace chvar;

namespace {

int failures = 0;

// body returns an empty string on success, otherwise the reason
void criterion(int id, const std::string &title, double limit_seconds, const std::function<std::string()> &body) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
        reason = body();
    } catch (const std::exception &e) {
        reason = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && limit_seconds > 0 && elapsed >= limit_seconds) {
        reason = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s";
    }
    const bool pass = reason.empty();
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " AC" << id << " " << title;
    line.precision(3);
    line << std::fixed << " (" << elapsed << " s)";
    if (!pass) {
        line << ": " << reason;
    }
    std::cout << line.str() << std::endl;
}

std::string p(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

int main() {
    criterion(1, "Arf zero-count law: count_zeros == brute_force_zeros on 200 random forms, dim <= 16", 10, [] {
        std::mt19937_64 rng(20240611);
        int degenerate = 0;
        for (int i = 0; i < 200; ++i) {
            const std::size_t dim = 1 + static_cast<std::size_t>(i % 16);
            f2::F2QuadraticForm q;
            if (i % 4 == 1) {
                const std::size_t r = (dim % 2) + 2 * static_cast<std::size_t>((i / 4) % 2);
                q = f2::random_radical_zero_form(rng, dim, std::min(r, dim));
            } else if (i % 4 == 3 && dim % 2 == 0) {
                q = f2::random_nondegenerate_form(rng, dim / 2);
            } else {
                q = f2::random_form(rng, dim);
            }
            degenerate += f2::classify(q).radical_dim > 0 ? 1 : 0;
            if (f2::count_zeros(q) != f2::brute_force_zeros(q)) {
                return "mismatch at form " + std::to_string(i) + "\n" + f2::format_form(q);
            }
        }
        return degenerate == 0 ? std::string("no degenerate forms generated") : std::string();
    });

    criterion(2, "substitution identity (x+u)(x+y+u)+(y+v)(y+u+v) = (x^2+xy+y^2)+(u^2+uv+v^2) on F2^4", 0, [] {
        const auto aa = f2::direct_sum(f2::F2QuadraticForm::anisotropic(), f2::F2QuadraticForm::anisotropic());
        const auto hh = f2::direct_sum(f2::F2QuadraticForm::hyperbolic(), f2::F2QuadraticForm::hyperbolic());
        for (int bits = 0; bits < 16; ++bits) {
            const int x = bits & 1, y = (bits >> 1) & 1, u = (bits >> 2) & 1, v = (bits >> 3) & 1;
            const int lhs = ((x + u) * (x + y + u) + (y + v) * (y + u + v)) % 2;
            const int rhs = (x * x + x * y + y * y + u * u + u * v + v * v) % 2;
            const f2::F2Vector pt{x, y, u, v};
            const f2::F2Vector sub{(x + u) % 2, (x + y + u) % 2, (y + v) % 2, (y + u + v) % 2};
            if (lhs != rhs || static_cast<int>(f2::evaluate(aa, pt)) != rhs ||
                static_cast<int>(f2::evaluate(hh, sub)) != lhs) {
                return "fails at " + pt.to_string();
            }
        }
        return std::string();
    });

    criterion(3, "b(0) = det(lambda - Phi): bezout == direct for n = 2..7; companion(3) differs", 30, [] {
        for (std::size_t n = 2; n <= 7; ++n) {
            if (!(sym::char_poly_bezout(n) == sym::char_poly_direct(sym::canonical_higgs_sl(n)))) {
                return "routes differ at n=" + std::to_string(n);
            }
        }
        if (sym::companion_char_poly(3) == sym::char_poly_direct(sym::canonical_higgs_sl(3))) {
            return std::string("companion polynomial equals the actual one at n=3");
        }
        return std::string();
    });

    criterion(4, "det(lambda - Phi) = det(lambda^2 - A) for Sp(2m,R), m = 1..4", 0, [] {
        for (std::size_t m = 1; m <= 4; ++m) {
            if (!sym::verify_sp_factorization(m)) {
                return "fails at m=" + std::to_string(m);
            }
        }
        return std::string();
    });

    criterion(5, "census_sl == census_sl_via_model for n = 2..6, g = 2..6", 0, [] {
        for (std::int64_t n = 2; n <= 6; ++n) {
            for (std::int64_t g = 2; g <= 6; ++g) {
                if (!(census::census_sl(n, g) == census::census_sl_via_model(n, g))) {
                    return "routes differ at " + p(n, g);
                }
            }
        }
        if (census::census_sl(3, 2).count_w2_0 != 32896 || census::census_sl(2, 3).count_w2_0 != 2304) {
            return std::string("reference values 32896 / 2304 not reproduced");
        }
        return std::string();
    });

    criterion(6, "explicit Prym forms reproduce census_sl by enumeration for (2,2), (2,3), (3,2)", 5, [] {
        const std::vector<std::tuple<std::int64_t, std::int64_t, std::size_t>> cases = {
            {2, 2, 6}, {2, 3, 12}, {3, 2, 16}};
        for (const auto &[n, g, dim] : cases) {
            const auto q = census::build_explicit_prym_form(n, g);
            if (q.dim() != dim) {
                return "unexpected dimension at " + p(n, g);
            }
            if (f2::brute_force_zeros(q) != census::census_sl(n, g).count_w2_0 ||
                BigInt(oracle::naive_zeros(q)) != census::census_sl(n, g).count_w2_0) {
                return "enumeration differs at " + p(n, g);
            }
        }
        return std::string();
    });

    criterion(7, "Sp census totals for m <= 5, g <= 8; census_sp(1,2) = 16/96/16", 0, [] {
        for (std::int64_t m = 1; m <= 5; ++m) {
            for (std::int64_t g = 2; g <= 8; ++g) {
                const auto geo = spectral::geometry(spectral::GroupKind::Sp, m, g);
                if (*geo.N - 1 + 2 * *geo.g_Sbar != 2 * geo.p + 1 || !census::sp_total_check(m, g)) {
                    return "total fails at " + p(m, g);
                }
            }
        }
        const auto c = census::census_sp(1, 2);
        if (c.rows.size() != 3 || c.rows[0].count != 16 || c.rows[1].count != 96 || c.rows[2].count != 16) {
            return std::string("census_sp(1,2) rows are not 16/96/16");
        }
        return std::string();
    });

    std::string literal_note;
    criterion(8, "n=2 cross-check with l = 0 mod 4 for g = 2..8; roots-of-unity filter for N <= 64", 0,
              [&literal_note] {
                  for (std::int64_t n = 0; n <= 64; ++n) {
                      for (int r = 0; r < 4; ++r) {
                          if (census::residue_sum_gaussian(n, r) != census::residue_sum_direct(n, r)) {
                              return "filter differs at N=" + std::to_string(n) + ", r=" + std::to_string(r);
                          }
                      }
                  }
                  for (std::int64_t g = 2; g <= 8; ++g) {
                      const auto r = census::crosscheck_n2(g);
                      if (!r.adopted_matches_census || !r.total_consistent) {
                          return "adopted convention fails at g=" + std::to_string(g);
                      }
                      literal_note += " g=" + std::to_string(g) + ":" + to_decimal(r.literal_count) +
                                      (r.literal_matches_census ? "(=)" : "(!=)");
                  }
                  if (census::crosscheck_n2(3).adopted_count != 2304 ||
                      census::crosscheck_n2(4).adopted_count != 126976) {
                      return std::string("reference values 2304 / 126976 not reproduced");
                  }
                  return std::string();
              });
    std::cout << "       literal congruence l = 2g-2 mod 4 counts:" << literal_note << std::endl;

    criterion(9, "geometry ledger for m, n <= 8, g <= 8", 0, [] {
        for (std::int64_t g = 2; g <= 8; ++g) {
            for (std::int64_t k = 1; k <= 8; ++k) {
                const auto sp = spectral::geometry(spectral::GroupKind::Sp, k, g);
                if (2 - 2 * sp.g_S != 2 * (2 - 2 * *sp.g_Sbar) - *sp.N) {
                    return "Riemann-Hurwitz fails at " + p(k, g);
                }
                if (2 * sp.p != spectral::hz_dim(k, g) + 2 * *sp.g_Sbar) {
                    return "hz_dim ledger fails at " + p(k, g);
                }
                if (!spectral::dirac_rank_check(k, g) || (2 * g - 2) * 2 * k != *sp.N) {
                    return "Dirac rank fails at " + p(k, g);
                }
                if (k >= 2) {
                    if (spectral::canonical_w2_sl(k, g) != spectral::canonical_spin_degree(k, g) % 2) {
                        return "w2 parity fails at " + p(k, g);
                    }
                }
                if (spectral::direct_image_degree(k * (k - 1) * (g - 1), k, g) != 0) {
                    return "direct image degree fails at " + p(k, g);
                }
                if (spectral::canonical_c1_sp(k, g) != spectral::canonical_w_exponents_sp(k).total_degree(g)) {
                    return "c1 ledger fails at " + p(k, g);
                }
            }
        }
        return std::string();
    });

    criterion(10, "KO associativity on 1000 triples; phi additive for refinements, not for a broken q", 0, [] {
        std::mt19937_64 rng(1000);
        std::uniform_int_distribution<std::int64_t> rank(-30, 30);
        const ko::SurfaceH1 s(3);
        const ko::KOSurface group{s};
        const auto random_class = [&] {
            return ko::KOClass{rank(rng), f2::F2Vector::from_mask(s.dim(), rng() & 63U),
                               static_cast<int>(rng() & 1U)};
        };
        const ko::ThetaModel even(s);
        const auto odd = ko::ThetaModel::odd(s);
        for (int i = 0; i < 1000; ++i) {
            const auto a = random_class();
            const auto b = random_class();
            const auto c = random_class();
            if (!(group.add(group.add(a, b), c) == group.add(a, group.add(b, c)))) {
                return "associativity fails at triple " + std::to_string(i);
            }
            for (const auto *theta : {&even, &odd}) {
                if (ko::phi(group.add(a, b), *theta) != (ko::phi(a, *theta) + ko::phi(b, *theta)) % 2) {
                    return "phi not additive at pair " + std::to_string(i);
                }
            }
        }
        const auto broken = ko::ThetaModel::unchecked(f2::F2QuadraticForm::zero(s.dim()), 0);
        const auto x = group.alpha(f2::F2Vector::unit(s.dim(), 0));
        const auto y = group.alpha(f2::F2Vector::unit(s.dim(), 1));
        if (ko::phi(group.add(x, y), broken) == (ko::phi(x, broken) + ko::phi(y, broken)) % 2) {
            return std::string("broken q passed the additivity test");
        }
        return std::string();
    });

    criterion(11, "end-to-end: chvar verify --suite all exits 0 in under 2 minutes", 120, [] {
        const std::string cmd = std::string(CHVAR_BINARY) + " verify --suite all --quiet";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status)) {
            return std::string("process did not exit normally");
        }
        return WEXITSTATUS(status) == 0 ? std::string() : "exit code " + std::to_string(WEXITSTATUS(status));
    });

    std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failures) +
                                                                           " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
