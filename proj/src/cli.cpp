#include "chvar/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chvar/component_census.hpp"
#include "chvar/errors.hpp"
#include "chvar/f2_forms.hpp"
#include "chvar/higgs_symbolic.hpp"
#include "chvar/ko_surface.hpp"
#include "chvar/spectral_invariants.hpp"
#include "chvar/verify.hpp"

namespace chvar::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct GlobalOptions {
    bool json = false;
    bool csv = false;
    bool quiet = false;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

/// Raised for invalid parameters detected after option parsing.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GroupOptions {
    std::string group;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> rank;
    std::int64_t g = 0;
};

spectral::GroupKind parse_group(const std::string &name) {
    if (name == "sl" || name == "SL") {
        return spectral::GroupKind::SL;
    }
    if (name == "sp" || name == "Sp") {
        return spectral::GroupKind::Sp;
    }
    throw UsageError("group must be 'sl' or 'sp', got '" + name + "'");
}

// The rank parameter is n for SL(n,R) and m for Sp(2m,R); --rank works for both.
std::int64_t resolve_rank(const GroupOptions &o, spectral::GroupKind kind) {
    if (kind == spectral::GroupKind::SL && o.m) {
        throw UsageError("--m applies to the sp group; use --n or --rank for sl");
    }
    if (kind == spectral::GroupKind::Sp && o.n) {
        throw UsageError("--n applies to the sl group; use --m or --rank for sp");
    }
    const auto &own = kind == spectral::GroupKind::SL ? o.n : o.m;
    if (own && o.rank && *own != *o.rank) {
        throw UsageError("conflicting rank parameters");
    }
    if (own) {
        return *own;
    }
    if (o.rank) {
        return *o.rank;
    }
    throw UsageError(kind == spectral::GroupKind::SL ? "missing --n" : "missing --m");
}

void add_group_options(CLI::App *cmd, GroupOptions &o) {
    cmd->add_option("--n", o.n, "n for SL(n,R)");
    cmd->add_option("--m", o.m, "m for Sp(2m,R)");
    cmd->add_option("--rank", o.rank, "rank parameter (n for sl, m for sp)");
    cmd->add_option("--g", o.g, "genus of the surface (>= 2)")->required();
}

std::string pass_text(bool pass) { return pass ? "pass" : "FAIL"; }

json checks_json(const std::vector<std::pair<std::string, bool>> &checks) {
    auto out = json::array();
    for (const auto &[name, pass] : checks) {
        out.push_back({{"name", name}, {"pass", pass}});
    }
    return out;
}

bool all_pass(const std::vector<std::pair<std::string, bool>> &checks) {
    for (const auto &c : checks) {
        if (!c.second) {
            return false;
        }
    }
    return true;
}

// ---- census ----

struct CensusRow {
    std::string label;
    std::optional<std::int64_t> c1;
    std::optional<std::int64_t> ell;
    BigInt count;
};

json crosscheck_json(const census::CrosscheckN2 &r) {
    return {{"g", r.g},
            {"N", r.N},
            {"count_l0_mod4", to_decimal(r.count_r0)},
            {"count_l2_mod4", to_decimal(r.count_r2)},
            {"census_w2_0", to_decimal(r.census_w2_0)},
            {"census_w2_1", to_decimal(r.census_w2_1)},
            {"adopted_convention", "l = 0 mod 4"},
            {"adopted_count", to_decimal(r.adopted_count)},
            {"adopted_matches_census", r.adopted_matches_census},
            {"literal_convention", "l = 2g-2 mod 4"},
            {"literal_residue", r.literal_residue},
            {"literal_count", to_decimal(r.literal_count)},
            {"literal_matches_census", r.literal_matches_census},
            {"closed_form_plus", to_decimal(r.closed_plus)},
            {"closed_form_minus", to_decimal(r.closed_minus)},
            {"matching_closed_form", r.matching_closed_form},
            {"total_consistent", r.total_consistent}};
}

void write_crosscheck_text(std::ostream &out, const census::CrosscheckN2 &r) {
    out << "n=2 cross-check via fixed points of the involution (N=" << r.N << " branch points)\n";
    out << "  l = 0 mod 4 (adopted):            " << r.adopted_count
        << (r.adopted_matches_census ? "  matches census w2=0" : "  differs from census w2=0") << '\n';
    out << "  l = 2g-2 mod 4 (literal, r=" << r.literal_residue << "):    " << r.literal_count
        << (r.literal_matches_census ? "  matches census w2=0" : "  differs from census w2=0") << '\n';
    out << "  closed forms 2^(6g-7) +/- 2^(4g-4): " << r.closed_plus << " / " << r.closed_minus
        << "  (census matches: " << r.matching_closed_form << ")\n";
    out << "  note: the two congruences coincide for odd g; see README, \"w2 convention for n=2\"\n";
}

int cmd_census(const GlobalOptions &global, const std::string &group_name, const GroupOptions &opts,
               const std::optional<std::string> &class_filter, std::ostream &out) {
    const auto kind = parse_group(group_name);
    const auto rank = resolve_rank(opts, kind);
    const auto g = opts.g;

    std::vector<CensusRow> rows;
    std::vector<std::pair<std::string, bool>> checks;
    json params;
    std::string title;
    std::optional<census::CrosscheckN2> cross;
    BigInt total;

    if (kind == spectral::GroupKind::SL) {
        const auto c = census::census_sl(rank, g);
        const auto model = census::census_sl_via_model(rank, g);
        rows.push_back({"w2=0", std::nullopt, std::nullopt, c.count_w2_0});
        rows.push_back({"w2=1", std::nullopt, std::nullopt, c.count_w2_1});
        total = c.total;
        checks.emplace_back("w2=0 + w2=1 == 2^(2p)", c.count_w2_0 + c.count_w2_1 == pow2(2 * c.p));
        checks.emplace_back("closed form == quadratic-form model", c == model);
        params = {{"n", rank}, {"g", g}, {"p", c.p}};
        title = "SL(" + std::to_string(rank) + ",R) census, g=" + std::to_string(g) + ", p=" + std::to_string(c.p);
        if (rank == 2) {
            cross = census::crosscheck_n2(g);
            checks.emplace_back("n=2 cross-check under l = 0 mod 4", cross->adopted_matches_census);
        }
    } else {
        const auto c = census::census_sp(rank, g);
        const auto geo = spectral::geometry(spectral::GroupKind::Sp, rank, g);
        bool symmetric = true;
        bool bounded = true;
        for (std::size_t i = 0; i < c.rows.size(); ++i) {
            const auto &row = c.rows[i];
            symmetric = symmetric && row.count == c.rows[c.rows.size() - 1 - i].count;
            bounded = bounded && spectral::milnor_wood_sp(rank, g, row.c1);
            rows.push_back({"c1=" + std::to_string(row.c1), row.c1, row.ell, row.count});
        }
        total = c.row_sum();
        checks.emplace_back("row sum == 2 * 2^(2p)", census::sp_total_check(rank, g));
        checks.emplace_back("count(c1) == count(-c1)", symmetric);
        checks.emplace_back("rows within Milnor-Wood bound", bounded);
        checks.emplace_back("H(Z) orbit preimages == |P[2]|", census::hz_preimage_check(rank, g));
        params = {{"m", rank}, {"g", g}, {"p", geo.p}, {"q", *geo.g_Sbar}, {"N", *geo.N}};
        title = "Sp(" + std::to_string(2 * rank) + ",R) census, g=" + std::to_string(g) +
                ", q=" + std::to_string(*geo.g_Sbar) + ", N=" + std::to_string(*geo.N);
    }

    if (class_filter) {
        std::vector<CensusRow> kept;
        for (auto &row : rows) {
            if (row.label == *class_filter) {
                kept.push_back(std::move(row));
            }
        }
        if (kept.empty()) {
            throw UsageError("no census class named '" + *class_filter + "'");
        }
        rows = std::move(kept);
    }

    if (global.quiet) {
        return all_pass(checks) ? kExitOk : kExitVerificationFailed;
    }
    switch (global.format()) {
    case Format::Json: {
        json doc;
        doc["group"] = kind == spectral::GroupKind::SL ? "sl" : "sp";
        doc["params"] = params;
        doc["rows"] = json::array();
        for (const auto &row : rows) {
            json r = {{"class", row.label}, {"count", to_decimal(row.count)}};
            if (row.c1) {
                r["c1"] = *row.c1;
                r["ell"] = *row.ell;
            }
            doc["rows"].push_back(r);
        }
        doc["total"] = to_decimal(total);
        doc["checks"] = checks_json(checks);
        if (cross) {
            doc["crosscheck_n2"] = crosscheck_json(*cross);
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "class,count\n";
        for (const auto &row : rows) {
            out << row.label << ',' << row.count << '\n';
        }
        break;
    case Format::Text:
        out << title << '\n';
        for (const auto &row : rows) {
            out << "  " << row.label;
            if (row.ell) {
                out << " (l=" << *row.ell << ")";
            }
            out << "  " << row.count << '\n';
        }
        out << "  total  " << total << '\n';
        out << "checks\n";
        for (const auto &[name, pass] : checks) {
            out << "  " << pass_text(pass) << "  " << name << '\n';
        }
        if (cross) {
            write_crosscheck_text(out, *cross);
        }
        break;
    }
    return all_pass(checks) ? kExitOk : kExitVerificationFailed;
}

// ---- invariants ----

std::string ledger_text(const spectral::DegreeLedger &ledger) {
    std::string s;
    for (const auto &e : ledger.exponents) {
        s += (s.empty() ? "" : " ") + e.to_string();
    }
    return s;
}

int cmd_invariants(const GlobalOptions &global, const GroupOptions &opts, std::ostream &out) {
    const auto kind = parse_group(opts.group);
    const auto rank = resolve_rank(opts, kind);
    const auto g = opts.g;
    const auto geo = spectral::geometry(kind, rank, g);

    // ordered (key, value) pairs; values are JSON scalars or arrays
    std::vector<std::pair<std::string, json>> table;
    table.emplace_back("group", kind == spectral::GroupKind::SL ? "sl" : "sp");
    table.emplace_back(kind == spectral::GroupKind::SL ? "n" : "m", rank);
    table.emplace_back("g", g);
    table.emplace_back("matrix_size", geo.n);
    table.emplace_back("g_S", geo.g_S);
    table.emplace_back("p", geo.p);

    if (kind == spectral::GroupKind::SL) {
        const auto exps = spectral::canonical_exponents_sl(rank);
        table.emplace_back("canonical_exponents", ledger_text(exps));
        table.emplace_back("canonical_degrees", exps.degrees(g));
        table.emplace_back("isotropic_exponents", ledger_text(spectral::isotropic_exponents_sl(rank)));
        table.emplace_back("spin_degree", spectral::canonical_spin_degree(rank, g));
        table.emplace_back("canonical_w2", spectral::canonical_w2_sl(rank, g));
        const ko::ThetaModel theta{ko::SurfaceH1(static_cast<int>(g))};
        const int phi_s = static_cast<int>(spectral::canonical_spin_degree(rank, g) % 2);
        table.emplace_back("theorem_w2_at_w1_0", ko::theorem_w2(phi_s, f2::F2Vector(2 * static_cast<std::size_t>(g)), theta));
        table.emplace_back("direct_image_degree_of_trivial", spectral::direct_image_degree(0, rank, g));
        table.emplace_back("direct_image_degree_of_pullback_K^((n-1)/2)",
                           spectral::direct_image_degree(rank * (rank - 1) * (g - 1), rank, g));
    } else {
        const std::int64_t branch = *geo.N;
        table.emplace_back("g_Sbar", *geo.g_Sbar);
        table.emplace_back("q", *geo.g_Sbar);
        table.emplace_back("N", branch);
        table.emplace_back("hz_dim", spectral::hz_dim(rank, g));
        table.emplace_back("W_exponents", ledger_text(spectral::canonical_w_exponents_sp(rank)));
        table.emplace_back("canonical_c1", spectral::canonical_c1_sp(rank, g));
        table.emplace_back("milnor_wood_bound", spectral::milnor_wood_bound(rank, g));
        table.emplace_back("dirac_rank_check", spectral::dirac_rank_check(rank, g));
        auto ranks = json::array();
        for (std::int64_t k = 0; 2 * k <= branch; ++k) {
            ranks.push_back(to_decimal(spectral::lambda_rank(rank, g, k)));
        }
        table.emplace_back("lambda_2k_ranks", ranks);
    }

    if (global.quiet) {
        return kExitOk;
    }
    auto scalar_text = [](const json &v) -> std::string {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_array()) {
            std::string s;
            for (const auto &x : v) {
                s += (s.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
            }
            return s;
        }
        return v.dump();
    };
    switch (global.format()) {
    case Format::Json: {
        json doc = json::object();
        for (const auto &[k, v] : table) {
            doc[k] = v;
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "key,value\n";
        for (const auto &[k, v] : table) {
            out << k << ',' << scalar_text(v) << '\n';
        }
        break;
    case Format::Text: {
        std::size_t width = 0;
        for (const auto &entry : table) {
            width = std::max(width, entry.first.size());
        }
        for (const auto &[k, v] : table) {
            out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
        }
        break;
    }
    }
    return kExitOk;
}

// ---- charpoly ----

int cmd_charpoly(const GlobalOptions &global, const GroupOptions &opts, const std::string &method_opt,
                 std::ostream &out) {
    const auto kind = parse_group(opts.group);
    const auto rank = resolve_rank(opts, kind);
    const std::int64_t size = kind == spectral::GroupKind::SL ? rank : 2 * rank;
    if (rank < (kind == spectral::GroupKind::SL ? 2 : 1) || size > static_cast<std::int64_t>(kMaxSymbolicSize)) {
        throw UsageError("matrix size " + std::to_string(size) + " outside the supported range 2.." +
                         std::to_string(kMaxSymbolicSize));
    }
    const std::string method = method_opt.empty() ? (kind == spectral::GroupKind::SL ? "both" : "direct") : method_opt;
    if (method != "direct" && method != "bezout" && method != "both") {
        throw UsageError("method must be direct, bezout or both");
    }
    if (kind == spectral::GroupKind::Sp && method != "direct") {
        throw UsageError("the Bezout route applies to the sl group only");
    }

    std::vector<std::pair<std::string, sym::WeightedPolynomial>> polys;
    std::optional<bool> equal;
    std::optional<bool> factorization;
    const auto n = static_cast<std::size_t>(rank);
    if (kind == spectral::GroupKind::SL) {
        std::optional<sym::CharPoly> direct;
        std::optional<sym::CharPoly> bezout;
        if (method != "bezout") {
            direct = sym::char_poly_direct(sym::canonical_higgs_sl(n));
            polys.emplace_back("direct", direct->as_polynomial());
        }
        if (method != "direct") {
            bezout = sym::char_poly_bezout(n);
            polys.emplace_back("bezout", bezout->as_polynomial());
        }
        if (direct && bezout) {
            equal = *direct == *bezout;
        }
    } else {
        const auto higgs = sym::canonical_higgs_sp(n);
        polys.emplace_back("direct", sym::char_poly_direct(higgs.phi).as_polynomial());
        polys.emplace_back("det(lambda^2 - A)",
                           sym::char_poly_direct(higgs.a_block).as_polynomial().substitute_lambda_power(2));
        factorization = sym::verify_sp_factorization(n);
    }
    const bool ok = equal.value_or(true) && factorization.value_or(true);

    if (global.quiet) {
        return ok ? kExitOk : kExitVerificationFailed;
    }
    switch (global.format()) {
    case Format::Json: {
        json doc = {{"group", kind == spectral::GroupKind::SL ? "sl" : "sp"}, {"rank", rank}, {"method", method}};
        doc["polynomials"] = json::array();
        for (const auto &[label, p] : polys) {
            doc["polynomials"].push_back({{"route", label}, {"text", p.to_string()}, {"terms", p.to_json()}});
        }
        if (equal) {
            doc["verdict"] = *equal ? "EQUAL" : "DIFFERENT";
        }
        if (factorization) {
            doc["factorization"] = *factorization ? "EQUAL" : "DIFFERENT";
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "route,coeff,exponents\n";
        for (const auto &[label, p] : polys) {
            for (const auto &[mono, coeff] : p.terms()) {
                std::string exps;
                for (auto e : mono.exponents()) {
                    exps += (exps.empty() ? "" : " ") + std::to_string(e);
                }
                out << label << ',' << coeff << ',' << exps << '\n';
            }
        }
        break;
    case Format::Text:
        for (const auto &[label, p] : polys) {
            out << label << ": " << p.to_string() << '\n';
        }
        if (equal) {
            out << "verdict: " << (*equal ? "EQUAL" : "DIFFERENT") << '\n';
        }
        if (factorization) {
            out << "factorization: " << (*factorization ? "EQUAL" : "DIFFERENT") << '\n';
        }
        break;
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---- verify ----

int cmd_verify(const GlobalOptions &global, const std::string &suite_name, const verify::Bounds &bounds,
               std::ostream &out) {
    verify::Suite suite = verify::Suite::All;
    try {
        suite = verify::parse_suite(suite_name);
    } catch (const ParameterOutOfRange &e) {
        throw UsageError(e.what());
    }
    if (bounds.max_g < 2 || bounds.max_rank < 2 || bounds.max_symbolic_n < 2 ||
        bounds.max_symbolic_n > static_cast<std::int64_t>(kMaxSymbolicSize)) {
        throw UsageError("verify bounds out of range");
    }
    const auto report = verify::run(suite, bounds);
    const bool ok = report.overall_pass();
    if (global.quiet) {
        return ok ? kExitOk : kExitVerificationFailed;
    }
    switch (global.format()) {
    case Format::Json: {
        json doc = {{"suite", suite_name}, {"overall_pass", ok}};
        doc["checks"] = json::array();
        for (const auto &c : report.checks) {
            doc["checks"].push_back(
                {{"name", c.name}, {"parameters", c.parameters}, {"pass", c.pass}, {"details", c.details}});
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "name,parameters,pass\n";
        for (const auto &c : report.checks) {
            out << '"' << c.name << "\",\"" << c.parameters << "\"," << (c.pass ? "true" : "false") << '\n';
        }
        break;
    case Format::Text:
        for (const auto &c : report.checks) {
            out << c.name << ' ' << c.parameters << ": " << pass_text(c.pass) << '\n';
            if (!c.pass && !c.details.empty()) {
                out << "    " << c.details << '\n';
            }
        }
        out << "overall: " << pass_text(ok) << " (" << report.checks.size() << " checks)\n";
        break;
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---- arf ----

int cmd_arf(const GlobalOptions &global, const std::string &path, std::ostream &out) {
    f2::F2QuadraticForm q;
    if (path == "-") {
        q = f2::parse_form(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open '" + path + "'");
        }
        q = f2::parse_form(in);
    }
    const auto c = f2::classify(q);
    const auto zeros = f2::zero_count(c);
    std::optional<BigInt> brute;
    if (q.dim() <= 16) {
        brute = f2::brute_force_zeros(q);
    }
    const bool ok = !brute || *brute == zeros;
    if (global.quiet) {
        return ok ? kExitOk : kExitVerificationFailed;
    }
    const std::string arf_text = c.arf ? std::to_string(*c.arf) : "undefined";
    switch (global.format()) {
    case Format::Json: {
        json doc = {{"dim", c.dim},
                    {"radical_dim", c.radical_dim},
                    {"q_on_radical_zero", c.q_on_radical_zero},
                    {"hyperbolic_rank", c.hyperbolic_rank},
                    {"arf", c.arf ? json(*c.arf) : json(nullptr)},
                    {"zeros", to_decimal(zeros)}};
        doc["brute_force_zeros"] = brute ? json(to_decimal(*brute)) : json(nullptr);
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "dim,radical_dim,q_on_radical_zero,hyperbolic_rank,arf,zeros,brute_force_zeros\n";
        out << c.dim << ',' << c.radical_dim << ',' << (c.q_on_radical_zero ? "true" : "false") << ','
            << c.hyperbolic_rank << ',' << arf_text << ',' << zeros << ',' << (brute ? to_decimal(*brute) : "")
            << '\n';
        break;
    case Format::Text:
        out << "arf=" << arf_text << ", zeros=" << zeros << '\n';
        out << "dim=" << c.dim << ", radical_dim=" << c.radical_dim
            << ", q_on_radical_zero=" << (c.q_on_radical_zero ? "true" : "false")
            << ", hyperbolic_rank=" << c.hyperbolic_rank << '\n';
        if (brute) {
            out << "brute_force_zeros=" << *brute << (ok ? " (agrees)" : " (DISAGREES)") << '\n';
        }
        break;
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact invariants of split real character varieties: Arf forms, KO classes, "
                 "Higgs characteristic polynomials, spectral data and component censuses",
                 "chvar"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_flag("--json", global.json, "JSON output");
    app.add_flag("--csv", global.csv, "CSV output");
    app.add_flag("--quiet", global.quiet, "no output, exit code only");

    GroupOptions census_opts;
    std::string census_group;
    std::optional<std::string> class_filter;
    auto *census_cmd = app.add_subcommand("census", "count order-2 spectral data per characteristic class");
    census_cmd->add_option("group,--group", census_group, "sl or sp")->required();
    add_group_options(census_cmd, census_opts);
    census_cmd->add_option("--class", class_filter, "only this class, e.g. w2=0 or c1=-1");

    GroupOptions inv_opts;
    auto *inv_cmd = app.add_subcommand("invariants", "genera, degrees and characteristic classes");
    inv_cmd->add_option("group,--group", inv_opts.group, "sl or sp")->required();
    add_group_options(inv_cmd, inv_opts);

    GroupOptions cp_opts;
    std::string method;
    auto *cp_cmd = app.add_subcommand("charpoly", "characteristic polynomial of the canonical Higgs field");
    cp_cmd->add_option("--group", cp_opts.group, "sl or sp")->required();
    cp_cmd->add_option("--n", cp_opts.n, "n for SL(n,R)");
    cp_cmd->add_option("--m", cp_opts.m, "m for Sp(2m,R)");
    cp_cmd->add_option("--rank", cp_opts.rank, "rank parameter (n for sl, m for sp)");
    cp_cmd->add_option("--method", method, "direct, bezout or both");

    std::string suite = "all";
    verify::Bounds bounds;
    auto *verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--suite", suite, "all, f2, ko, symbolic or census");
    verify_cmd->add_option("--max-g", bounds.max_g, "largest genus");
    verify_cmd->add_option("--max-rank", bounds.max_rank, "largest n or m in geometry checks");
    verify_cmd->add_option("--max-n", bounds.max_symbolic_n, "largest n for symbolic checks");
    verify_cmd->add_option("--seed", bounds.seed, "random seed");

    std::string form_path;
    auto *arf_cmd = app.add_subcommand("arf", "classify a quadratic form read from a file ('-' for stdin)");
    arf_cmd->add_option("file", form_path, "form file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("chvar");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (global.json && global.csv) {
        err << "error: --json and --csv are mutually exclusive\n";
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (census_cmd->parsed()) {
            code = cmd_census(global, census_group, census_opts, class_filter, buffer);
        } else if (inv_cmd->parsed()) {
            code = cmd_invariants(global, inv_opts, buffer);
        } else if (cp_cmd->parsed()) {
            code = cmd_charpoly(global, cp_opts, method, buffer);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(global, suite, bounds, buffer);
        } else if (arf_cmd->parsed()) {
            code = cmd_arf(global, form_path, buffer);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterOutOfRange &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionTooLarge &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    out << buffer.str();
    return code;
}

} // namespace chvar::cli
