#pragma once

// Property suites over every module, runnable from the CLI or from tests.

#include <cstdint>
#include <string>
#include <vector>

namespace chvar::verify {

struct Check {
    std::string name;
    std::string parameters;
    bool pass = false;
    std::string details;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool overall_pass() const;
    void add(std::string name, std::string parameters, bool pass, std::string details = {});
    void append(const VerifyReport &other);
};

struct Bounds {
    /// Largest genus for census and geometry checks.
    std::int64_t max_g = 8;
    /// Largest n (SL) and m (Sp) for geometry checks.
    std::int64_t max_rank = 8;
    /// Largest n for the symbolic Bezout/direct comparison.
    std::int64_t max_symbolic_n = 7;
    std::uint64_t seed = 20240611;
};

enum class Suite { All, F2, KO, Symbolic, Census };

/// Parses "all", "f2", "ko", "symbolic", "census"; throws ParameterOutOfRange otherwise.
Suite parse_suite(const std::string &name);

VerifyReport run_f2(const Bounds &bounds);
VerifyReport run_ko(const Bounds &bounds);
VerifyReport run_symbolic(const Bounds &bounds);
VerifyReport run_census(const Bounds &bounds);
VerifyReport run(Suite suite, const Bounds &bounds);

} // namespace chvar::verify
