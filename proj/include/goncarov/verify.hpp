#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gonc {

struct VerifyOptions {
    unsigned n_max = 0;      // 0: suite default
    std::vector<long> grid;  // parking suite; empty: 1, 2, ..., n_max
    long x = 0;              // parking suite; 0: z_{n-1} + 2
    bool quick = false;
};

struct CheckReport {
    std::string suite;
    std::string name;
    std::vector<std::string> ops;  // library operations exercised
    bool ok = true;
    std::string detail;            // first counterexample on failure
};

// algebra, lattice, operator, goncarov, parking, family, cli, all
const std::vector<std::string>& verify_suite_names();

// Deterministic order. Throws Error(UnknownCheck) for an unknown suite.
std::vector<CheckReport> run_verify(std::string_view suite, const VerifyOptions& options = {});

// Every public operation name the suites are expected to cover.
const std::vector<std::string>& operation_names();

} // namespace gonc
