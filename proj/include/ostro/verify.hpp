#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ostro/ostronometry.hpp"
#include "ostro/towers.hpp"

namespace ostro {

// One verified property: how many instances ran, which failed, and the
// statement that was checked. Counterexample lists are capped and sorted so
// reports are deterministic regardless of sweep scheduling.
struct CheckResult {
    std::string name;
    std::string law;
    unsigned long instances = 0;
    unsigned long failures = 0;
    std::vector<std::string> counterexamples = {};
    std::vector<std::string> notes = {};
    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    long d_min = 2;
    long d_max = 2;
    long limit = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
    unsigned long total_failures() const;
};

struct VerifyOptions {
    long d_min = 2;
    long d_max = 6;
    long limit = 10000;    // sweep scale; individual checks cap it sensibly
    bool parallel = true;  // OpenMP sweeps; false forces the serial reference
};

// Suites: "numeration" (codecs, operators, laws), "towers" (array geometry,
// walls, Stolarsky audits), "identities" (integer identity catalog + row
// companions), "blocks" (palindrome counting formulas vs. full scans).
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt);

// Shared sweep driver: applies `body` to every n in [lo, hi], collecting
// failure descriptions (body fills *why only when returning false). The
// parallel flavor partitions the range across OpenMP threads; the serial
// flavor is the reference implementation the benchmark compares against.
struct SweepOutcome {
    unsigned long instances = 0;
    unsigned long failures = 0;
    std::vector<std::string> counterexamples;  // capped, sorted
};
SweepOutcome sweep_check(long lo, long hi, bool parallel,
                         const std::function<bool(long n, std::string* why)>& body);

// Exact first-column / wall values in machine words, used by the flat block
// scan where GMP would dominate; valid while the isqrt argument fits u64.
long first_column_i64(long d, long m);
long wall_term_i64(long d, long m);

// Full palindrome scan of block k (every row classified with int64
// arithmetic), returning (deedees, edees) for comparison with the counting
// formula. d >= 2.
BlockCounts block_scan(const Context& ctx, long k, bool parallel);

}  // namespace ostro
