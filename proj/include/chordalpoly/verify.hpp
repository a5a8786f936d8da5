#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chordalpoly {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;                    // individual instances examined
    std::vector<std::string> failures;  // capped at a handful of messages
    std::vector<std::string> notes;

    void fail(std::string message);
};

const std::vector<std::string>& suite_names();

/// Runs one property suite over generated instances; deterministic per seed.
/// n_max <= 0 or trials <= 0 pick the suite's defaults. Suites: chordality,
/// systems, lp-vs-bruteforce, decomposition-roundtrip, idp, facets-vs-oracle,
/// orbits-vs-oracle, domination, contraction, splice, witness.
SuiteResult run_suite(const std::string& name, int n_max, long trials, std::uint64_t seed);

/// Budgeted search for an integer point of the induced tree cone of the
/// 7-hole complement admitting no integer decomposition (candidates are
/// integral half-sums of four incidence vectors; a hit is re-certified in
/// the cone by exact LP feasibility). Exploratory, never gating.
struct StretchResult {
    bool found = false;
    long candidates = 0;
    std::string detail;
};

StretchResult c7_hilbert_search(long budget_candidates, std::uint64_t seed);

}  // namespace chordalpoly
