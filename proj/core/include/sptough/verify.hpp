#pragma once

#include <string>
#include <vector>

namespace sptough {

// Outcome of one property suite: how many checks ran, how many failed, and
// the first failing instance rendered as text (an SP expression plus details
// whenever a tree is involved).
struct suite_result {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::string first_counterexample;
    double seconds = 0.0;
};

struct verify_options {
    int max_leaves = 6;
    bool simple_only = true;           // universe flavor for the graph suites
    std::vector<std::string> suites;   // empty selects every suite
};

struct verify_report {
    std::vector<suite_result> suites;
    long long universe_size = 0;  // enumerator emissions for the configured universe

    bool all_passed() const {
        for (const suite_result& s : suites)
            if (s.failed > 0) return false;
        return true;
    }
};

// Every suite name in execution order.
std::vector<std::string> suite_names();

// Runs the selected suites over the enumeration universe plus fixed golden
// instances. Unknown suite names raise domain_error. Suites about encoding
// completeness, recognition and parallel edges always use the unfiltered
// universe at the configured leaf budget; the rest follow simple_only.
verify_report run_verify(const verify_options& options);

}  // namespace sptough
