#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace crystald {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what);
    std::string summary() const;
};

struct SuiteOptions {
    unsigned seed = 1;
    int threads = 1;
};

SuiteResult suite_golden_end_to_end();
SuiteResult suite_golden_psi();
SuiteResult suite_golden_separation();
SuiteResult suite_dimension(const SuiteOptions& o = {});
SuiteResult suite_morphism(const SuiteOptions& o = {});
SuiteResult suite_separation_invariants(const SuiteOptions& o = {}, int samples = 500);
SuiteResult suite_rsk(int n = 4, int max_size = 8);
SuiteResult suite_sliding(const SuiteOptions& o = {});
SuiteResult suite_knuth(const SuiteOptions& o = {}, int pairs = 10000);
SuiteResult suite_signatures(const SuiteOptions& o = {});

}  // namespace crystald
