#pragma once

#include <string>
#include <vector>

#include "cyc/io.hpp"

namespace cyc {

struct SuiteOptions {
    std::vector<int> ps;  // empty: per-criterion defaults
    int d = 0;            // 0: default
    std::string ring;     // fp|fq|z4|z9|gr4, empty: defaults
    unsigned long long seed = 42;
    int sizes = 0;  // random cases per randomized check, 0: defaults
};

struct Case {
    std::string key;
    bool ok = true;
    json input;
    std::string expected, actual;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Case> cases;
    double seconds = 0;
    int failures() const;
    bool ok() const { return failures() == 0 && !cases.empty(); }
};

std::string criterion_title(int id);
// throws usage_error on unsupported ring/prime choices
CriterionResult run_criterion(int id, const SuiteOptions& opt);
// criteria behind each suite name; throws usage_error
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_names();

struct SuiteResult {
    std::string suite;
    std::vector<CriterionResult> criteria;
};
json report_json(const std::vector<SuiteResult>& rs, const SuiteOptions& opt, bool timing);
std::string report_md(const std::vector<SuiteResult>& rs, const SuiteOptions& opt, bool timing);

}  // namespace cyc
