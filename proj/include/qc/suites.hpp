// Named check suites over the built-in catalog.
#pragma once

#include "qc/catalog.hpp"
#include "qc/report.hpp"

#include <string>
#include <vector>

namespace qc {

struct SuiteOptions {
    int deg = 4;
    int order = 2;
    std::string variant = "adopted";
    std::string algebra;  // restrict hopf to one algebra
    std::string calc;     // restrict calculus and brackets to one calculus
    int jobs = 0;         // 0: OpenMP default, 1: serial
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);

// throws std::invalid_argument for an unknown suite, algebra or calculus
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt,
                                   const Catalog& cat = Catalog::builtin());

// "check contract": limit relations, ideal contractions and form expansion
std::vector<CheckResult> run_contract(const SuiteOptions& opt, const Catalog& cat = Catalog::builtin());

}  // namespace qc
