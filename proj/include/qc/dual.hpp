// The functionals of a calculus written in the deformed enveloping algebra:
// bracket table, coproducts and star checked inside that algebra.
#pragma once

#include "qc/catalog.hpp"
#include "qc/report.hpp"

namespace qc {

struct DualData {
    HopfStructure u;
    std::vector<std::string> names;  // chi names
    std::vector<NCPoly> chi;
    std::vector<std::vector<NCPoly>> f;  // f[i][j]
    std::string location;
};

DualData load_dual(const Catalog& cat, const std::string& name = "ekappa_dual", const std::string& variant = "adopted");

// checks, in order: dual.relation, dual.brackets, dual.f-coproduct,
// dual.chi-coproduct, dual.star
std::vector<CheckResult> verify_dual_side(const Catalog& cat, const std::string& name = "ekappa_dual",
                                          const std::string& variant = "adopted");

}  // namespace qc
