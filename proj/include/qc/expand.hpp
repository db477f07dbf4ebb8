// Left-invariant 1-forms of SU_mu(2) pushed through the contraction, and the
// leading order of their exterior relations.
#pragma once

#include "qc/calculus.hpp"
#include "qc/contract.hpp"
#include "qc/report.hpp"

namespace qc {

struct FormExpansion {
    std::string name;
    // coefficient rows over the target labels, t^0 and t^1
    std::vector<std::vector<Scalar>> computed, printed;
    std::vector<std::string> computed_text, printed_text;
    bool invariant = true;  // every coefficient is a constant
    std::string witness;
};

struct LeadingRelation {
    std::string source;
    int power = 0;
    bool determined = true;  // leading coefficient within the known precision
    NCPoly relation;         // over the labels, products read as wedges
    std::string text;
};

struct FormExpansionReport {
    std::vector<FormExpansion> forms;
    std::vector<LeadingRelation> leading;
    int leading_rank = 0;
    int exterior_rank = 0;
    // every leading relation lies in the exterior relations, and conversely
    bool leading_in_exterior = false;
    bool exterior_in_leading = false;
    std::vector<std::string> missing;  // exterior relations not reached
    std::string forms_location, wedge_location;
    std::vector<CheckResult> checks() const;
};

// the contraction map supplies sigma..rho* -> a0..w0*, the covering map the
// change from the E~ forms to the E_kappa forms
FormExpansionReport expand_forms(const Catalog& cat, const ContractionMap& cm, const CalculusCache& calculi);

}  // namespace qc
