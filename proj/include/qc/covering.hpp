// The covering inclusion E_kappa(2) -> E~_kappa(2), the projections of
// forms and functionals along it, and the truncated intersections of the
// 4D ideals with its image.
#pragma once

#include "qc/calculus.hpp"
#include "qc/report.hpp"

namespace qc {

class CoveringMap {
public:
    CoveringMap(const Catalog& cat, const std::string& name = "ekappa_etilde", const std::string& variant = "adopted");

    const HopfStructure& source() const { return *source_; }
    const HopfStructure& target() const { return *target_; }
    const std::vector<NCPoly>& images() const { return images_; }
    // homomorphic substitution, reduced in the target
    NCPoly operator()(const NCPoly& p) const;
    TensorPoly operator()(const TensorPoly& t) const;

    std::string name, location, variant;

private:
    std::shared_ptr<HopfStructure> source_, target_;
    std::vector<NCPoly> images_;
};

// relations go to zero; coproduct, counit, antipode and star are preserved on
// all normal words of degree <= deg
CheckResult check_covering(const CoveringMap& m, int deg = 3);

// image of a named source form "x ; y | ..." (x dy) in a target calculus
Form covering_form(const CoveringMap& m, const Calculus& target, const std::string& text);

// source form name -> target-basis coefficient rows (scalars), from the
// catalog forms entry; alternatives of one name must agree
struct ProjectedForms {
    std::vector<std::string> names;
    std::vector<Form> images;
    CheckResult alternatives;
    // images[i] = sum_j matrix[i][j] basis_j, when every coefficient is a scalar
    bool scalar = true;
    std::vector<std::vector<Scalar>> matrix;
};
ProjectedForms project_forms(const CoveringMap& m, const Calculus& target, const CatalogEntry& forms);

// one check per projection table (form and functional), plus the agreement of
// the source functionals induced from the two 4D calculi
std::vector<CheckResult> verify_projections(const Catalog& cat, const CalculusCache& calculi, int deg = 4);

struct IntersectionReport {
    int degree = 0;
    std::string location;
    int source_words = 0;
    int dim_plus = 0, dim_minus = 0;
    bool equal = false;
    bool element_in_both = false;
    bool generated = false;  // the emitted generators span the intersection
    std::vector<NCPoly> basis;
    std::vector<NCPoly> generators;  // over the source letters
    std::vector<std::string> generator_text;
    std::string witness;
    bool ok() const { return equal && element_in_both && generated; }
    CheckResult check() const;
};

// S+- = span(ideal+-) within degree 2 deg, intersected with the image of the
// source words of degree <= deg
IntersectionReport verify_intersections(const Catalog& cat, const CoveringMap& m, int deg,
                                        const std::string& variant = "adopted");

}  // namespace qc
