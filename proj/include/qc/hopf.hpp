// Coproduct, counit and antipode on a presentation, extended from the
// generators, and the axiom battery over normal-form words.
#pragma once

#include "qc/rewrite.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qc {

using Triple = std::map<std::array<Word, 3>, Scalar>;

enum class Exec { serial, parallel };

class HopfStructure {
public:
    HopfStructure() = default;
    HopfStructure(Presentation pres, std::vector<TensorPoly> delta, std::vector<Scalar> eps, std::vector<NCPoly> S);

    const Presentation& pres() const { return pres_; }
    const Alphabet& alphabet() const { return pres_.alphabet(); }
    const std::vector<Scalar>& counit_values() const { return eps_; }
    const TensorPoly& gen_coproduct(Gen g) const { return delta_.at(g); }
    const NCPoly& gen_antipode(Gen g) const { return S_.at(g); }

    NCPoly nf(const NCPoly& p) const { return pres_.nf(p); }
    TensorPoly reduce(const TensorPoly& t) const;
    Triple reduce(const Triple& t) const;

    // homomorphic extension; the word version is memoized and thread safe
    TensorPoly coproduct(const NCPoly& p) const;
    const TensorPoly& coproduct_word(const Word& w) const;
    Scalar counit(const NCPoly& p) const { return counit_of(p, eps_); }
    // anti-homomorphic extension, reduced
    NCPoly antipode(const NCPoly& p) const;
    NCPoly star(const NCPoly& p) const { return pres_.star(p); }

    std::string name;
    std::string location;

private:
    Presentation pres_;
    std::vector<TensorPoly> delta_;
    std::vector<Scalar> eps_;
    std::vector<NCPoly> S_;
    struct Memo {
        std::mutex mu;
        std::unordered_map<Word, std::unique_ptr<TensorPoly>, WordHash> map;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// coefficientwise star on both legs
TensorPoly star_legs(const TensorPoly& t, const Alphabet& al);

struct AxiomResult {
    std::string name;
    int checked = 0;
    int failed = 0;
    std::string witness;  // smallest failing word
    bool ok() const { return failed == 0; }
};

struct AxiomReport {
    int degree = 0;
    std::vector<AxiomResult> axioms;
    bool ok() const;
    const AxiomResult& get(const std::string& name) const;
};

// relations mapped to zero by coproduct, counit, antipode and star
AxiomReport check_well_defined(const HopfStructure& h);
// coassociativity, counit laws, antipode laws, star compatibility on all
// normal-form words of degree <= deg; S(S(x*)*) = x up to involution_deg
AxiomReport check_hopf_axioms(const HopfStructure& h, int deg, Exec exec = Exec::parallel, int involution_deg = 3);

}  // namespace qc
