// Quotient algebras by oriented rewrite rules, and degree-truncated exact
// linear algebra (subspaces keyed by their largest word).
#pragma once

#include "qc/ncpoly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qc {

struct Rule {
    Word lhs;
    NCPoly rhs;
};

// orient relation p = 0 with its deglex-largest word as lhs
Rule orient(const NCPoly& p);

struct Overlap {
    Word word;
    int rule_a, rule_b;
    bool resolved;
    NCPoly diff;  // difference of the two reductions, zero if resolved
};

struct OverlapReport {
    int max_deg = 0;
    std::vector<Overlap> overlaps;
    int unresolved() const;
    std::vector<std::string> completion_log;
};

class Presentation {
public:
    Presentation() = default;
    Presentation(Alphabet al, std::vector<Rule> rules);
    // relations given as polynomials p (meaning p = 0)
    static Presentation from_relations(Alphabet al, const std::vector<NCPoly>& rels);

    const Alphabet& alphabet() const { return al_; }
    const std::vector<Rule>& rules() const { return rules_; }
    std::string name;
    int max_degree = 24;

    NCPoly nf(const NCPoly& p) const;
    NCPoly nf_word(const Word& w) const;
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return nf(a * b); }
    NCPoly star(const NCPoly& p) const { return nf(p.star(al_)); }
    bool reducible(const Word& w) const;

    // normal-form words of degree <= deg, deglex ascending
    std::vector<Word> basis_words(int deg) const;

    OverlapReport check_confluence(int max_deg) const;
    // bounded Knuth-Bendix completion; returns the final report
    OverlapReport complete(int max_deg, int rule_degree_cap = 6);

    // rule set invariants: lhs greater than every rhs word; distinct lhs
    std::vector<std::string> validate() const;

private:
    void index_rules();
    bool interreduce(std::vector<std::string>& log);
    Alphabet al_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_;
    struct Cache {
        std::unordered_map<Word, NCPoly, WordHash> map;
        std::shared_mutex mu;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using Combo = std::map<int, Scalar>;

class Subspace {
public:
    explicit Subspace(int degree_bound = 0, bool track = false) : bound_(degree_bound), track_(track) {}

    int degree_bound() const { return bound_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // returns true if v enlarged the space; origin is recorded when tracking
    bool insert(const NCPoly& v, const Combo& origin = {});
    bool insert(const NCPoly& v, int origin_index) { return insert(v, Combo{{origin_index, Scalar(1)}}); }
    // remainder after top-down elimination; combo collects the row origins used
    NCPoly reduce(const NCPoly& v, Combo* combo = nullptr) const;
    bool member(const NCPoly& v, Combo* witness = nullptr) const;
    bool contains(const Subspace& o) const;
    bool equals(const Subspace& o) const { return dim() == o.dim() && contains(o); }
    std::vector<NCPoly> basis() const;
    const std::map<Word, std::pair<NCPoly, Combo>>& rows() const { return rows_; }

private:
    void check_degree(const NCPoly& v) const;
    int bound_;
    bool track_;
    std::map<Word, std::pair<NCPoly, Combo>> rows_;
};

// span of nf(g w) for generators g and normal words w with deg(g)+|w| <= deg
Subspace right_ideal_span(const std::vector<NCPoly>& gens, const Presentation& pres, int deg);

struct QuotientReport {
    int degree = 0;
    int ker_eps_dim = 0;
    int ideal_dim = 0;
    int dimension = 0;
    bool reps_ok = true;          // representatives span ker eps modulo the ideal
    bool reps_independent = true;
    std::string witness;
};

// counit given on generators
QuotientReport quotient_report(const Presentation& pres, const std::vector<NCPoly>& gens,
                               const std::vector<Scalar>& counit, int deg,
                               const std::vector<NCPoly>& reps = {});

Scalar counit_of(const NCPoly& p, const std::vector<Scalar>& counit);

}  // namespace qc
