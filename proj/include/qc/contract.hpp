// The 1/R contraction: series substitution from SU_mu(2) to the E~ letters,
// limit relations, flat limits of right ideals, the covering map and the
// checks built on them.
#pragma once

#include "qc/catalog.hpp"
#include "qc/report.hpp"
#include "qc/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qc {

// Noncommutative polynomial with series coefficients in t. Every coefficient,
// including the absent ones, is known modulo t^(order+1).
class TPoly {
public:
    TPoly() = default;
    static TPoly constant(const SeriesScalar& c);
    static TPoly word(const Word& w);
    // exact lift of a polynomial with constant coefficients
    static TPoly of(const NCPoly& p);

    int order() const { return order_; }
    const std::map<Word, SeriesScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    SeriesScalar scalar_part() const;
    // lowest power of t present, order()+1 when zero
    int valuation() const;
    int degree() const;

    void add_term(const Word& w, const SeriesScalar& c);
    void cap(int order);
    TPoly truncate(int order) const;
    TPoly shift(int k) const;
    TPoly star(const Alphabet& al) const;
    // coefficient of t^k; throws std::out_of_range beyond order()
    NCPoly coeff(int k) const;

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o) { return *this += -o; }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const SeriesScalar& c);
    friend TPoly operator*(TPoly a, const Scalar& c);

    std::string str(const Alphabet& al) const;

private:
    std::map<Word, SeriesScalar> t_;
    int order_ = kExact;
};

// Rewriting with series coefficients. Rule right sides may contain words
// above the left side when their coefficients carry a positive power of t;
// reduction then terminates because each such step spends precision.
class SeriesRewriter {
public:
    SeriesRewriter() = default;
    SeriesRewriter(Alphabet al, std::vector<std::pair<Word, TPoly>> rules);
    const Alphabet& alphabet() const { return al_; }
    const std::vector<std::pair<Word, TPoly>>& rules() const { return rules_; }
    TPoly nf(const TPoly& p) const;
    TPoly mul(const TPoly& a, const TPoly& b) const { return nf(a * b); }

private:
    TPoly nf_word(const Word& w, int budget) const;
    Alphabet al_;
    std::vector<std::pair<Word, TPoly>> rules_;
    struct Memo {
        std::mutex mu;
        std::map<std::pair<Word, int>, TPoly> map;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// rules of an exact presentation over Q(i)(mu) with mu = e^(t/kappa)
SeriesRewriter series_rules_mu(const Presentation& p, int order);

// parse over an alphabet whose extra atoms are "t" and "mu" (mu = e^(t/kappa))
TPoly parse_series(const std::string& text, const Alphabet& al, int order);

class ContractionMap {
public:
    ContractionMap(const Catalog& cat, const std::string& name = "sumu_etilde");

    const std::string& name() const { return name_; }
    const std::string& location() const { return location_; }
    const HopfStructure& source() const { return *source_; }
    const HopfStructure& target() const { return *target_; }
    int order() const { return order_; }
    // source ideal name -> claimed target ideal name
    const std::vector<std::pair<std::string, std::string>>& ideal_pairs() const { return ideals_; }
    // number of leading relations of the source that are the printed ones
    int printed_relations() const { return printed_; }
    const std::vector<NCPoly>& source_relations() const { return relations_; }

    // source polynomial (mu-valued coefficients) -> target letters, free algebra
    TPoly image(const NCPoly& p, int order) const;
    // target polynomial -> source letters, reduced in the source (Laurent in t)
    TPoly preimage(const NCPoly& q, int order) const;
    // t^0 .. t^order coefficients of image(p) over the target free algebra
    std::vector<NCPoly> substitute_and_expand(const NCPoly& p) const;
    std::vector<NCPoly> substitute_and_expand(const NCPoly& p, int upto) const;

    const SeriesRewriter& source_series(int order) const;

private:
    std::string name_, location_;
    std::shared_ptr<HopfStructure> source_, target_;
    std::vector<std::string> forward_, inverse_;
    std::vector<NCPoly> relations_;
    std::vector<std::pair<std::string, std::string>> ideals_;
    int order_ = 2;
    int printed_ = 0;
    struct Cache {
        std::mutex mu;
        std::map<int, std::vector<TPoly>> forward, inverse;
        std::map<int, std::unique_ptr<SeriesRewriter>> source;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
    const std::vector<TPoly>& forward_images(int order) const;
    const std::vector<TPoly>& inverse_images(int order) const;
};

// The source algebra written in the target letters: its rules have the
// target's left sides, and coefficients in t that reduce to the target's
// rules at t = 0 when the contraction is flat.
class Deformation {
public:
    Deformation(const ContractionMap& cm, int order);
    int order() const { return order_; }
    const SeriesRewriter& rewriter() const { return rw_; }
    // residue (deformed rule at t = 0) - (target rule); empty when flat
    const std::vector<std::string>& defects() const { return defects_; }
    // coordinates over the target's normal words
    TPoly nf(const TPoly& p) const { return rw_.nf(p); }
    TPoly from_source(const NCPoly& p) const;

private:
    const ContractionMap* cm_;
    int order_;
    SeriesRewriter rw_;
    std::vector<std::string> defects_;
};

// coefficients of the limit relation check for one source relation
struct LimitResidue {
    std::string relation;
    int power = 0;
    NCPoly residue;  // reduced in the target
    std::string text;
};

struct ContractionReport {
    std::vector<LimitResidue> residues;
    std::vector<std::string> deformation_defects;
    std::string location;
    int failed() const;
    std::vector<CheckResult> checks() const;
};

ContractionReport verify_limit_algebra(const ContractionMap& cm, int upto = 1);

struct ScaledLimit {
    std::string generator;
    int scale = 0;  // power of R
    NCPoly value;
    bool in_claimed = false;
};

struct IdealContractionReport {
    std::string source, claimed;
    int degree = 0;
    int order = 0;  // series precision that was needed
    int source_rank = 0;
    int limit_dim = 0;
    int claimed_dim = 0;
    bool limit_in_claimed = false;
    bool claimed_in_limit = false;
    std::string witness;
    std::vector<ScaledLimit> scaled;
    std::vector<NCPoly> limit_basis;
    bool ok() const { return limit_in_claimed && claimed_in_limit && limit_dim == source_rank; }
};

// flat limit of span{g m : deg(g m) <= deg} compared with the claimed right ideal
IdealContractionReport contract_ideal(const ContractionMap& cm, const std::vector<NCPoly>& source_gens,
                                      const std::vector<NCPoly>& claimed_gens, int deg,
                                      const std::string& source_name = "", const std::string& claimed_name = "");
IdealContractionReport contract_ideal(const ContractionMap& cm, const Catalog& cat, const std::string& source,
                                      const std::string& claimed, int deg, const std::string& variant = "adopted");

// leading subspace of span(vs) as t -> 0; vectors vanishing within the
// precision are dropped
std::vector<NCPoly> flat_limit(std::vector<TPoly> vs);

}  // namespace qc
