#include "qc/contract.hpp"

namespace qc {

std::vector<NCPoly> flat_limit(std::vector<TPoly> vs) {
    std::vector<TPoly> acc;
    std::vector<NCPoly> out;
    int bound = 0;
    for (auto& v : vs) bound = std::max(bound, v.degree());
    Subspace leads(bound, true);
    for (auto& v0 : vs) {
        TPoly v = v0;
        while (!v.is_zero()) {
            v = v.shift(-v.valuation());
            if (v.order() < 0) break;
            NCPoly lead = v.coeff(0);
            Combo combo;
            NCPoly rem = leads.reduce(lead, &combo);
            if (!rem.is_zero()) {
                leads.insert(lead, static_cast<int>(acc.size()));
                acc.push_back(v);
                out.push_back(lead);
                break;
            }
            for (auto& [k, c] : combo) v -= acc[k] * c;
        }
    }
    return out;
}

IdealContractionReport contract_ideal(const ContractionMap& cm, const std::vector<NCPoly>& source_gens,
                                      const std::vector<NCPoly>& claimed_gens, int deg, const std::string& source_name,
                                      const std::string& claimed_name) {
    IdealContractionReport rep;
    rep.source = source_name;
    rep.claimed = claimed_name;
    rep.degree = deg;
    const Presentation& tp = cm.target().pres();
    const Alphabet& ta = tp.alphabet();
    rep.source_rank = right_ideal_span(source_gens, cm.source().pres(), deg).dim();
    Subspace claimed = right_ideal_span(claimed_gens, tp, deg);
    rep.claimed_dim = claimed.dim();
    std::vector<Word> words = tp.basis_words(deg);
    for (int order : {deg + 4, 2 * deg + 6, 3 * deg + 10}) {
        Deformation def(cm, order);
        rep.order = order;
        if (!def.defects().empty()) {
            rep.witness = "contraction is not flat: " + def.defects().front();
            return rep;
        }
        std::vector<TPoly> vs;
        rep.scaled.clear();
        for (auto& g : source_gens) {
            NCPoly gn = cm.source().nf(g);
            if (gn.is_zero()) continue;
            TPoly G = def.from_source(gn);
            ScaledLimit s;
            s.generator = gn.str(cm.source().alphabet());
            if (!G.is_zero() && G.valuation() <= G.order()) {
                s.scale = G.valuation();
                s.value = G.coeff(s.scale);
                s.in_claimed = claimed.member(s.value);
            }
            rep.scaled.push_back(s);
            for (auto& m : words)
                if (gn.degree() + m.size() <= deg) vs.push_back(def.nf(G * TPoly::word(m)));
        }
        rep.limit_basis = flat_limit(vs);
        rep.limit_dim = static_cast<int>(rep.limit_basis.size());
        if (rep.limit_dim == rep.source_rank) break;
    }
    if (rep.limit_dim != rep.source_rank) {
        rep.witness = "flat limit has dimension " + std::to_string(rep.limit_dim) + " but the source span has rank " +
                      std::to_string(rep.source_rank) + " (series precision exhausted)";
        return rep;
    }
    Subspace limit(deg);
    rep.limit_in_claimed = true;
    for (auto& v : rep.limit_basis) {
        limit.insert(v);
        if (rep.limit_in_claimed && !claimed.member(v)) {
            rep.limit_in_claimed = false;
            rep.witness = "limit element " + v.str(ta) + " is not in the claimed ideal";
        }
    }
    rep.claimed_in_limit = true;
    for (auto& g : claimed_gens) {
        NCPoly x = tp.nf(g);
        if (!limit.member(x)) {
            rep.claimed_in_limit = false;
            if (rep.witness.empty()) rep.witness = "claimed generator " + x.str(ta) + " is not a limit";
            break;
        }
    }
    if (rep.claimed_in_limit && !limit.contains(claimed)) {
        rep.claimed_in_limit = false;
        if (rep.witness.empty()) rep.witness = "claimed span is larger than the limit";
    }
    return rep;
}

IdealContractionReport contract_ideal(const ContractionMap& cm, const Catalog& cat, const std::string& source,
                                      const std::string& claimed, int deg, const std::string& variant) {
    IdealData s = load_ideal(cat, source, variant);
    IdealData c = load_ideal(cat, claimed, variant);
    return contract_ideal(cm, s.gens, c.gens, deg, s.name, c.name);
}

}  // namespace qc
