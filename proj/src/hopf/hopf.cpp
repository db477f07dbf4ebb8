#include "qc/hopf.hpp"

#include <omp.h>

#include <algorithm>

namespace qc {

HopfStructure::HopfStructure(Presentation pres, std::vector<TensorPoly> delta, std::vector<Scalar> eps,
                             std::vector<NCPoly> S)
    : pres_(std::move(pres)), delta_(std::move(delta)), eps_(std::move(eps)), S_(std::move(S)) {
    int n = pres_.alphabet().size();
    if (static_cast<int>(delta_.size()) != n || static_cast<int>(eps_.size()) != n || static_cast<int>(S_.size()) != n)
        throw std::invalid_argument("Hopf data must be given on every generator");
}

TensorPoly HopfStructure::reduce(const TensorPoly& t) const {
    TensorPoly r;
    for (auto& [k, c] : t.terms()) {
        NCPoly x = pres_.nf(NCPoly::word(k.first)), y = pres_.nf(NCPoly::word(k.second));
        for (auto& [wx, cx] : x.terms())
            for (auto& [wy, cy] : y.terms()) r.add_term(wx, wy, c * cx * cy);
    }
    return r;
}

Triple HopfStructure::reduce(const Triple& t) const {
    Triple r;
    auto add = [&](const std::array<Word, 3>& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = r.try_emplace(k, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    };
    for (auto& [k, c] : t) {
        NCPoly x = pres_.nf(NCPoly::word(k[0])), y = pres_.nf(NCPoly::word(k[1])), z = pres_.nf(NCPoly::word(k[2]));
        for (auto& [wx, cx] : x.terms())
            for (auto& [wy, cy] : y.terms())
                for (auto& [wz, cz] : z.terms()) add({wx, wy, wz}, c * cx * cy * cz);
    }
    return r;
}

const TensorPoly& HopfStructure::coproduct_word(const Word& w) const {
    {
        std::lock_guard lock(memo_->mu);
        auto it = memo_->map.find(w);
        if (it != memo_->map.end()) return *it->second;
    }
    TensorPoly v;
    if (w.empty())
        v = TensorPoly::unit();
    else if (w.size() == 1)
        v = reduce(delta_.at(w[0]));
    else
        v = reduce(coproduct_word(w.slice(0, w.size() - 1)) * coproduct_word(w.slice(w.size() - 1, w.size())));
    std::lock_guard lock(memo_->mu);
    auto [it, fresh] = memo_->map.try_emplace(w, nullptr);
    if (fresh) it->second = std::make_unique<TensorPoly>(std::move(v));
    return *it->second;
}

TensorPoly HopfStructure::coproduct(const NCPoly& p) const {
    TensorPoly r;
    for (auto& [w, c] : p.terms()) r += coproduct_word(w) * c;
    return r;
}

NCPoly HopfStructure::antipode(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        NCPoly t(c);
        for (int k = w.size(); k-- > 0;) t = pres_.nf(t * S_.at(w[k]));
        r += t;
    }
    return pres_.nf(r);
}

TensorPoly star_legs(const TensorPoly& t, const Alphabet& al) {
    TensorPoly r;
    for (auto& [k, c] : t.terms())
        r += TensorPoly::of(NCPoly::word(k.first).star(al), NCPoly::word(k.second).star(al)) * c.conj();
    return r;
}

bool AxiomReport::ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](auto& a) { return a.ok(); });
}

const AxiomResult& AxiomReport::get(const std::string& name) const {
    for (auto& a : axioms)
        if (a.name == name) return a;
    throw std::out_of_range("no axiom " + name);
}

AxiomReport check_well_defined(const HopfStructure& h) {
    AxiomReport rep;
    AxiomResult cop{"relations/coproduct"}, eps{"relations/counit"}, ant{"relations/antipode"}, st{"relations/star"};
    const Alphabet& al = h.alphabet();
    for (auto& r : h.pres().rules()) {
        NCPoly rel = NCPoly::word(r.lhs) - r.rhs;
        std::string w = al.word_str(r.lhs);
        auto note = [&](AxiomResult& a, bool good) {
            ++a.checked;
            if (!good && a.failed++ == 0) a.witness = w;
        };
        // free-algebra coproduct of the relation, legs reduced afterwards
        TensorPoly d;
        for (auto& [u, c] : rel.terms()) {
            TensorPoly t = TensorPoly::unit();
            for (Gen g : u) t = h.reduce(t * h.gen_coproduct(g));
            d += t * c;
        }
        note(cop, h.reduce(d).is_zero());
        note(eps, h.counit(rel).is_zero());
        note(ant, h.antipode(rel).is_zero());
        note(st, h.nf(rel.star(al)).is_zero());
    }
    rep.axioms = {cop, eps, ant, st};
    return rep;
}

namespace {

struct WordVerdict {
    bool coassoc, counit_l, counit_r, antipode_l, antipode_r, star, involution;
};

WordVerdict check_word(const HopfStructure& h, const Word& w, bool involution) {
    const Alphabet& al = h.alphabet();
    NCPoly x = NCPoly::word(w);
    const TensorPoly& d = h.coproduct_word(w);
    WordVerdict v{};

    Triple left, right;
    auto add = [](Triple& t, std::array<Word, 3> k, const Scalar& c) {
        auto [it, fresh] = t.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    for (auto& [k, c] : d.terms()) {
        for (auto& [k2, c2] : h.coproduct_word(k.first).terms()) add(left, {k2.first, k2.second, k.second}, c * c2);
        for (auto& [k2, c2] : h.coproduct_word(k.second).terms()) add(right, {k.first, k2.first, k2.second}, c * c2);
    }
    v.coassoc = left == right;

    NCPoly el, er, sl, sr;
    for (auto& [k, c] : d.terms()) {
        el += NCPoly::word(k.second) * (c * h.counit(NCPoly::word(k.first)));
        er += NCPoly::word(k.first) * (c * h.counit(NCPoly::word(k.second)));
        sl += h.nf(h.antipode(NCPoly::word(k.first)) * NCPoly::word(k.second)) * c;
        sr += h.nf(NCPoly::word(k.first) * h.antipode(NCPoly::word(k.second))) * c;
    }
    NCPoly unit(h.counit(x));
    v.counit_l = h.nf(el) == x;
    v.counit_r = h.nf(er) == x;
    v.antipode_l = h.nf(sl) == unit;
    v.antipode_r = h.nf(sr) == unit;

    v.star = h.coproduct(h.star(x)) == h.reduce(star_legs(d, al));
    v.involution = true;
    if (involution) v.involution = h.antipode(h.star(h.antipode(h.star(x)))) == x;
    return v;
}

}  // namespace

AxiomReport check_hopf_axioms(const HopfStructure& h, int deg, Exec exec, int involution_deg) {
    std::vector<Word> words = h.pres().basis_words(deg);
    std::vector<WordVerdict> verdicts(words.size());
    const int n = static_cast<int>(words.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (int k = 0; k < n; ++k) verdicts[k] = check_word(h, words[k], words[k].size() <= involution_deg);
    } else {
        for (int k = 0; k < n; ++k) verdicts[k] = check_word(h, words[k], words[k].size() <= involution_deg);
    }

    AxiomReport rep;
    rep.degree = deg;
    const char* names[] = {"coassociativity", "counit/left", "counit/right", "antipode/left",
                           "antipode/right",  "star",        "antipode/involution"};
    for (int a = 0; a < 7; ++a) {
        AxiomResult r{names[a]};
        for (int k = 0; k < n; ++k) {
            const WordVerdict& v = verdicts[k];
            bool good[] = {v.coassoc, v.counit_l, v.counit_r, v.antipode_l, v.antipode_r, v.star, v.involution};
            if (a == 6 && words[k].size() > involution_deg) continue;
            ++r.checked;
            if (!good[a] && r.failed++ == 0) r.witness = h.alphabet().word_str(words[k]);
        }
        rep.axioms.push_back(r);
    }
    return rep;
}

}  // namespace qc
