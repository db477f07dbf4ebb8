#include "qc/rewrite.hpp"

namespace qc {

void Subspace::check_degree(const NCPoly& v) const {
    if (v.degree() > bound_)
        throw ResourceError("degree " + std::to_string(v.degree()) + " exceeds subspace bound " + std::to_string(bound_));
}

static void add_combo(Combo& acc, const Combo& c, const Scalar& f) {
    for (auto& [k, x] : c) {
        auto [it, fresh] = acc.try_emplace(k, x * f);
        if (fresh) continue;
        it->second += x * f;
        if (it->second.is_zero()) acc.erase(it);
    }
}

NCPoly Subspace::reduce(const NCPoly& v, Combo* combo) const {
    check_degree(v);
    NCPoly r = v;
    auto& t = r.terms();
    auto it = t.rbegin();
    while (it != t.rend()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Word w = it->first;
        Scalar c = it->second;
        r -= row->second.first * c;
        if (combo) add_combo(*combo, row->second.second, c);
        // continue strictly below w
        it = std::make_reverse_iterator(t.lower_bound(w));
    }
    return r;
}

bool Subspace::insert(const NCPoly& v, const Combo& origin) {
    check_degree(v);
    NCPoly r = v;
    Combo o = origin;
    while (!r.is_zero()) {
        auto row = rows_.find(r.lead_word());
        if (row == rows_.end()) break;
        Scalar c = r.lead_coeff();
        r -= row->second.first * c;
        if (track_) add_combo(o, row->second.second, -c);
    }
    if (r.is_zero()) return false;
    Scalar inv = r.lead_coeff().inv();
    r *= inv;
    if (track_) {
        for (auto& [k, x] : o) x *= inv;
    } else {
        o.clear();
    }
    Word lead = r.lead_word();
    rows_.emplace(lead, std::make_pair(std::move(r), std::move(o)));
    return true;
}

bool Subspace::member(const NCPoly& v, Combo* witness) const {
    return reduce(v, witness).is_zero();
}

bool Subspace::contains(const Subspace& o) const {
    for (auto& [w, row] : o.rows_)
        if (!member(row.first)) return false;
    return true;
}

std::vector<NCPoly> Subspace::basis() const {
    std::vector<NCPoly> b;
    for (auto& [w, row] : rows_) b.push_back(row.first);
    return b;
}

Scalar counit_of(const NCPoly& p, const std::vector<Scalar>& counit) {
    Scalar s;
    for (auto& [w, c] : p.terms()) {
        Scalar x = c;
        for (Gen g : w) {
            x *= counit.at(g);
            if (x.is_zero()) break;
        }
        s += x;
    }
    return s;
}

Subspace right_ideal_span(const std::vector<NCPoly>& gens, const Presentation& pres, int deg) {
    Subspace s(deg);
    std::vector<Word> words = pres.basis_words(deg);
    std::vector<NCPoly> g;
    for (auto& x : gens) g.push_back(pres.nf(x));
    // low degree first keeps the rows sparse
    for (int total = 0; total <= deg; ++total)
        for (auto& x : g) {
            if (x.is_zero()) continue;
            int need = total - x.degree();
            if (need < 0) continue;
            for (auto& w : words) {
                if (w.size() != need) continue;
                s.insert(pres.nf(x * NCPoly::word(w)));
            }
        }
    return s;
}

QuotientReport quotient_report(const Presentation& pres, const std::vector<NCPoly>& gens,
                               const std::vector<Scalar>& counit, int deg, const std::vector<NCPoly>& reps) {
    QuotientReport q;
    q.degree = deg;
    for (auto& g : gens) {
        Scalar e = counit_of(pres.nf(g), counit);
        if (!e.is_zero())
            throw std::invalid_argument("counit does not vanish on ideal generator " + g.str(pres.alphabet()));
    }
    std::vector<Word> words = pres.basis_words(deg);
    q.ker_eps_dim = static_cast<int>(words.size()) - 1;
    Subspace s = right_ideal_span(gens, pres, deg);
    q.ideal_dim = s.dim();
    q.dimension = q.ker_eps_dim - q.ideal_dim;
    if (reps.empty()) return q;
    Subspace t = s;
    for (auto& r : reps) {
        NCPoly x = pres.nf(r);
        if (!counit_of(x, counit).is_zero()) {
            q.reps_ok = false;
            q.witness = "representative " + x.str(pres.alphabet()) + " is not in ker eps";
        }
        if (!t.insert(x)) {
            q.reps_independent = false;
            q.witness = "representative " + x.str(pres.alphabet()) + " is dependent modulo the ideal";
        }
    }
    for (auto& w : words) {
        if (w.empty()) continue;
        NCPoly x = NCPoly::word(w) - NCPoly(counit_of(NCPoly::word(w), counit));
        if (!t.member(x)) {
            q.reps_ok = false;
            q.witness = "class of " + pres.alphabet().word_str(w) + " is not spanned by the representatives";
            break;
        }
    }
    return q;
}

}  // namespace qc
