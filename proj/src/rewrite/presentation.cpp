#include "qc/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace qc {

Rule orient(const NCPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot orient the zero relation");
    Rule r;
    r.lhs = p.lead_word();
    Scalar c = p.lead_coeff().inv();
    for (auto& [w, x] : p.terms())
        if (w != r.lhs) r.rhs.add_term(w, -(x * c));
    return r;
}

int OverlapReport::unresolved() const {
    return static_cast<int>(std::count_if(overlaps.begin(), overlaps.end(), [](auto& o) { return !o.resolved; }));
}

Presentation::Presentation(Alphabet al, std::vector<Rule> rules) : al_(std::move(al)), rules_(std::move(rules)) {
    index_rules();
}

Presentation Presentation::from_relations(Alphabet al, const std::vector<NCPoly>& rels) {
    std::vector<Rule> rules;
    for (auto& r : rels) rules.push_back(orient(r));
    return Presentation(std::move(al), std::move(rules));
}

void Presentation::index_rules() {
    by_first_.assign(al_.size(), {});
    for (size_t k = 0; k < rules_.size(); ++k) {
        if (rules_[k].lhs.empty()) continue;
        by_first_[rules_[k].lhs[0]].push_back(static_cast<int>(k));
    }
    cache_ = std::make_shared<Cache>();
}

bool Presentation::reducible(const Word& w) const {
    for (int k = 0; k < w.size(); ++k)
        for (int r : by_first_[w[k]]) {
            const Word& l = rules_[r].lhs;
            if (k + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + k)) return true;
        }
    return false;
}

NCPoly Presentation::nf_word(const Word& w) const {
    if (w.size() > max_degree) throw ResourceError("normal form: degree " + std::to_string(w.size()) + " exceeds bound");
    {
        std::shared_lock lock(cache_->mu);
        auto it = cache_->map.find(w);
        if (it != cache_->map.end()) return it->second;
    }
    NCPoly res;
    bool hit = false;
    for (int k = 0; k < w.size() && !hit; ++k)
        for (int r : by_first_[w[k]]) {
            const Word& l = rules_[r].lhs;
            if (k + l.size() > w.size() || !std::equal(l.begin(), l.end(), w.begin() + k)) continue;
            NCPoly expanded = NCPoly::word(w.slice(0, k)) * rules_[r].rhs * NCPoly::word(w.slice(k + l.size(), w.size()));
            res = nf(expanded);
            hit = true;
            break;
        }
    if (!hit) res = NCPoly::word(w);
    std::unique_lock lock(cache_->mu);
    cache_->map.emplace(w, res);
    return res;
}

NCPoly Presentation::nf(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        if (!reducible(w)) {
            r.add_term(w, c);
            continue;
        }
        NCPoly n = nf_word(w);
        for (auto& [u, d] : n.terms()) r.add_term(u, c * d);
    }
    return r;
}

std::vector<Word> Presentation::basis_words(int deg) const {
    std::vector<Word> out{Word()}, layer{Word()};
    for (int d = 0; d < deg; ++d) {
        std::vector<Word> next;
        for (auto& w : layer)
            for (int g = 0; g < al_.size(); ++g) {
                Word x = w * Word::of(static_cast<Gen>(g));
                bool ok = true;
                for (auto& r : rules_)
                    if (!r.lhs.empty() && x.ends_with(r.lhs)) {
                        ok = false;
                        break;
                    }
                if (ok) next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

OverlapReport Presentation::check_confluence(int max_deg) const {
    OverlapReport rep;
    rep.max_deg = max_deg;
    for (size_t a = 0; a < rules_.size(); ++a)
        for (size_t b = 0; b < rules_.size(); ++b) {
            const Word& la = rules_[a].lhs;
            const Word& lb = rules_[b].lhs;
            // suffix of la equals prefix of lb
            for (int k = 1; k < std::min(la.size(), lb.size()); ++k) {
                if (!std::equal(la.end() - k, la.end(), lb.begin())) continue;
                Word w = la * lb.slice(k, lb.size());
                if (w.size() > max_deg) continue;
                NCPoly x = nf(rules_[a].rhs * NCPoly::word(lb.slice(k, lb.size())));
                NCPoly y = nf(NCPoly::word(la.slice(0, la.size() - k)) * rules_[b].rhs);
                NCPoly d = x - y;
                rep.overlaps.push_back({w, static_cast<int>(a), static_cast<int>(b), d.is_zero(), d});
            }
            // lb inside la
            if (a == b || lb.size() > la.size()) continue;
            for (int pos = la.find(lb); pos >= 0; pos = la.find(lb, pos + 1)) {
                if (la.size() > max_deg) break;
                NCPoly x = nf(rules_[a].rhs);
                NCPoly y = nf(NCPoly::word(la.slice(0, pos)) * rules_[b].rhs *
                              NCPoly::word(la.slice(pos + lb.size(), la.size())));
                NCPoly d = x - y;
                rep.overlaps.push_back({la, static_cast<int>(a), static_cast<int>(b), d.is_zero(), d});
            }
        }
    return rep;
}

OverlapReport Presentation::complete(int max_deg, int cap) {
    std::vector<std::string> log;
    for (int round = 0; round < 64; ++round) {
        OverlapReport rep = check_confluence(max_deg);
        if (rep.unresolved() == 0) {
            if (interreduce(log)) rep = check_confluence(max_deg);
            rep.completion_log = log;
            return rep;
        }
        bool added = false;
        for (auto& o : rep.overlaps) {
            if (o.resolved) continue;
            NCPoly d = nf(o.diff);
            if (d.is_zero()) continue;
            if (d.degree() > cap) continue;
            if (d.is_scalar()) {
                rep.completion_log = log;
                rep.completion_log.push_back("completion stopped: overlap " + al_.word_str(o.word) +
                                             " forces 1 = 0 (inconsistent rules)");
                return rep;
            }
            Rule r = orient(d);
            log.push_back("add " + al_.word_str(r.lhs) + " -> " + r.rhs.str(al_) + "  (overlap " +
                          al_.word_str(o.word) + ")");
            rules_.push_back(r);
            index_rules();
            added = true;
            break;
        }
        if (!added) {
            rep.completion_log = log;
            rep.completion_log.push_back("completion stopped: remaining overlaps exceed the rule-degree cap");
            return rep;
        }
        interreduce(log);
    }
    OverlapReport rep = check_confluence(max_deg);
    rep.completion_log = log;
    rep.completion_log.push_back("completion stopped: round limit");
    return rep;
}

bool Presentation::interreduce(std::vector<std::string>& log) {
    bool changed = false;
    for (;;) {
        // rules whose lhs became reducible are turned back into relations
        int hit = -1;
        for (size_t k = 0; k < rules_.size() && hit < 0; ++k)
            for (size_t j = 0; j < rules_.size(); ++j)
                if (j != k && rules_[k].lhs.find(rules_[j].lhs) >= 0 && !(rules_[j].lhs == rules_[k].lhs && j > k)) {
                    hit = static_cast<int>(k);
                    break;
                }
        if (hit < 0) break;
        changed = true;
        NCPoly p = NCPoly::word(rules_[hit].lhs) - rules_[hit].rhs;
        rules_.erase(rules_.begin() + hit);
        index_rules();
        NCPoly d = nf(p);
        if (d.is_zero()) {
            log.push_back("drop " + al_.word_str(p.lead_word()));
            continue;
        }
        Rule r = orient(d);
        log.push_back("reorient " + al_.word_str(r.lhs) + " -> " + r.rhs.str(al_));
        rules_.push_back(r);
        index_rules();
    }
    for (auto& r : rules_) r.rhs = nf(r.rhs);
    index_rules();
    return changed;
}

std::vector<std::string> Presentation::validate() const {
    std::vector<std::string> issues;
    std::set<Word> seen;
    for (auto& r : rules_) {
        if (!seen.insert(r.lhs).second) issues.push_back("duplicate lhs " + al_.word_str(r.lhs));
        for (auto& [w, c] : r.rhs.terms())
            if (!(w < r.lhs)) issues.push_back("rule " + al_.word_str(r.lhs) + " is not decreasing");
    }
    return issues;
}

}  // namespace qc
