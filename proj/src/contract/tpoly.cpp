#include "qc/contract.hpp"
#include "qc/parser.hpp"

#include <algorithm>

namespace qc {

TPoly TPoly::constant(const SeriesScalar& c) {
    TPoly r;
    r.add_term(Word(), c);
    return r;
}

TPoly TPoly::word(const Word& w) {
    TPoly r;
    r.add_term(w, SeriesScalar(Scalar(1), kExact));
    return r;
}

TPoly TPoly::of(const NCPoly& p) {
    TPoly r;
    for (auto& [w, c] : p.terms()) r.add_term(w, SeriesScalar(c, kExact));
    return r;
}

SeriesScalar TPoly::scalar_part() const {
    auto it = t_.find(Word());
    return it == t_.end() ? SeriesScalar().truncate(order_) : it->second;
}

int TPoly::valuation() const {
    int v = order_ + 1;
    for (auto& [w, c] : t_) v = std::min(v, c.val());
    return v;
}

int TPoly::degree() const {
    int d = -1;
    for (auto& [w, c] : t_) d = std::max(d, w.size());
    return d;
}

void TPoly::add_term(const Word& w, const SeriesScalar& c) {
    if (c.order() < order_) cap(c.order());
    if (c.is_zero()) return;
    SeriesScalar x = c.exact() || c.order() <= order_ ? c : c.truncate(order_);
    if (x.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, x);
    if (fresh) return;
    it->second += x;
    if (it->second.is_zero()) t_.erase(it);
}

void TPoly::cap(int order) {
    if (order >= order_) return;
    order_ = order;
    for (auto it = t_.begin(); it != t_.end();) {
        it->second = it->second.truncate(order);
        it = it->second.is_zero() ? t_.erase(it) : std::next(it);
    }
}

TPoly TPoly::truncate(int order) const {
    TPoly r = *this;
    r.cap(order);
    return r;
}

TPoly TPoly::shift(int k) const {
    TPoly r;
    r.order_ = order_ >= kExact ? kExact : order_ + k;
    for (auto& [w, c] : t_) r.t_.emplace(w, c.shift(k));
    return r;
}

TPoly TPoly::star(const Alphabet& al) const {
    TPoly r;
    r.order_ = order_;
    for (auto& [w, c] : t_) {
        Word s;
        for (int k = w.size(); k-- > 0;) s.push(al.star(w[k]));
        r.add_term(s, c.conj());
    }
    return r;
}

NCPoly TPoly::coeff(int k) const {
    if (k > order_) throw std::out_of_range("coefficient of t^" + std::to_string(k) + " is beyond the truncation order " + std::to_string(order_));
    NCPoly r;
    for (auto& [w, c] : t_) r.add_term(w, c.coeff(k));
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (this == &o) return *this = *this * Scalar(2);
    if (o.order_ < order_) cap(o.order_);
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    long oa = a.order_, ob = b.order_;
    r.order_ = static_cast<int>(std::min({oa + b.valuation(), ob + a.valuation(), static_cast<long>(kExact)}));
    for (auto& [wa, ca] : a.t_)
        for (auto& [wb, cb] : b.t_) r.add_term(wa * wb, ca * cb);
    return r;
}

TPoly operator*(TPoly a, const SeriesScalar& c) {
    if (c.is_zero()) {
        TPoly z;
        z.order_ = std::min(static_cast<long>(kExact), std::min(static_cast<long>(a.order_) + c.val(), static_cast<long>(c.order()) + a.valuation()));
        return z;
    }
    TPoly r;
    r.order_ = static_cast<int>(std::min({static_cast<long>(a.order_) + c.val(), static_cast<long>(c.order()) + a.valuation(), static_cast<long>(kExact)}));
    for (auto& [w, x] : a.t_) r.add_term(w, x * c);
    return r;
}

TPoly operator*(TPoly a, const Scalar& c) {
    if (c.is_zero()) {
        a.t_.clear();
        return a;
    }
    for (auto& [w, x] : a.t_) x = x * c;
    return a;
}

std::string TPoly::str(const Alphabet& al) const {
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "[" + it->second.str("t", al.param()) + "] " + al.word_str(it->first);
    }
    return s.empty() ? "0" : s;
}

SeriesRewriter::SeriesRewriter(Alphabet al, std::vector<std::pair<Word, TPoly>> rules)
    : al_(std::move(al)), rules_(std::move(rules)) {}

namespace {

int find_rule(const std::vector<std::pair<Word, TPoly>>& rules, const Word& w, int* pos) {
    for (int k = 0; k < w.size(); ++k)
        for (size_t r = 0; r < rules.size(); ++r) {
            const Word& l = rules[r].first;
            if (k + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + k)) {
                *pos = k;
                return static_cast<int>(r);
            }
        }
    return -1;
}

}  // namespace

TPoly SeriesRewriter::nf(const TPoly& p) const {
    TPoly r = TPoly().truncate(p.order());
    for (auto& [w, c] : p.terms()) {
        int pos;
        if (find_rule(rules_, w, &pos) < 0) {
            r.add_term(w, c);
            continue;
        }
        int budget = p.order() >= kExact ? kExact : p.order() - c.val();
        r += nf_word(w, budget) * c;
    }
    return r;
}

TPoly SeriesRewriter::nf_word(const Word& w, int budget) const {
    if (budget < 0) return TPoly().truncate(budget);
    {
        std::lock_guard lock(memo_->mu);
        auto it = memo_->map.find({w, budget});
        if (it != memo_->map.end()) return it->second;
    }
    int pos;
    int r = find_rule(rules_, w, &pos);
    TPoly res;
    if (r < 0) {
        res = TPoly::word(w);
    } else {
        const Word& l = rules_[r].first;
        TPoly e = TPoly::word(w.slice(0, pos)) * rules_[r].second * TPoly::word(w.slice(pos + l.size(), w.size()));
        res = TPoly().truncate(std::min(budget, e.order()));
        for (auto& [u, c] : e.terms()) {
            if (c.val() <= 0 && !(u < w))
                throw std::logic_error("series rule " + al_.word_str(l) + " does not decrease at t = 0");
            int pos2;
            if (find_rule(rules_, u, &pos2) < 0) {
                res.add_term(u, c);
                continue;
            }
            res += nf_word(u, budget - c.val()) * c;
        }
    }
    res.cap(budget);
    std::lock_guard lock(memo_->mu);
    memo_->map.emplace(std::make_pair(w, budget), res);
    return res;
}

SeriesRewriter series_rules_mu(const Presentation& p, int order) {
    std::vector<std::pair<Word, TPoly>> rules;
    for (auto& r : p.rules()) {
        TPoly rhs;
        for (auto& [w, c] : r.rhs.terms()) rhs.add_term(w, substitute_mu(c, order));
        rules.emplace_back(r.lhs, rhs);
    }
    return SeriesRewriter(p.alphabet(), std::move(rules));
}

namespace {

struct SeriesRing {
    using Value = TPoly;
    const Alphabet& al;
    int order;
    Value number(const mpz_class& n) const { return TPoly::constant(SeriesScalar(Scalar(GaussRat(mpq_class(n))), kExact)); }
    Value imag() const { return TPoly::constant(SeriesScalar(Scalar::i(), kExact)); }
    Value atom(const std::string& a, int pos) const {
        if (a == "t") return TPoly::constant(SeriesScalar::t_power(1, kExact));
        if (a == "mu") return TPoly::constant(mu_series(order));
        if (a == al.param()) return TPoly::constant(SeriesScalar(Scalar::var(), kExact));
        throw ParseError("atom '" + a + "' not allowed here", pos);
    }
    Value gen(Gen g) const { return TPoly::word(Word::of(g)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, int pos) const {
        if (!b.is_scalar() || b.is_zero()) throw ParseError("division by a non-scalar", pos);
        SeriesScalar d = b.scalar_part();
        try {
            return a * d.inv();
        } catch (const DomainError&) {
            return a * d.truncate(order).inv();
        }
    }
    Value tensor(const Node&, const Node&, int pos) const { throw ParseError("'@' not allowed here", pos); }
};

}  // namespace

TPoly parse_series(const std::string& text, const Alphabet& al, int order) {
    NodePtr n = parse_ast(text, al, {"t", "mu"});
    return eval_ast(*n, SeriesRing{al, order});
}

}  // namespace qc
