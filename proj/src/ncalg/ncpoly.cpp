#include "qc/ncpoly.hpp"

#include <algorithm>

namespace qc {

Alphabet::Alphabet(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& star,
                   std::string param)
    : names_(std::move(names)), param_(std::move(param)) {
    if (names_.size() > 200) throw std::invalid_argument("alphabet too large");
    star_.resize(names_.size());
    for (size_t g = 0; g < names_.size(); ++g) star_[g] = static_cast<Gen>(g);
    for (auto& [a, b] : star) {
        Gen x = id(a), y = id(b);
        star_[x] = y;
        star_[y] = x;
    }
    for (size_t g = 0; g < names_.size(); ++g)
        if (star_[star_[g]] != g) throw std::invalid_argument("star pairing is not involutive at " + names_[g]);
}

int Alphabet::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Gen Alphabet::id(const std::string& name) const {
    int k = find(name);
    if (k < 0) throw std::invalid_argument("unknown generator '" + name + "'");
    return static_cast<Gen>(k);
}

std::string Alphabet::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    int k = 0;
    while (k < w.size()) {
        int j = k;
        while (j < w.size() && w[j] == w[k]) ++j;
        if (!s.empty()) s += ' ';
        s += names_.at(w[k]);
        if (j - k > 1) s += "^" + std::to_string(j - k);
        k = j;
    }
    return s;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (this == &o) return *this *= Scalar(2);
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (this == &o) return *this = NCPoly();
    for (auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, x] : t_) x *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [wa, ca] : a.t_)
        for (auto& [wb, cb] : b.t_) r.add_term(wa * wb, ca * cb);
    return r;
}

NCPoly pow(const NCPoly& p, int n) {
    NCPoly r(1);
    for (int k = 0; k < n; ++k) r = r * p;
    return r;
}

NCPoly NCPoly::conj_coeffs() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = c.conj();
    return r;
}

NCPoly NCPoly::star(const Alphabet& al) const {
    NCPoly r;
    for (auto& [w, c] : t_) {
        Word s;
        for (int k = w.size(); k-- > 0;) s.push(al.star(w[k]));
        r.add_term(s, c.conj());
    }
    return r;
}

std::string coeff_prefix(const Scalar& c, const std::string& var, bool first, bool bare) {
    // bare: the term has no word, so the coefficient stands alone
    Scalar a = c;
    bool neg = false;
    if (!c.compound()) {
        std::string s = c.str(var);
        if (s[0] == '-') {
            neg = true;
            a = -c;
        }
    }
    std::string sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (bare) {
        std::string s = a.str(var);
        return sign + (a.compound() && !first ? "(" + s + ")" : s);
    }
    if (a.is_one()) return sign;
    std::string s = a.str(var);
    bool integer = a.is_constant() && a.constant().is_real() && a.constant().re.get_den() == 1;
    if (integer) return sign + s + " ";
    return sign + "(" + s + ") ";
}

std::string NCPoly::str(const Alphabet& al) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [w, c] = *it;
        s += coeff_prefix(c, al.param(), first, w.empty());
        if (!w.empty()) s += al.word_str(w);
        first = false;
    }
    return s;
}

NCPoly substitute(const NCPoly& p, const std::vector<NCPoly>& images) {
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        NCPoly t(c);
        for (Gen g : w) {
            if (g >= images.size()) throw std::invalid_argument("substitute: generator without image");
            t = t * images[g];
        }
        r += t;
    }
    return r;
}

TensorPoly TensorPoly::of(const NCPoly& a, const NCPoly& b) {
    TensorPoly r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) r.add_term(wa, wb, ca * cb);
    return r;
}

void TensorPoly::add_term(const Word& a, const Word& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(Key{a, b}, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (this == &o) return *this *= Scalar(2);
    for (auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    if (this == &o) return *this = TensorPoly();
    for (auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_) r.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return r;
}

std::string TensorPoly::str(const Alphabet& al) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        s += coeff_prefix(c, al.param(), first, false);
        s += al.word_str(k.first) + " @ " + al.word_str(k.second);
        first = false;
    }
    return s;
}

}  // namespace qc
