#include "qc/scalar.hpp"

#include <sstream>

namespace qc {

std::string GaussRat::str() const {
    std::ostringstream os;
    if (is_real()) {
        os << re.get_str();
    } else if (sgn(re) == 0) {
        os << im.get_str() << "*i";
    } else {
        os << "(" << re.get_str() << (sgn(im) > 0 ? "+" : "-") << mpq_class(abs(im)).get_str()
           << "*i)";
    }
    return os.str();
}

namespace poly {

void trim(RPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(GPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RPoly mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

RPoly divmod(const RPoly& a, const RPoly& b, RPoly* rem) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    RPoly r = a;
    trim(r);
    if (r.size() < b.size()) {
        if (rem) *rem = r;
        return {};
    }
    RPoly q(r.size() - b.size() + 1);
    const mpq_class& lb = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        mpq_class c = r[k + b.size() - 1] / lb;
        q[k] = c;
        if (sgn(c) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    trim(r);
    trim(q);
    if (rem) *rem = r;
    return q;
}

RPoly divexact(const RPoly& a, const RPoly& b) {
    RPoly rem;
    RPoly q = divmod(a, b, &rem);
    if (!rem.empty()) throw DomainError("inexact polynomial division");
    return q;
}

static void make_monic(RPoly& p) {
    if (p.empty()) return;
    mpq_class lc = p.back();
    if (lc == 1) return;
    for (auto& c : p) c /= lc;
}

RPoly gcd(RPoly a, RPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RPoly r;
        divmod(a, b, &r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

}  // namespace poly

namespace {

GPoly gmul(const GPoly& a, const GPoly& b) {
    if (a.empty() || b.empty()) return {};
    GPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly::trim(r);
    return r;
}

GPoly gmul(const GPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    GPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j].re += a[i].re * b[j];
            r[i + j].im += a[i].im * b[j];
        }
    poly::trim(r);
    return r;
}

RPoly re_part(const GPoly& a) {
    RPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].re;
    poly::trim(r);
    return r;
}

RPoly im_part(const GPoly& a) {
    RPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].im;
    poly::trim(r);
    return r;
}

GPoly shifted(const GPoly& a, int by) {
    GPoly r(by, GaussRat());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

void add_into(GPoly& acc, const GPoly& b) {
    if (acc.size() < b.size()) acc.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) acc[i] += b[i];
}

bool is_unit_poly(const RPoly& p) { return p.size() == 1 && p[0] == 1; }

}  // namespace

Scalar::Scalar(const GaussRat& c) {
    if (!c.is_zero()) num_.push_back(c);
}

Scalar::Scalar(int lo, GPoly num, RPoly den) : lo_(lo), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Scalar Scalar::var(int power) {
    Scalar s(1);
    s.lo_ = power;
    return s;
}

bool Scalar::is_one() const { return lo_ == 0 && num_.size() == 1 && num_[0] == GaussRat(1) && den_.size() == 1; }

bool Scalar::is_real() const {
    for (auto& c : num_)
        if (!c.is_real()) return false;
    return true;
}

void Scalar::normalize() {
    poly::trim(num_);
    if (num_.empty()) {
        lo_ = 0;
        den_ = RPoly{mpq_class(1)};
        return;
    }
    poly::trim(den_);
    if (den_.empty()) throw DomainError("zero denominator");
    size_t z = 0;
    while (num_[z].is_zero()) ++z;
    if (z) {
        num_.erase(num_.begin(), num_.begin() + z);
        lo_ += static_cast<int>(z);
    }
    z = 0;
    while (sgn(den_[z]) == 0) ++z;
    if (z) {
        den_.erase(den_.begin(), den_.begin() + z);
        lo_ -= static_cast<int>(z);
    }
    if (den_.back() != 1) {
        mpq_class lc = den_.back();
        for (auto& c : den_) c /= lc;
        for (auto& c : num_) {
            c.re /= lc;
            c.im /= lc;
        }
    }
    if (den_.size() > 1) {
        RPoly g = poly::gcd(den_, re_part(num_));
        if (g.size() > 1) g = poly::gcd(g, im_part(num_));
        if (g.size() > 1) {
            den_ = poly::divexact(den_, g);
            RPoly r = poly::divexact(re_part(num_), g);
            RPoly m = poly::divexact(im_part(num_), g);
            num_.assign(std::max(r.size(), m.size()), GaussRat());
            for (size_t k = 0; k < r.size(); ++k) num_[k].re = r[k];
            for (size_t k = 0; k < m.size(); ++k) num_[k].im = m[k];
        }
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    for (auto& c : r.num_) c = c.conj();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (this == &o) return *this *= Scalar(2);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    GPoly a = lo_ == lo ? std::move(num_) : shifted(num_, lo_ - lo);
    GPoly b = o.lo_ == lo ? o.num_ : shifted(o.num_, o.lo_ - lo);
    if (den_ == o.den_) {
        add_into(a, b);
        num_ = std::move(a);
        lo_ = lo;
        if (is_unit_poly(den_)) {
            // no gcd needed; only strip the zero pattern
            poly::trim(num_);
            if (num_.empty()) {
                lo_ = 0;
                return *this;
            }
            size_t z = 0;
            while (num_[z].is_zero()) ++z;
            if (z) {
                num_.erase(num_.begin(), num_.begin() + z);
                lo_ += static_cast<int>(z);
            }
            return *this;
        }
        normalize();
        return *this;
    }
    GPoly s = gmul(a, o.den_);
    add_into(s, gmul(b, den_));
    *this = Scalar(lo, std::move(s), poly::mul(den_, o.den_));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (this == &o) return *this = Scalar();
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (this == &o) {
        Scalar c = o;
        return *this *= c;
    }
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (o.num_.size() == 1 && is_unit_poly(o.den_)) {
        for (auto& c : num_) c = c * o.num_[0];
        lo_ += o.lo_;
        return *this;
    }
    if (num_.size() == 1 && is_unit_poly(den_)) {
        GaussRat c = num_[0];
        int lo = lo_ + o.lo_;
        *this = o;
        for (auto& x : num_) x = c * x;
        lo_ = lo;
        return *this;
    }
    if (is_unit_poly(den_) && is_unit_poly(o.den_)) {
        num_ = gmul(num_, o.num_);
        lo_ += o.lo_;
        return *this;
    }
    *this = Scalar(lo_ + o.lo_, gmul(num_, o.num_), poly::mul(den_, o.den_));
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DomainError("division by zero");
    if (num_.size() == 1) {
        GaussRat c = GaussRat(1) / num_[0];
        GPoly n(den_.size());
        for (size_t k = 0; k < den_.size(); ++k) n[k] = c * GaussRat(den_[k]);
        return Scalar(-lo_, std::move(n), RPoly{mpq_class(1)});
    }
    GPoly cj(num_.size());
    for (size_t k = 0; k < num_.size(); ++k) cj[k] = num_[k].conj();
    RPoly re = re_part(num_), im = im_part(num_);
    RPoly nrm = poly::mul(re, re);
    RPoly im2 = poly::mul(im, im);
    if (nrm.size() < im2.size()) nrm.resize(im2.size());
    for (size_t k = 0; k < im2.size(); ++k) nrm[k] += im2[k];
    poly::trim(nrm);
    return Scalar(-lo_, gmul(cj, den_), std::move(nrm));
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

GaussRat Scalar::eval(const GaussRat& v) const {
    GaussRat n, d;
    for (size_t k = num_.size(); k-- > 0;) n = n * v + num_[k];
    for (size_t k = den_.size(); k-- > 0;) d = d * v + GaussRat(den_[k]);
    if (d.is_zero()) throw DomainError("pole in evaluation");
    GaussRat p(1);
    int e = lo_ < 0 ? -lo_ : lo_;
    for (int k = 0; k < e; ++k) p = p * v;
    if (lo_ < 0) return n / (d * p);
    return n * p / d;
}

namespace {

struct Term {
    mpq_class r;
    bool imag;
    int e;
};

std::string power(const std::string& var, int e) {
    return e == 1 ? var : var + "^" + std::to_string(e);
}

std::string join(const std::vector<std::string>& f) {
    std::string s;
    for (size_t k = 0; k < f.size(); ++k) s += (k ? "*" : "") + f[k];
    return s;
}

std::string format_terms(const std::vector<Term>& ts, const std::string& var) {
    if (ts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : ts) {
        bool neg = sgn(t.r) < 0;
        mpz_class p = abs(t.r.get_num()), q = t.r.get_den();
        std::vector<std::string> nf, df;
        if (p != 1 || (!t.imag && t.e <= 0)) nf.push_back(p.get_str());
        if (t.imag) nf.push_back("i");
        if (t.e > 0) nf.push_back(power(var, t.e));
        if (q != 1) df.push_back(q.get_str());
        if (t.e < 0) df.push_back(power(var, -t.e));
        std::string s = join(nf);
        if (!df.empty()) s += "/" + (df.size() > 1 ? "(" + join(df) + ")" : df[0]);
        if (first)
            out = neg ? "-" + s : s;
        else
            out += (neg ? " - " : " + ") + s;
        first = false;
    }
    return out;
}

std::vector<Term> terms_of(int lo, const GPoly& num) {
    std::vector<Term> ts;
    for (size_t k = 0; k < num.size(); ++k) {
        int e = lo + static_cast<int>(k);
        if (sgn(num[k].re) != 0) ts.push_back({num[k].re, false, e});
        if (sgn(num[k].im) != 0) ts.push_back({num[k].im, true, e});
    }
    return ts;
}

}  // namespace

std::string Scalar::str(const std::string& var) const {
    std::string n = format_terms(terms_of(lo_, num_), var);
    if (den_.size() == 1) return n;
    GPoly d(den_.size());
    for (size_t k = 0; k < den_.size(); ++k) d[k] = GaussRat(den_[k]);
    return "(" + n + ")/(" + format_terms(terms_of(0, d), var) + ")";
}

bool Scalar::compound() const {
    if (den_.size() > 1) return true;
    return terms_of(lo_, num_).size() > 1;
}

}  // namespace qc
