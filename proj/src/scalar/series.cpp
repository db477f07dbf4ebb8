#include "qc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc {

SeriesScalar::SeriesScalar(const Scalar& c, int order) : val_(0), order_(order) {
    if (order >= 0 && !c.is_zero()) c_.push_back(c);
    normalize();
}

SeriesScalar SeriesScalar::t_power(int k, int order) {
    SeriesScalar s;
    s.order_ = order;
    s.val_ = k;
    if (k <= order) s.c_.push_back(Scalar(1));
    s.normalize();
    return s;
}

SeriesScalar SeriesScalar::from_coeffs(int val, std::vector<Scalar> c, int order) {
    SeriesScalar s;
    s.val_ = val;
    s.order_ = order;
    s.c_ = std::move(c);
    s.normalize();
    return s;
}

void SeriesScalar::normalize() {
    int keep = order_ - val_ + 1;
    if (keep < 0) keep = 0;
    if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t z = 0;
    while (z < c_.size() && c_[z].is_zero()) ++z;
    if (z) {
        c_.erase(c_.begin(), c_.begin() + z);
        val_ += static_cast<int>(z);
    }
    if (c_.empty()) val_ = order_ + 1;
}

Scalar SeriesScalar::coeff(int k) const {
    if (k > order_) throw std::out_of_range("series coefficient beyond truncation order");
    if (k < val_ || k >= val_ + static_cast<int>(c_.size())) return Scalar();
    return c_[k - val_];
}

Scalar series_coeff(const SeriesScalar& s, int k) { return s.coeff(k); }

SeriesScalar SeriesScalar::truncate(int order) const {
    SeriesScalar r = *this;
    r.order_ = std::min(order_, order);
    r.normalize();
    return r;
}

SeriesScalar SeriesScalar::shift(int k) const {
    SeriesScalar r = *this;
    r.val_ += k;
    if (!r.exact()) r.order_ += k;
    return r;
}

SeriesScalar SeriesScalar::conj() const {
    SeriesScalar r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

SeriesScalar SeriesScalar::operator-() const {
    SeriesScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

SeriesScalar& SeriesScalar::operator+=(const SeriesScalar& o) {
    int order = std::min(order_, o.order_);
    if (o.c_.empty()) {
        order_ = order;
        normalize();
        return *this;
    }
    if (c_.empty()) {
        *this = o;
        order_ = order;
        normalize();
        return *this;
    }
    int lo = std::min(val_, o.val_);
    int hi = std::min(order, std::max(val_ + static_cast<int>(c_.size()), o.val_ + static_cast<int>(o.c_.size())) - 1);
    std::vector<Scalar> r(hi >= lo ? hi - lo + 1 : 0);
    for (size_t j = 0; j < c_.size(); ++j) {
        int e = val_ + static_cast<int>(j);
        if (e <= hi) r[e - lo] += c_[j];
    }
    for (size_t j = 0; j < o.c_.size(); ++j) {
        int e = o.val_ + static_cast<int>(j);
        if (e <= hi) r[e - lo] += o.c_[j];
    }
    c_ = std::move(r);
    val_ = lo;
    order_ = order;
    normalize();
    return *this;
}

SeriesScalar operator*(const SeriesScalar& a, const SeriesScalar& b) {
    SeriesScalar r;
    // a = t^va (known to oa), b likewise: product known to min(oa+vb, ob+va)
    r.order_ = std::min({a.order_ + b.val_, b.order_ + a.val_, kExact});
    r.val_ = a.val_ + b.val_;
    if (a.c_.empty() || b.c_.empty()) {
        r.c_.clear();
        r.normalize();
        return r;
    }
    long span = static_cast<long>(r.order_) - r.val_ + 1;
    int n = static_cast<int>(std::min<long>(span, static_cast<long>(a.c_.size() + b.c_.size()) - 1));
    if (n <= 0) {
        r.normalize();
        return r;
    }
    r.c_.assign(n, Scalar());
    for (size_t i = 0; i < a.c_.size() && static_cast<int>(i) < n; ++i)
        for (size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) < n; ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

SeriesScalar operator*(SeriesScalar a, const Scalar& b) {
    if (b.is_zero()) {
        a.c_.clear();
        a.normalize();
        return a;
    }
    for (auto& c : a.c_) c *= b;
    return a;
}

SeriesScalar SeriesScalar::inv() const {
    if (c_.empty()) throw DomainError("series inverse of zero (to known precision)");
    if (exact() && c_.size() == 1) return from_coeffs(-val_, {c_[0].inv()}, kExact);
    if (exact()) throw DomainError("series inverse of an exact non-monomial needs a truncation order");
    // this = t^v c0 (1 + u), relative precision p = order - v
    int p = order_ - val_;
    Scalar c0inv = c_[0].inv();
    std::vector<Scalar> u(p + 1);
    for (size_t j = 1; j < c_.size() && static_cast<int>(j) <= p; ++j) u[j] = c_[j] * c0inv;
    std::vector<Scalar> r(p + 1);
    r[0] = Scalar(1);
    for (int n = 1; n <= p; ++n) {
        Scalar s;
        for (int j = 1; j <= n; ++j)
            if (!u[j].is_zero() && !r[n - j].is_zero()) s += u[j] * r[n - j];
        r[n] = -s;
    }
    for (auto& x : r) x *= c0inv;
    return from_coeffs(-val_, std::move(r), -val_ + p);
}

bool operator==(const SeriesScalar& a, const SeriesScalar& b) {
    int order = std::min(a.order_, b.order_);
    return (a.truncate(order) - b.truncate(order)).is_zero();
}

std::string SeriesScalar::str(const std::string& tvar, const std::string& var) const {
    std::string s;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        int e = val_ + static_cast<int>(j);
        std::string c = c_[j].str(var);
        std::string term = e == 0 ? c : "(" + c + ")*" + tvar + (e == 1 ? "" : "^" + std::to_string(e));
        s += (s.empty() ? "" : " + ") + term;
    }
    if (s.empty()) s = "0";
    return s + " + O(" + tvar + "^" + std::to_string(order_ + 1) + ")";
}

SeriesScalar exp_series(long s, int order) {
    std::vector<Scalar> c;
    mpq_class f(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) f *= mpq_class(s, n);
        c.push_back(Scalar(GaussRat(f)) * Scalar::var(-n));
    }
    return SeriesScalar::from_coeffs(0, std::move(c), order);
}

SeriesScalar substitute_mu(const Scalar& s, int order) {
    if (s.is_zero()) return SeriesScalar(Scalar(), order);
    // numerator: sum_k c_k mu^(lo+k); e^(m t/kappa) expanded termwise
    auto eval_poly = [&](int lo, const std::vector<GaussRat>& coeffs, int ord) {
        std::vector<Scalar> out(ord + 1);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            long m = lo + static_cast<long>(k);
            mpq_class f(1);
            for (int n = 0; n <= ord; ++n) {
                if (n > 0) f *= mpq_class(m, n);
                if (sgn(f) == 0) break;
                out[n] += Scalar(coeffs[k] * GaussRat(f)) * Scalar::var(-n);
            }
        }
        return SeriesScalar::from_coeffs(0, std::move(out), ord);
    };
    std::vector<GaussRat> den;
    for (auto& q : s.den()) den.push_back(GaussRat(q));
    SeriesScalar d = eval_poly(0, den, order + 2 * static_cast<int>(den.size()));
    // a vanishing denominator at t = 0 costs precision; over-expand to compensate
    int extra = d.val();
    SeriesScalar n = eval_poly(s.lo(), s.num(), order + extra);
    d = eval_poly(0, den, order + 2 * extra);
    return (n / d).truncate(order);
}

}  // namespace qc
