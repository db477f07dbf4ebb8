// Exact coefficients: Gaussian rationals and the field Q(i)(x) of rational
// functions in one real variable x (kappa by default, mu for SU_mu(2)).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GaussRat {
    mpq_class re, im;

    GaussRat() = default;
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    static GaussRat i() { return {0, 1}; }
    // parts already canonical (results of mpq arithmetic)
    static GaussRat raw(mpq_class r, mpq_class i) {
        GaussRat g;
        g.re = std::move(r);
        g.im = std::move(i);
        return g;
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRat conj() const { return raw(re, -im); }
    mpq_class norm() const { return re * re + im * im; }

    GaussRat operator-() const { return raw(-re, -im); }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        if (a.is_real() && b.is_real()) return raw(a.re * b.re, mpq_class());
        if (b.is_real()) return raw(a.re * b.re, a.im * b.re);
        if (a.is_real()) return raw(a.re * b.re, a.re * b.im);
        return raw(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        if (b.is_real()) return raw(a.re / b.re, a.im / b.re);
        mpq_class n = b.norm();
        return a * raw(b.re / n, -b.im / n);
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    std::string str() const;
};

// dense polynomial with rational coefficients, c[k] is the coefficient of x^k
using RPoly = std::vector<mpq_class>;
using GPoly = std::vector<GaussRat>;

// Element of Q(i)(x) stored as x^lo * num(x) / den(x) where
//   num(0) != 0, den is real, monic, den(0) != 0, and no nonconstant real
//   polynomial divides den, Re(num) and Im(num) at once.
// These conditions make the representation unique, so == is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : Scalar(GaussRat(n)) {}
    Scalar(const GaussRat& c);
    static Scalar i() { return Scalar(GaussRat::i()); }
    static Scalar var(int power = 1);
    static Scalar rat(long p, long q) { return Scalar(GaussRat(mpq_class(p, q))); }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const { return num_.size() <= 1 && lo_ == 0 && den_.size() == 1; }
    bool is_monomial() const { return num_.size() == 1 && den_.size() == 1; }
    bool is_real() const;
    // value when is_constant()
    GaussRat constant() const { return num_.empty() ? GaussRat() : num_[0]; }
    int lo() const { return lo_; }
    const GPoly& num() const { return num_; }
    const RPoly& den() const { return den_; }

    Scalar conj() const;
    Scalar inv() const;
    Scalar pow(int n) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.lo_ == b.lo_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // value at x = v (throws on a pole)
    GaussRat eval(const GaussRat& v) const;

    // text form accepted by the expression parser, e.g. "i/(4*k^2)"
    std::string str(const std::string& var = "k") const;
    // true if str() needs parentheses when used as a factor
    bool compound() const;

private:
    Scalar(int lo, GPoly num, RPoly den);
    void normalize();

    int lo_ = 0;
    GPoly num_;
    RPoly den_{mpq_class(1)};
};

namespace poly {
void trim(RPoly& p);
void trim(GPoly& p);
RPoly mul(const RPoly& a, const RPoly& b);
RPoly gcd(RPoly a, RPoly b);
// exact division, throws if b does not divide a
RPoly divexact(const RPoly& a, const RPoly& b);
RPoly divmod(const RPoly& a, const RPoly& b, RPoly* rem);
}  // namespace poly

}  // namespace qc
