// Truncated Laurent series in t = 1/R with Scalar coefficients.
#pragma once

#include "qc/scalar.hpp"

#include <climits>
#include <vector>

namespace qc {

// precision of exact values
inline constexpr int kExact = INT_MAX / 4;

// Value known modulo t^(order+1). coeffs[j] is the coefficient of t^(val+j);
// an empty coefficient list means zero to the known precision.
class SeriesScalar {
public:
    SeriesScalar() : val_(0), order_(kExact) {}
    SeriesScalar(const Scalar& c, int order);
    static SeriesScalar t_power(int k, int order);
    static SeriesScalar from_coeffs(int val, std::vector<Scalar> c, int order);

    int order() const { return order_; }
    bool exact() const { return order_ >= kExact; }
    int val() const { return val_; }
    bool is_zero() const { return c_.empty(); }
    // coefficient of t^k, exact for k <= order()
    Scalar coeff(int k) const;
    // lowest nonzero coefficient
    const Scalar& leading() const { return c_.front(); }

    SeriesScalar truncate(int order) const;
    SeriesScalar shift(int k) const;
    SeriesScalar conj() const;
    SeriesScalar inv() const;

    SeriesScalar operator-() const;
    SeriesScalar& operator+=(const SeriesScalar& o);
    SeriesScalar& operator-=(const SeriesScalar& o) { return *this += -o; }
    friend SeriesScalar operator+(SeriesScalar a, const SeriesScalar& b) { return a += b; }
    friend SeriesScalar operator-(SeriesScalar a, const SeriesScalar& b) { return a -= b; }
    friend SeriesScalar operator*(const SeriesScalar& a, const SeriesScalar& b);
    friend SeriesScalar operator*(SeriesScalar a, const Scalar& b);
    friend SeriesScalar operator/(const SeriesScalar& a, const SeriesScalar& b) { return a * b.inv(); }
    // equal to the common precision
    friend bool operator==(const SeriesScalar& a, const SeriesScalar& b);

    std::string str(const std::string& tvar = "t", const std::string& var = "k") const;

private:
    void normalize();
    int val_;
    int order_;
    std::vector<Scalar> c_;
};

// e^(s t / kappa) truncated at t^order
SeriesScalar exp_series(long s, int order);
inline SeriesScalar mu_series(int order) { return exp_series(1, order); }
inline SeriesScalar mu_inverse_series(int order) { return exp_series(-1, order); }
// throws std::out_of_range beyond the truncation order
Scalar series_coeff(const SeriesScalar& s, int k);

// substitute the series mu = e^(t/kappa) for the variable of a Scalar that
// lives in Q(i)(mu); the result has kappa-valued coefficients
SeriesScalar substitute_mu(const Scalar& s, int order);

}  // namespace qc
