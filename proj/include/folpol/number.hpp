#pragma once
#include <gmpxx.h>

#include <string>

namespace folpol {

using Rational = mpq_class;
using Integer = mpz_class;

// Element a + b*sqrt(d) of Q(sqrt d); d squarefree, d == 0 marks a plain rational.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Rational& q) : a_(q) {}
    Scalar(const Rational& a, const Rational& b, long d);

    static Scalar sqrt_of(long d);  // sqrt(d) for squarefree d

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return d_ == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }
    const Rational& re() const { return a_; }
    const Rational& ir() const { return b_; }
    long radicand() const { return d_; }

    Scalar conj() const;
    Rational norm() const;  // a^2 - d b^2
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar operator-() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Total order used only for canonical sorting, not a field order.
    friend bool canonical_less(const Scalar& x, const Scalar& y);

    std::string str() const;
    double approx_real() const;  // real part of the numerical value when d > 0, else a

private:
    void normalize();
    long merge(const Scalar& o) const;

    Rational a_{0};
    Rational b_{0};
    long d_ = 0;
};

Scalar pow(Scalar base, unsigned e);
std::string rational_str(const Rational& q);

// Squarefree decomposition n = k^2 * s with s squarefree (sign kept in s).
void squarefree_split(const Integer& n, Integer& k, long& s);

}  // namespace folpol
