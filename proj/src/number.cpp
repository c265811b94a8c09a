#include "folpol/number.hpp"

#include <cmath>

#include "folpol/errors.hpp"

namespace folpol {

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    normalize();
}

Scalar Scalar::sqrt_of(long d) {
    if (d == 0) return Scalar();
    if (d == 1) return Scalar(1);
    return Scalar(Rational(0), Rational(1), d);
}

void Scalar::normalize() {
    if (sgn(b_) == 0) d_ = 0;
}

long Scalar::merge(const Scalar& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw NeedsAlgebraicExtension("values in Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " +
                                  std::to_string(o.d_) + ") cannot be combined");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (d_ == 0 && o.d_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    long d = merge(o);
    Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (d_ == 0) return Scalar(Rational(1) / a_);
    Rational n = norm();
    return Scalar(a_ / n, -b_ / n, d_);
}

bool canonical_less(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Scalar::str() const {
    if (d_ == 0) return rational_str(a_);
    std::string s;
    if (sgn(a_) != 0) s = rational_str(a_) + (sgn(b_) > 0 ? "+" : "-");
    else if (sgn(b_) < 0) s = "-";
    Rational ab = abs(b_);
    if (ab != 1) s += rational_str(ab) + "*";
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
}

double Scalar::approx_real() const {
    double v = a_.get_d();
    if (d_ > 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

Scalar pow(Scalar base, unsigned e) {
    Scalar r(1);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

void squarefree_split(const Integer& n, Integer& k, long& s) {
    if (n == 0) {
        k = 0;
        s = 0;
        return;
    }
    Integer m = abs(n);
    Integer kk = 1, ss = 1;
    for (unsigned long p = 2; Integer(p) * p <= m; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
            m /= p * p;
            kk *= p;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ss *= p;
        }
        if (p > 2000000) throw NeedsAlgebraicExtension("radicand too large to factor");
    }
    ss *= m;
    if (!ss.fits_slong_p()) throw NeedsAlgebraicExtension("radicand too large");
    k = kk;
    s = ss.get_si() * (sgn(n) < 0 ? -1 : 1);
}

}  // namespace folpol
