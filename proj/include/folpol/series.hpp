#pragma once
#include <string>
#include <vector>

#include "folpol/poly.hpp"

namespace folpol {

// Truncated power series in one variable t, known modulo t^prec.
// Coefficients beyond the stored vector (and below prec) are zero.
class PowerSeries {
public:
    static constexpr int kExact = 1 << 28;  // "no truncation"

    PowerSeries() = default;
    PowerSeries(std::vector<Scalar> coeffs, int prec);
    static PowerSeries constant(const Scalar& c, int prec = kExact);
    static PowerSeries monomial(const Scalar& c, int k, int prec = kExact);
    static PowerSeries from_poly(const UniPoly& p, int prec = kExact);
    static PowerSeries zero(int prec) { return PowerSeries({}, prec); }

    int prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const;
    // Index of the first nonzero coefficient, or prec when none is known to be nonzero.
    int valuation_bound() const;
    bool known_zero() const { return valuation_bound() >= prec_; }
    // Order, thrown as TruncationInsufficient unless it is below prec - slack.
    int order(int slack = 0) const;
    bool is_rational() const;

    PowerSeries truncated(int prec) const;
    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const Scalar& s);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const Scalar& s) { return a *= s; }
    PowerSeries operator-() const;

    PowerSeries shifted(int k) const;        // times t^k
    PowerSeries divided_by_t(int k) const;   // requires valuation_bound() >= k
    PowerSeries inverse(int cap = kExact) const;  // requires nonzero constant term
    PowerSeries derivative() const;
    PowerSeries integral() const;            // zero constant term
    PowerSeries pow(unsigned e) const;
    PowerSeries compose(const PowerSeries& inner) const;  // this(inner(t)), inner(0) = 0
    PowerSeries substitute_power(int e) const;             // this(t^e)
    // Infinite expansions of exact inputs are cut at cap.
    // (1 + this)^r for r rational, valuation_bound() >= 1
    PowerSeries binomial_power(const Rational& r, int cap = kExact) const;
    // Compositional inverse of a series t*c1 + ..., c1 != 0.
    PowerSeries reversion(int cap = kExact) const;

    std::string str(const std::string& var = "t", int max_terms = 12) const;

private:
    void trim();
    std::vector<Scalar> c_;
    int prec_ = kExact;
};

// Division a / b where b has known order k and a has valuation >= k.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b, int cap = PowerSeries::kExact);

// p(X(t), Y(t)) with precision tracking.
PowerSeries eval_poly(const BivariatePoly& p, const PowerSeries& X, const PowerSeries& Y);

// Saturating helpers for precision arithmetic.
inline int prec_add(int a, int b) {
    long s = static_cast<long>(a) + b;
    return s >= PowerSeries::kExact ? PowerSeries::kExact : static_cast<int>(s);
}
inline int prec_mul(int a, int b) {
    long s = static_cast<long>(a) * b;
    return s >= PowerSeries::kExact ? PowerSeries::kExact : static_cast<int>(s);
}

}  // namespace folpol
