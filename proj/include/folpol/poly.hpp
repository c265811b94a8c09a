#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folpol/number.hpp"

namespace folpol {

// Dense univariate polynomial, coefficient of t^k at index k; never has trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Scalar c);
    explicit UniPoly(std::vector<Scalar> coeffs);
    static UniPoly monomial(const Scalar& c, int k);
    static UniPoly var() { return monomial(Scalar(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const;
    Scalar lead() const { return c_.empty() ? Scalar() : c_.back(); }
    int order() const;  // lowest exponent with nonzero coefficient, -1 for zero
    bool is_rational() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
    friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }
    friend UniPoly operator*(UniPoly p, const UniPoly& q) { return p *= q; }
    friend UniPoly operator*(UniPoly p, const Scalar& s) { return p *= s; }
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

    Scalar eval(const Scalar& t) const;
    UniPoly derivative() const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly monic() const;
    UniPoly conj() const;
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient, throws otherwise
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);  // monic
UniPoly pow(const UniPoly& p, unsigned e);

using Monomial = std::pair<int, int>;  // (exponent of x, exponent of y)

// Sparse polynomial in x, y with coefficients in Q(sqrt d).
class BivariatePoly {
public:
    using Terms = std::map<Monomial, Scalar>;

    BivariatePoly() = default;
    BivariatePoly(Scalar c);
    BivariatePoly(long c) : BivariatePoly(Scalar(c)) {}
    BivariatePoly(int c) : BivariatePoly(Scalar(c)) {}
    static BivariatePoly monomial(const Scalar& c, int i, int j);
    static BivariatePoly x() { return monomial(Scalar(1), 1, 0); }
    static BivariatePoly y() { return monomial(Scalar(1), 0, 1); }
    static BivariatePoly from_terms(const Terms& t);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar coeff(int i, int j) const;
    Scalar constant_term() const { return coeff(0, 0); }
    int order() const;   // lowest total degree, -1 for zero
    int degree() const;  // highest total degree, -1 for zero
    int degree_x() const;
    int degree_y() const;
    int order_in_x() const;  // largest k with x^k dividing, -1 for zero
    int order_in_y() const;
    bool is_rational() const;
    long radicand() const;  // common radicand of coefficients (0 if rational)

    void add_term(const Scalar& c, int i, int j);
    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Scalar& s);
    friend BivariatePoly operator+(BivariatePoly p, const BivariatePoly& q) { return p += q; }
    friend BivariatePoly operator-(BivariatePoly p, const BivariatePoly& q) { return p -= q; }
    friend BivariatePoly operator*(BivariatePoly p, const BivariatePoly& q) { return p *= q; }
    friend BivariatePoly operator*(BivariatePoly p, const Scalar& s) { return p *= s; }
    friend BivariatePoly operator*(const Scalar& s, BivariatePoly p) { return p *= s; }
    BivariatePoly operator-() const;
    friend bool operator==(const BivariatePoly& p, const BivariatePoly& q) { return p.t_ == q.t_; }
    friend bool operator!=(const BivariatePoly& p, const BivariatePoly& q) { return !(p == q); }

    BivariatePoly dx() const;
    BivariatePoly dy() const;
    BivariatePoly homogeneous_part(int k) const;
    BivariatePoly initial_form() const { return homogeneous_part(order()); }
    BivariatePoly truncated(int deg) const;  // keep total degree < deg
    BivariatePoly swap_xy() const;
    BivariatePoly shift_exponents(int di, int dj) const;  // multiply by x^di y^dj (negative allowed if exact)
    BivariatePoly conj() const;

    Scalar eval(const Scalar& x, const Scalar& y) const;
    UniPoly eval_x(const Scalar& x0) const;  // polynomial in y
    UniPoly eval_y(const Scalar& y0) const;  // polynomial in x
    // p(X(x,y), Y(x,y))
    BivariatePoly substitute(const BivariatePoly& X, const BivariatePoly& Y) const;
    BivariatePoly translate(const Scalar& x0, const Scalar& y0) const;  // p(x + x0, y + y0)
    // Binary form of a homogeneous polynomial dehomogenized at x = 1: coefficient of u^j is coeff(k-j, j).
    UniPoly dehomogenize_x() const;
    UniPoly dehomogenize_y() const;  // at y = 1, variable is x

    std::vector<UniPoly> as_poly_in_y() const;  // index j -> coefficient polynomial in x
    static BivariatePoly from_poly_in_y(const std::vector<UniPoly>& c);

    std::string str() const;

private:
    Terms t_;
};

BivariatePoly pow(const BivariatePoly& p, unsigned e);

// Exact division; throws std::domain_error when the division is not exact.
BivariatePoly exact_divide(const BivariatePoly& f, const BivariatePoly& g);
bool divides(const BivariatePoly& g, const BivariatePoly& f);
// gcd normalized so that its leading (lexicographically largest) coefficient is one.
BivariatePoly gcd(const BivariatePoly& f, const BivariatePoly& g);

}  // namespace folpol
