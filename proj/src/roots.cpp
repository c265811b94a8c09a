#include "folpol/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "folpol/errors.hpp"

namespace folpol {

using cld = std::complex<long double>;

Scalar sqrt_rational(const Rational& q) {
    if (sgn(q) == 0) return Scalar();
    Integer num = q.get_num(), den = q.get_den();
    Integer k;
    long s;
    squarefree_split(num * den, k, s);
    Rational coef(k, den);
    coef.canonicalize();
    if (s == 1) return Scalar(coef);
    return Scalar(Rational(0), coef, s);
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    return (p / g).monic();
}

std::vector<Integer> integer_coefficients(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) throw std::logic_error("integer_coefficients on non-rational polynomial");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    }
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational r = c.re() * l;
        v.push_back(r.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
    return v;
}

namespace {

long double to_ld(const Integer& z) { return static_cast<long double>(z.get_d()); }

// Aberth-Ehrlich simultaneous iteration on a square-free polynomial.
std::vector<cld> numeric_roots(const std::vector<Integer>& ic) {
    int n = static_cast<int>(ic.size()) - 1;
    std::vector<cld> a(n + 1);
    long double lead = to_ld(ic[n]);
    for (int k = 0; k <= n; ++k) a[k] = cld(to_ld(ic[k]) / lead, 0);
    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k]));
    bound = 1 + bound;
    std::vector<cld> z(n);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int k = 0; k < n; ++k) {
        long double ang = 2 * pi * k / n + 0.4L;
        z[k] = std::polar(bound * 0.5L + 0.1L * k / n, ang);
    }
    auto eval = [&](cld x, cld& d) {
        cld p = a[n];
        d = 0;
        for (int k = n - 1; k >= 0; --k) {
            d = d * x + p;
            p = p * x + a[k];
        }
        return p;
    };
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            cld d;
            cld p = eval(z[i], d);
            if (p == cld(0)) continue;
            cld ratio = p / d;
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += cld(1) / (z[i] - z[j]);
            cld w = ratio / (cld(1) - ratio * s);
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[i])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

// Continued-fraction convergents of v whose error is below tol.
std::vector<Rational> rational_candidates(long double v, long double tol) {
    std::vector<Rational> out;
    if (!std::isfinite(v)) return out;
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double x = v;
    for (int it = 0; it < 40; ++it) {
        long double fl = std::floor(x);
        if (std::fabs(fl) > 1e18L) break;
        Integer a(static_cast<double>(fl));
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational c(h1, k1);
        c.canonicalize();
        long double err = std::fabs(static_cast<long double>(c.get_d()) - v);
        if (err <= tol * std::max<long double>(1, std::fabs(v))) out.push_back(c);
        if (err == 0 || k1 > Integer("1000000000000")) break;
        long double frac = x - fl;
        if (frac < 1e-30L) break;
        x = 1 / frac;
    }
    return out;
}

// Roots of x^2 - s x + p.
std::vector<Scalar> quadratic_roots(const Rational& s, const Rational& p) {
    Rational disc = s * s - 4 * p;
    Scalar r = sqrt_rational(disc);
    Scalar half(Rational(1, 2));
    return {(Scalar(s) + r) * half, (Scalar(s) - r) * half};
}

// Candidate roots of a rational polynomial: exact rational roots and roots of quadratic factors.
std::vector<Scalar> rational_poly_candidates(const UniPoly& p) {
    std::vector<Scalar> out;
    UniPoly s = squarefree_part(p);
    int n = s.degree();
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(-s.coeff(0) / s.coeff(1));
        return out;
    }
    if (n == 2) {
        Scalar a = s.coeff(2);
        auto rs = quadratic_roots((-s.coeff(1) / a).re(), (s.coeff(0) / a).re());
        return rs;
    }
    auto ic = integer_coefficients(s);
    auto z = numeric_roots(ic);
    UniPoly rest = s;
    std::vector<bool> used(z.size(), false);
    const long double tol = 1e-9L;
    for (size_t i = 0; i < z.size(); ++i) {
        if (std::fabs(z[i].imag()) > 1e-6L * std::max<long double>(1, std::abs(z[i]))) continue;
        for (const auto& c : rational_candidates(z[i].real(), tol)) {
            if (rest.eval(Scalar(c)).is_zero()) {
                out.push_back(Scalar(c));
                rest = rest / UniPoly(std::vector<Scalar>{Scalar(-c), Scalar(1)});
                used[i] = true;
                break;
            }
        }
    }
    for (size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        for (size_t j = i + 1; j < z.size(); ++j) {
            if (used[j] || used[i]) continue;
            cld sum = z[i] + z[j], prod = z[i] * z[j];
            if (std::fabs(sum.imag()) > 1e-6L * std::max<long double>(1, std::abs(sum))) continue;
            if (std::fabs(prod.imag()) > 1e-6L * std::max<long double>(1, std::abs(prod))) continue;
            bool done = false;
            for (const auto& sc : rational_candidates(sum.real(), tol)) {
                for (const auto& pc : rational_candidates(prod.real(), tol)) {
                    UniPoly q(std::vector<Scalar>{Scalar(pc), Scalar(-sc), Scalar(1)});
                    UniPoly qq, rr;
                    if (rest.degree() < 2) break;
                    divmod(rest, q, qq, rr);
                    if (rr.is_zero()) {
                        for (auto& r : quadratic_roots(sc, pc)) out.push_back(r);
                        rest = qq;
                        used[i] = used[j] = true;
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
    return out;
}

}  // namespace

RootScan scan_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    RootScan out;
    out.leftover = p;
    if (p.degree() <= 0) return out;
    std::vector<Scalar> cands;
    long d = 0;
    if (p.is_rational()) {
        cands = rational_poly_candidates(p);
    } else {
        for (const auto& c : p.coeffs())
            if (!c.is_rational()) d = c.radicand();
        UniPoly norm = p * p.conj();
        std::vector<Scalar> nr;
        for (const auto& c : norm.coeffs()) nr.push_back(Scalar(c.re()));
        for (const auto& c : rational_poly_candidates(UniPoly(nr)))
            if (c.is_rational() || c.radicand() == d) cands.push_back(c);
    }
    UniPoly rest = p;
    if (p.is_rational()) {
        // Multiplicity by derivatives, cofactor by rational minimal polynomials.
        for (size_t i = 0; i < cands.size(); ++i) {
            const Scalar& c = cands[i];
            int m = 0;
            UniPoly der = p;
            while (der.degree() >= 0 && der.eval(c).is_zero()) {
                ++m;
                der = der.derivative();
            }
            if (m == 0) continue;
            out.roots.push_back({c, m});
            UniPoly minpoly;
            if (c.is_rational()) {
                minpoly = UniPoly(std::vector<Scalar>{-c, Scalar(1)});
            } else {
                bool seen = false;
                for (size_t k = 0; k < i; ++k)
                    if (cands[k] == c.conj()) seen = true;
                if (seen) continue;
                Scalar sum = c + c.conj(), prod = c * c.conj();
                minpoly = UniPoly(std::vector<Scalar>{prod, -sum, Scalar(1)});
            }
            for (int k = 0; k < m; ++k) rest = rest / minpoly;
        }
    } else {
        for (const auto& c : cands) {
            int m = 0;
            UniPoly lin(std::vector<Scalar>{-c, Scalar(1)});
            for (;;) {
                if (rest.degree() < 1) break;
                UniPoly q, r;
                divmod(rest, lin, q, r);
                if (!r.is_zero()) break;
                rest = q;
                ++m;
            }
            if (m > 0) out.roots.push_back({c, m});
        }
    }
    out.leftover = rest;
    return out;
}

std::vector<Root> roots(const UniPoly& p) {
    RootScan s = scan_roots(p);
    if (s.leftover.degree() > 0)
        throw NeedsAlgebraicExtension("polynomial factor " + s.leftover.str("t") +
                                      " has roots outside Q and the enabled quadratic extension");
    return s.roots;
}

}  // namespace folpol
