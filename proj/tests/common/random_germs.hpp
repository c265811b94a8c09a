#pragma once
#include <random>

#include "folpol/form.hpp"

namespace rgerm {
using namespace folpol;
inline const BivariatePoly X = BivariatePoly::x();
inline const BivariatePoly Y = BivariatePoly::y();

inline BivariatePoly random_form_poly(std::mt19937_64& rng, int from, int to) {
    std::uniform_int_distribution<int> coef(-3, 3);
    BivariatePoly p;
    for (int d = from; d <= to; ++d)
        for (int i = 0; i <= d; ++i) p.add_term(Scalar(coef(rng)), i, d - i);
    return p;
}

inline BivariatePoly linear_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    int p = 0, q = 0;
    while (p == 0 && q == 0) {
        p = coef(rng);
        q = coef(rng);
    }
    return BivariatePoly(p) * X + BivariatePoly(q) * Y;
}

// Random germ of multiplicity nu whose exceptional singular points are rational.
inline OneForm random_germ(std::mt19937_64& rng, int nu, bool dicritical) {
    BivariatePoly an, bn;
    if (dicritical) {
        BivariatePoly h(1);
        for (int i = 0; i < nu - 1; ++i) h *= linear_form(rng);
        an = -Y * h;
        bn = X * h;
    } else {
        BivariatePoly T(1);
        for (int i = 0; i <= nu; ++i) T *= linear_form(rng);
        bn = random_form_poly(rng, nu, nu);
        bn = bn - BivariatePoly::monomial(bn.coeff(0, nu), 0, nu) + BivariatePoly::monomial(T.coeff(0, nu + 1), 0, nu);
        an = exact_divide(T - Y * bn, X);
    }
    return OneForm(an + random_form_poly(rng, nu + 1, nu + 2), bn + random_form_poly(rng, nu + 1, nu + 1));
}

}  // namespace rgerm
