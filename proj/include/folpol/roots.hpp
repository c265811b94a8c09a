#pragma once
#include <vector>

#include "folpol/poly.hpp"

namespace folpol {

struct Root {
    Scalar value;
    int multiplicity = 1;
};

struct RootScan {
    std::vector<Root> roots;  // distinct roots in Q or a quadratic extension
    UniPoly leftover;         // cofactor without representable roots (constant when complete)
};

// Exact root finding: rational roots and roots of rational quadratic factors;
// for coefficients in Q(sqrt d) the norm polynomial supplies the candidates.
RootScan scan_roots(const UniPoly& p);
// As scan_roots but throws NeedsAlgebraicExtension when a root is not representable.
std::vector<Root> roots(const UniPoly& p);
// Square root of a rational number as an element of Q(sqrt s).
Scalar sqrt_rational(const Rational& q);
// Square-free part of a polynomial (monic).
UniPoly squarefree_part(const UniPoly& p);
// Integer-coefficient primitive multiple of a rational polynomial.
std::vector<Integer> integer_coefficients(const UniPoly& p);

}  // namespace folpol
