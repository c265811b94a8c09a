#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/poly.hpp"
#include "folpol/puiseux.hpp"
#include "folpol/roots.hpp"
#include "folpol/series.hpp"

using namespace folpol;

namespace {
const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();
}  // namespace

TEST_CASE("scalar arithmetic in a quadratic extension") {
    Scalar r3 = Scalar::sqrt_of(-3);
    CHECK(r3 * r3 == Scalar(-3));
    Scalar j = (Scalar(-1) + r3) * Scalar(Rational(1, 2));
    CHECK(j * j * j == Scalar(1));
    CHECK((j * j + j + Scalar(1)).is_zero());
    CHECK((Scalar(2) + r3).inverse() * (Scalar(2) + r3) == Scalar(1));
    CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), NeedsAlgebraicExtension);
}

TEST_CASE("polynomial basics") {
    CHECK((X * X * Y + pow(Y, 4)).order() == 3);
    CHECK((X * X - pow(Y, 3)).dx() == X * Scalar(2));
    BivariatePoly f = X * X + X * Y + pow(Y, 3);
    CHECK(f.initial_form() == X * X + X * Y);
    CHECK(f.translate(Scalar(1), Scalar(-1)).translate(Scalar(-1), Scalar(1)) == f);
    CHECK(f.substitute(Y, X) == f.swap_xy());
}

TEST_CASE("bivariate gcd and exact division") {
    BivariatePoly a = X * X - pow(Y, 3), b = X + Y * Scalar(2) + BivariatePoly(1), c = X * Y - BivariatePoly(3);
    BivariatePoly g = gcd(a * b * c, a * c * c);
    CHECK(divides(g, a * c));
    CHECK(divides(a * c, g));
    CHECK(exact_divide(a * b, b) == a);
    CHECK_FALSE(divides(b, a));
    CHECK(gcd(a, b).is_constant());
}

TEST_CASE("power series operations") {
    auto one_plus_t = PowerSeries({Scalar(1), Scalar(1)}, PowerSeries::kExact);
    auto inv = one_plus_t.inverse(10);
    for (int k = 0; k < 10; ++k) CHECK(inv.coeff(k) == Scalar(k % 2 ? -1 : 1));
    auto h = PowerSeries({Scalar(0), Scalar(1)}, 12);
    auto sq = h.binomial_power(Rational(1, 2));
    auto back = sq * sq;
    CHECK(back.coeff(0) == Scalar(1));
    CHECK(back.coeff(1) == Scalar(1));
    for (int k = 2; k < 12; ++k) CHECK(back.coeff(k).is_zero());
    auto s = PowerSeries({Scalar(0), Scalar(2), Scalar(3), Scalar(-1)}, 16);
    auto T = s.reversion();
    auto id = s.compose(T);
    CHECK(id.coeff(1) == Scalar(1));
    for (int k = 2; k < 16; ++k) CHECK(id.coeff(k).is_zero());
}

TEST_CASE("exact roots") {
    UniPoly t = UniPoly::var();
    UniPoly p = (t - UniPoly(Scalar(2))) * (t - UniPoly(Scalar(2))) * (t * Scalar(3) + UniPoly(Scalar(1))) *
                (t * t + t + UniPoly(Scalar(1)));
    auto rs = roots(p);
    int total = 0;
    for (auto& r : rs) {
        CHECK(p.eval(r.value).is_zero());
        total += r.multiplicity;
    }
    CHECK(total == p.degree());
    UniPoly cubic = t * t * t - UniPoly(Scalar(2));
    CHECK_THROWS_AS(roots(cubic), NeedsAlgebraicExtension);
    auto scan = scan_roots(cubic * (t - UniPoly(Scalar(5))));
    CHECK(scan.roots.size() == 1);
    CHECK(scan.leftover.degree() == 3);
    UniPoly ext = t * t - UniPoly(Scalar::sqrt_of(-3)) * t;  // roots 0 and sqrt(-3)
    auto er = roots(ext);
    CHECK(er.size() == 2);
}

namespace {
int inum(const BivariatePoly& f, const BivariatePoly& g) {
    auto v = intersection_number(f, g);
    REQUIRE_FALSE(v.infinite);
    return v.value;
}
}  // namespace

TEST_CASE("newton-puiseux on reference curves") {
    auto cusp = newton_puiseux(Y * Y - pow(X, 3), 20);
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].x().coeffs() == std::vector<Scalar>{0, 0, 1});
    CHECK(cusp[0].y().coeffs() == std::vector<Scalar>{0, 0, 0, 1});
    CHECK(newton_puiseux(X * Y, 10).size() == 2);
    auto b = newton_puiseux(X * X - pow(Y, 3), 12);
    REQUIRE(b.size() == 1);
    CHECK(b[0].x().coeff(3) == Scalar(1));
    CHECK(b[0].y().coeff(2) == Scalar(1));
    CHECK(eval_poly(X * X - pow(Y, 3), b[0].x(), b[0].y()).known_zero());
}

TEST_CASE("newton-puiseux branch count and consistency") {
    // (y^2 - x^3)(y - x^2)(y^2 + x^2 - x^5)... mixed slopes and a conjugate pair over Q(i)
    BivariatePoly f = (Y * Y - pow(X, 3)) * (Y - X * X) * (Y * Y + X * X + pow(X, 5));
    auto bs = newton_puiseux(f, 30);
    CHECK(bs.size() == 4);
    for (const auto& br : bs) {
        auto comp = eval_poly(f, br.x(), br.y());
        CHECK(comp.valuation_bound() >= std::min(comp.prec(), 28));
        auto self = br.equation().eval(br.x(), br.y());
        CHECK(self.valuation_bound() >= std::min(self.prec(), 20));
    }
}

TEST_CASE("intersection numbers") {
    CHECK(inum(X, Y) == 1);
    CHECK(inum(X * X - pow(Y, 3), X * Y) == 5);
    CHECK(inum(X * X - pow(Y, 3), X * X - pow(Y, 3) * Scalar(2)) == 6);
    CHECK(intersection_number(X * Y, X * (X + Y)).infinite);
    CHECK(inum(X - Y, X * X) == 2);
    CHECK(intersection_number_branches(X * X - pow(Y, 3), X * Y).value == 5);
}

TEST_CASE("branch intersections") {
    auto axes = newton_puiseux(X * Y, 10);
    CHECK(branch_intersection(axes[0], axes[1]) == 1);
    auto cusp = newton_puiseux(Y * Y - pow(X, 3), 20)[0];
    auto xaxis = newton_puiseux(Y, 20)[0];
    CHECK(branch_intersection(cusp, xaxis) == 3);
    auto diag = newton_puiseux((Y - X) * (Y + X), 10);
    CHECK(branch_intersection(diag[0], diag[1]) == 1);
}
