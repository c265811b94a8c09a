#include <string>

#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/parse.hpp"
#include "folpol/projective.hpp"

using namespace folpol;

namespace {

OneForm quasi_radial(int p, int q) {
    return parse_form(std::to_string(p) + " y dx - " + std::to_string(q) + " x dy");
}
BivariatePoly cusp_curve(int p, int q) { return parse_poly("x^" + std::to_string(p) + " - y^" + std::to_string(q)); }

const char* kPencil = "(x^3 - 1)(x + 2y^2) dy - (y^3 - 1)(y + 2x^2) dx";

}  // namespace

TEST_CASE("homogeneous polynomials") {
    HomogPoly h = HomogPoly::homogenize(parse_poly("x^2 - y^3 + 1"), 3);
    CHECK(h.chart(ProjChart::Z) == parse_poly("x^2 - y^3 + 1"));
    // chart x = 1: (y, z) coordinates
    CHECK(h.chart(ProjChart::X) == parse_poly("y - x^3 + y^3"));
    CHECK(h.chart(ProjChart::Y) == parse_poly("x^2 y - 1 + y^3"));
    Matrix3 id{{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}};
    CHECK(h.linear_change(id) == h);
    CHECK(h.eval(Scalar(1), Scalar(1), Scalar(1)) == Scalar(1));
    CHECK((HomogPoly::var(2) * h).divide_by_var(2) == h);
}

TEST_CASE("degree from the homogeneous form and from tangencies") {
    CHECK(degree_of(ProjectiveFoliation::from_affine(parse_form("x dy - y dx"))).degree == 0);
    DegreeReport r = degree_of(ProjectiveFoliation::from_affine(quasi_radial(2, 3)));
    CHECK(r.degree == 1);
    CHECK(r.tangency_degree == 1);
    CHECK(degree_of(ProjectiveFoliation::from_affine(parse_form(kPencil))).degree == 4);
    CHECK(degree_of(ProjectiveFoliation::from_affine(parse_form("dx"))).degree == 0);
    CHECK(degree_of(ProjectiveFoliation::from_affine(parse_form("(x - y) dx + x^2 dy"))).degree == 2);
    // d(x^2 z / y^3) seen in chart z = 1
    CHECK(ProjectiveFoliation::from_affine(parse_form("2y dx - 3x dy")).degree() == 1);
    CHECK_THROWS_AS(ProjectiveFoliation::from_affine(parse_form("x dx + x dy")), InvalidInput);
}

TEST_CASE("charts agree on the foliation") {
    ProjectiveFoliation F = ProjectiveFoliation::from_affine(quasi_radial(2, 3));
    ProjectiveFoliation G = ProjectiveFoliation::from_affine(F.chart_form(ProjChart::X), ProjChart::X);
    for (int i = 0; i < 3; ++i) {
        // proportional coefficients
        HomogPoly a = F.coefficient(i), b = G.coefficient(i);
        Scalar ratio = F.coefficient(0).terms().begin()->second / G.coefficient(0).terms().begin()->second;
        CHECK(a == b * ratio);
    }
    // point b of the quasi-radial family: -q z dy + (q - p) y dz in chart x = 1
    CHECK(F.chart_form(ProjChart::X).a() == parse_poly("-3y"));
    CHECK(F.chart_form(ProjChart::X).b() == parse_poly("x"));
}

TEST_CASE("singular locus") {
    SingularLocus L = singular_locus(ProjectiveFoliation::from_affine(quasi_radial(2, 3)));
    REQUIRE(L.points.size() == 3);
    CHECK(L.points[0].str() == "[0:0:1]");
    CHECK(L.points[1].str() == "[1:0:0]");
    CHECK(L.points[2].str() == "[0:1:0]");
    CHECK(L.complete());
    SingularLocus R = singular_locus(ProjectiveFoliation::from_affine(parse_form("(x - 1) dy - (y - 2) dx")));
    REQUIRE(R.points.size() == 1);
    CHECK(R.points[0].str() == "[1:2:1]");

    SingularLocus P = singular_locus(ProjectiveFoliation::from_affine(parse_form(kPencil)));
    CHECK(P.points.size() == 21);
    int radial = 0, nondeg = 0;
    for (const auto& p : P.points) {
        CHECK(p.milnor == 1);
        if (classify(p.germ).kind == SingClass::Kind::NonDegenerate) ++nondeg;
        if (is_dicritical_first_blowup(p.germ)) ++radial;
    }
    CHECK(radial == 12);
    CHECK(nondeg == 9);

    // x^2 + 1 has no rational root: the points are reported as a cluster
    SingularLocus C = singular_locus(ProjectiveFoliation::from_affine(parse_form("(x^2 + 1) dx + y dy")));
    CHECK(C.complete());  // i = sqrt(-1) is representable
    SingularLocus D = singular_locus(ProjectiveFoliation::from_affine(parse_form("(x^3 - 2) dx + y dy")));
    CHECK_FALSE(D.complete());
}

TEST_CASE("Bezout count") {
    BezoutReport a = bezout_check(ProjectiveFoliation::from_affine(quasi_radial(2, 3)));
    CHECK(a.holds);
    CHECK(a.milnor_sum == 3);
    CHECK(a.generic_count == 3);
    BezoutReport r = bezout_check(ProjectiveFoliation::from_affine(parse_form("x dy - y dx")));
    CHECK(r.milnor_sum == 1);
    CHECK(r.holds);
    BezoutReport p = bezout_check(ProjectiveFoliation::from_affine(parse_form(kPencil)));
    CHECK(p.milnor_sum == 21);
    CHECK(p.generic_count == 21);
    BezoutReport c = bezout_check(ProjectiveFoliation::from_affine(parse_form("(x^3 - 2) dx + y dy")));
    CHECK_FALSE(c.locus.complete());
    CHECK(c.generic_count == c.expected);
    CHECK(c.holds);
    for (const char* s : {"(x - y) dx + x^2 dy", "(x^2 - y) dx + (y^2 - x + 1) dy", "x^2 dy - y^2 dx + x dx"}) {
        CAPTURE(s);
        CHECK(bezout_check(ProjectiveFoliation::from_affine(parse_form(s)), 7).holds);
    }
}

TEST_CASE("quasi-radial family: corrections, equality and Brunella") {
    struct Case {
        int p, q;
    };
    for (Case c : {Case{1, 2}, Case{2, 3}, Case{2, 5}, Case{3, 5}}) {
        CAPTURE(c.p);
        CAPTURE(c.q);
        ProjectiveFoliation F = ProjectiveFoliation::from_affine(quasi_radial(c.p, c.q));
        InvariantCurve S = InvariantCurve::from_affine(cusp_curve(c.p, c.q));
        REQUIRE(is_invariant(F, S));
        PoincareReport r = poincare_bound(F, S);
        REQUIRE(r.terms.size() == 2);
        CHECK(r.terms[0].point.str() == "[0:0:1]");
        CHECK(r.terms[0].correction() == c.p * c.q - c.p - c.q);
        CHECK(r.terms[1].point.str() == "[1:0:0]");
        CHECK(r.terms[1].correction() == c.q * c.q - c.q * c.p - 2 * c.q + c.p);
        CHECK(r.generalized_curves);
        CHECK(r.equality);
        CHECK(r.rhs == Rational(c.q));
        BrunellaReport b = brunella_identity(F, S);
        CHECK(b.holds);
        for (const auto& t : b.terms) CHECK(t.gsv == t.gsv_direct);
    }
}

TEST_CASE("Brunella identity and the bound on further pairs") {
    // line through a radial point
    ProjectiveFoliation R = ProjectiveFoliation::from_affine(parse_form("x dy - y dx"));
    BrunellaReport b = brunella_identity(R, InvariantCurve::from_affine(parse_poly("x")));
    CHECK(b.lhs == 1);
    CHECK(b.holds);
    // smooth conic invariant by a degree-one foliation
    ProjectiveFoliation C = ProjectiveFoliation::from_affine(parse_form("(x^2 + y^2 - 1) dx - 2x (x dx + y dy)"));
    InvariantCurve conic = InvariantCurve::from_affine(parse_poly("x^2 + y^2 - 1"));
    REQUIRE(is_invariant(C, conic));
    BrunellaReport bc = brunella_identity(C, conic);
    CHECK(bc.lhs == (C.degree() + 2 - 2) * 2);
    CHECK(bc.holds);
    PoincareReport pc = poincare_bound(C, conic);
    CHECK(pc.bound_holds);
    CHECK(pc.equality == pc.generalized_curves);
    // non-dicritical points with all separatrices in S: rhs = d + 2
    ProjectiveFoliation H = ProjectiveFoliation::from_affine(parse_form("y dx + 2x dy"));
    InvariantCurve axes = InvariantCurve::from_affine(parse_poly("x y"));
    PoincareReport ph = poincare_bound(H, axes);
    CHECK(ph.correction_sum < 0);
    CHECK(ph.bound_holds);
    InvariantCurve triangle{HomogPoly::homogenize(parse_poly("x y"), 3)};
    PoincareReport pt = poincare_bound(H, triangle);
    CHECK(pt.terms.size() == 3);
    CHECK(pt.correction_sum == 0);
    CHECK(pt.rhs == Rational(3));
    CHECK(pt.equality);
    CHECK(brunella_identity(H, triangle).holds);
    CHECK_THROWS_AS(poincare_bound(H, InvariantCurve::from_affine(parse_poly("x + y"))), NotInvariant);
}
