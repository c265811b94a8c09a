#include "corpus.hpp"
#include "laws.hpp"
#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/polar.hpp"

using namespace folpol;

namespace {

const int N = 32;

Branch axis_x() { return Branch(PowerSeries::monomial(Scalar(1), 1), PowerSeries::zero(PowerSeries::kExact), N); }
Branch axis_y() { return Branch(PowerSeries::zero(PowerSeries::kExact), PowerSeries::monomial(Scalar(1), 1), N); }

CurveSelection curve(const char* s) {
    CurveSelection c;
    c.curves.push_back(parse_poly(s));
    return c;
}

}  // namespace

TEST_CASE("polar intersections in reduced cases") {
    CHECK(polar_intersection(parse_form("y dx + 2x dy"), axis_y()) == 1);
    CHECK(polar_intersection(parse_form("y dx + 2x dy"), axis_x()) == 1);
    for (int k = 1; k <= 4; ++k) {
        OneForm sn = corpus::saddle_node(k, 1);
        CHECK(polar_intersection(sn, axis_x()) == k + 1);
        CHECK(polar_intersection(sn, axis_y()) == 1);
    }
    CHECK(polar_intersection(parse_form("y dx + x dy"), axis_x()) == 1);
    BranchDivisor xy;
    xy.items.push_back({axis_x(), 1, {}, false});
    xy.items.push_back({axis_y(), 1, {}, false});
    CHECK(polar_of_divisor(xy, 0) == 1);
    PolarCertificate cert;
    polar_intersection(parse_form("x dy - y dx"), axis_y(), {}, &cert);
    CHECK(cert.orders.size() >= 3);
}

TEST_CASE("polar of the equation of a branch: mu + mult - 1") {
    for (const char* s : {"y^2 - x^3", "y^3 - x^4", "y^2 - x^5", "(y^2 - x^3)^2 - 4x^5 y - x^7", "y - x^2"}) {
        CAPTURE(s);
        BivariatePoly f = parse_poly(s);
        Branch b = newton_puiseux(f, 64).front();
        int mu = intersection_number(f.dx(), f.dy()).value;
        CHECK(polar_of_equation(b) == mu + b.mult() - 1);
    }
}

TEST_CASE("polar excess in reduced cases") {
    ReductionTree nd = reduce(parse_form("2x dy + 3y dx"));
    CHECK(polar_excess(nd.germ(), nd, curve("x")) == 0);
    CHECK(polar_excess(nd.germ(), nd, curve("y")) == 0);
    for (int k = 1; k <= 4; ++k) {
        OneForm sn = corpus::saddle_node(k, 0);
        ReductionTree t = reduce(sn);
        CHECK(polar_excess(sn, t, curve("y")) == k);
        CHECK(polar_excess(sn, t, curve("x")) == 0);
        CHECK(polar_excess_rel(sn, t, curve("y")) == k + 1);
    }
    ReductionTree r = reduce(parse_form("x dy - y dx"));
    CurveSelection all;
    all.all_zeros = true;
    CHECK(polar_excess(r.germ(), r, all) == 0);
    CHECK(polar_excess_rel(r.germ(), r, curve("x")) == 1);
}

TEST_CASE("GSV by both routes") {
    ReductionTree r = reduce(parse_form("x dy - y dx"));
    CHECK(gsv_direct(r.germ(), r, curve("x")) == 1);
    CHECK(gsv_polar(r.germ(), r, curve("x")) == 1);
    CHECK(gsv_direct(r.germ(), r, curve("x y")) == 0);
    CHECK(gsv_polar(r.germ(), r, curve("x y")) == 0);
    ReductionTree c = reduce(parse_form("-3x^2 dx + 2y dy"));
    CHECK(gsv_direct(c.germ(), c, curve("y^2 - x^3")) == 0);
    CHECK(gsv_polar(c.germ(), c, curve("y^2 - x^3")) == 0);
    // generalized curve: GSV of all zeros is -(zeros, poles); poles carry coefficient -1
    ReductionTree q = reduce(parse_form("2x dy - 3y dx"));
    CurveSelection s = curve("y^2 - x^3");
    s.all_zeros = true;
    int expected = with_instance(q, s, [&](const LocalInstance& in) {
        return cross_intersection(in.f, in.f.zeros(), in.f.poles());
    });
    CHECK(expected < 0);
    CHECK(gsv_polar(q.germ(), q, s) == expected);
    CHECK(gsv_direct(q.germ(), q, s) == expected);
}

TEST_CASE("generalized curves via polar excess") {
    for (const char* s : {"x dy - y dx", "-3x^2 dx + 2y dy", "2x dy - 3y dx"}) {
        ReductionTree t = reduce(parse_form(s));
        CHECK(is_generalized_curve_polar(t.germ(), t));
    }
    ReductionTree e = reduce(parse_form("(x - y) dx + x^2 dy"));
    CHECK_FALSE(is_generalized_curve_polar(e.germ(), e));
}

TEST_CASE("polar identities on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        ReductionTree t = reduce(g.form);
        CurveSelection all;
        all.all_zeros = true;
        with_instance(t, all, [&](const LocalInstance& in) {
            int total = 0;
            for (int k : in.c) {
                int v = var_branch(g.form, in.f, k);
                CHECK(v >= 0);
                total += v;
                // relative vs absolute
                std::vector<int> others;
                for (int z : in.f.zeros())
                    if (z != k) others.push_back(z);
                CHECK(v == var_rel_set(g.form, in.f, {k}) - cross_intersection(in.f, {k}, others));
            }
            CHECK((total == 0) == is_generalized_curve_tree(t));
            // adjunction for the relative excess
            if (in.c.size() >= 2) {
                int a = in.c[0], b = in.c[1];
                CHECK(var_rel_set(g.form, in.f, {a, b}) ==
                      var_rel_set(g.form, in.f, {a}) + var_rel_set(g.form, in.f, {b}) -
                          2 * branch_intersection(in.f.items[a].branch, in.f.items[b].branch));
            }
            return 0;
        });
    }
}

TEST_CASE("first blow-up laws on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        auto bad = laws::first_blowup_laws(reduce(g.form));
        for (const auto& b : bad) CAPTURE(b);
        CHECK(bad.empty());
        if (!bad.empty()) MESSAGE(bad.front());
    }
}

TEST_CASE("two GSV routes and the generalized-curve criterion on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        ReductionTree t = reduce(g.form);
        CHECK(is_generalized_curve_polar(g.form, t) == is_generalized_curve_tree(t));
        int nz = with_instance(t, CurveSelection{{}, {}, true}, [](const LocalInstance& in) {
            return static_cast<int>(in.f.zeros().size());
        });
        std::vector<CurveSelection> sels;
        sels.push_back(CurveSelection{{}, {}, true});
        with_instance(t, CurveSelection{{}, {}, true}, [&](const LocalInstance& in) {
            auto z = in.f.zeros();
            sels.push_back(CurveSelection{{}, {z.front()}, false});
            if (z.size() >= 2) sels.push_back(CurveSelection{{}, {z.front(), z.back()}, false});
            return 0;
        });
        CHECK(nz >= 1);
        for (const auto& s : sels) {
            int d = gsv_direct(g.form, t, s), b = gsv_polar(g.form, t, s);
            CHECK(d == b);
            // relative excess against GSV
            int rel = polar_excess_rel(g.form, t, s);
            int poles = with_instance(t, s, [](const LocalInstance& in) {
                return -cross_intersection(in.f, in.c, in.f.poles());
            });
            CHECK(rel == d + poles);
        }
    }
}
