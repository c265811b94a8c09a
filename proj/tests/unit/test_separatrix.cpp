#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/parse.hpp"
#include "folpol/separatrix.hpp"

using namespace folpol;

namespace {

const int N = 24;

Branch line(long p, long q) {  // the line {q x = p y} parametrized by (p t, q t)
    return Branch(PowerSeries::monomial(Scalar(p), 1), PowerSeries::monomial(Scalar(q), 1), N);
}

bool same_curve(const Branch& a, const Branch& b) {
    try {
        branch_intersection(a, b);
        return false;
    } catch (const TruncationInsufficient&) {
        return true;
    } catch (const InfiniteIntersection&) {
        return true;
    }
}

int count_coeff(const BranchDivisor& f, int sign) {
    int n = 0;
    for (const auto& it : f.items) n += (sign > 0) == (it.coeff > 0);
    return n;
}

}  // namespace

TEST_CASE("radial curvets and balanced equations") {
    ReductionTree t = reduce(parse_form("x dy - y dx"));
    CHECK(separatrices(t, N).empty());
    Branch c0 = curvet(t, 0, {ChartKind::X, Scalar()}, N);
    Branch c1 = curvet(t, 0, {ChartKind::X, Scalar(1)}, N);
    CHECK(same_curve(c0, line(1, 0)));
    CHECK(same_curve(c1, line(1, 1)));

    BranchDivisor f = balanced_equation(t, {}, N);
    REQUIRE(f.items.size() == 2);
    CHECK(f.poles().empty());
    bool hx = false, hy = false;
    for (const auto& it : f.items) {
        hx = hx || same_curve(it.branch, line(0, 1));
        hy = hy || same_curve(it.branch, line(1, 0));
    }
    CHECK((hx && hy));
    CHECK(is_balanced(t, f));
    CHECK(pure_multiplicity(f) == 1);

    BranchDivisor g = balanced_equation(t, {line(1, 1)}, N);
    CHECK(count_coeff(g, 1) == 3);
    CHECK(count_coeff(g, -1) == 1);
    CHECK(same_curve(g.items[g.poles().front()].branch, line(1, -1)));
    CHECK(is_balanced(t, g));

    auto ps = pure_valuations(t, f);
    CHECK(ps.at(0) == 2);
    auto vs = divisor_valuations(t, f, N);
    CHECK(vs.at(0) == ps.at(0) + t.component(0).epsilon());
}

TEST_CASE("Euler: strong separatrix and formal weak separatrix") {
    ReductionTree t = reduce(parse_form("(x - y) dx + x^2 dy"));
    auto s = separatrices(t, N);
    REQUIRE(s.size() == 2);
    int formal = 0;
    for (const auto& b : s) {
        if (b.branch.formal()) {
            ++formal;
            Rational fact = 1;
            for (int n = 1; n < 10; ++n) {
                if (n > 1) fact *= n - 1;
                CHECK(b.branch.y().coeff(n) == Scalar(fact));
            }
        } else {
            CHECK(same_curve(b.branch, line(0, 1)));
        }
    }
    CHECK(formal == 1);
    BranchDivisor f = balanced_equation(t, {}, N);
    CHECK(f.multiplicity() == 2);
    CHECK(is_balanced(t, f));
}

TEST_CASE("2x dy - 3y dx: axes isolated, cuspidal curvets") {
    ReductionTree t = reduce(parse_form("2x dy - 3y dx"));
    auto s = separatrices(t, N);
    REQUIRE(s.size() == 2);
    bool hx = false, hy = false;
    for (const auto& b : s) {
        hx = hx || same_curve(b.branch, line(0, 1));
        hy = hy || same_curve(b.branch, line(1, 0));
    }
    CHECK((hx && hy));
    for (const auto& q : curvet_points(t, 2, 3)) {
        Branch c = curvet(t, 2, q, N);
        CHECK(c.mult() == 2);
        BivariatePoly e = c.equation_poly();
        for (const auto& [m, v] : e.terms()) CHECK(((m == Monomial{0, 2}) || (m == Monomial{3, 0})));
    }
    BranchDivisor f = balanced_equation(t, {}, N);
    CHECK(f.items.size() == 2);  // 2 - val = 0 curvets
    CHECK(is_balanced(t, f));
    // adapted to y^2 = x^3
    Branch cusp(PowerSeries::monomial(Scalar(1), 2), PowerSeries::monomial(Scalar(1), 3), N);
    Attachment a = locate(t, cusp);
    CHECK(a.kind == Attachment::Kind::Curvet);
    BranchDivisor g = balanced_equation(t, {cusp}, N);
    CHECK(count_coeff(g, 1) == 3);
    CHECK(count_coeff(g, -1) == 1);
    CHECK(is_balanced(t, g));
    // non-separatrix
    CHECK_THROWS_AS(locate(t, line(1, 1)), NotASeparatrix);
}

TEST_CASE("non-dicritical germs: product of separatrices") {
    for (const char* s : {"-3x^2 dx + 2y dy", "2x dy + 3y dx", "(2x + y^2) dy - y dx", "x dy + y dx"}) {
        CAPTURE(s);
        ReductionTree t = reduce(parse_form(s));
        BranchDivisor f = balanced_equation(t, {}, N);
        CHECK(f.poles().empty());
        CHECK(is_balanced(t, f));
        auto ps = pure_valuations(t, f);
        auto vs = divisor_valuations(t, f, N);
        for (const auto& D : t.components()) {
            CHECK(vs.at(D.id) == ps.at(D.id) + D.epsilon());
            CHECK(vs.at(D.id) > 0);
            if (is_second_type(t)) CHECK(ps.at(D.id) == D.nu_D);
        }
        CHECK(t.germ().multiplicity() == f.multiplicity() - 1 + tangency_excess(t));
    }
    ReductionTree pd = reduce(parse_form("(2x + y^2) dy - y dx"));
    CHECK(pure_multiplicity(balanced_equation(pd, {}, N)) == 0);
}

TEST_CASE("dicritical germs have positive pure multiplicity") {
    for (const char* s : {"x dy - y dx", "2x dy - 3y dx", "x dy - y dx + x^3 dy", "3x dy - 5y dx"}) {
        CAPTURE(s);
        ReductionTree t = reduce(parse_form(s));
        BranchDivisor f = balanced_equation(t, {}, N);
        CHECK(is_balanced(t, f));
        CHECK(pure_multiplicity(f) >= 1);
    }
}

TEST_CASE("unbalanced divisors are detected") {
    ReductionTree t = reduce(parse_form("x dy - y dx"));
    BranchDivisor f = balanced_equation(t, {}, N);
    f.items.pop_back();
    std::string why;
    CHECK_FALSE(is_balanced(t, f, &why));
    CHECK(!why.empty());
    // valuations of an unbalanced equation vanish on the dicritical component
    BranchDivisor g = balanced_equation(t, {line(1, 1)}, N);
    g.items.push_back({curvet(t, 0, {ChartKind::X, Scalar(5)}, N), -1, {}, false});
    CHECK(divisor_valuations(t, g, N).at(0) == 1);
    g.items.push_back({curvet(t, 0, {ChartKind::X, Scalar(7)}, N), -1, {}, false});
    CHECK(divisor_valuations(t, g, N).at(0) == 0);
}

TEST_CASE("blow-up of balanced equations") {
    SUBCASE("radial, regular point") {
        ReductionTree t = reduce(parse_form("x dy - y dx"));
        BranchDivisor f = balanced_equation(t, {}, N);
        CHECK(blown_up_balanced(t, f, {ChartKind::X, Scalar(1)}, N).items.empty());
    }
    for (const char* s : {"-3x^2 dx + 2y dy", "2x dy - 3y dx", "(x^2 - y^2) dy + x^3 dx", "(y + x^2) dy - x^3 dx"}) {
        CAPTURE(s);
        OneForm w = parse_form(s);
        ReductionTree t = reduce(w);
        BranchDivisor f = balanced_equation(t, {}, N);
        for (int c : t.node(0).children) {
            const ChartPoint& q = t.node(c).position;
            OneForm wq = blow_up_data(w, q).form;
            if (!wq.is_singular()) continue;
            BranchDivisor g = blown_up_balanced(t, f, q, N);
            ReductionTree tq = reduce(wq);
            std::string why;
            CHECK_MESSAGE(is_balanced(tq, g, &why), why);
        }
    }
}
