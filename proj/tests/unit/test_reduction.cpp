#include <random>

#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/parse.hpp"
#include "folpol/reduction.hpp"

using namespace folpol;

namespace {

int dicritical_count(const ReductionTree& t) {
    int n = 0;
    for (const auto& c : t.components()) n += c.dicritical;
    return n;
}

// Saddle-node (zeta x^k - k) y dx + x^(k+1) dy with the roles of x and y exchanged, so that the
// weak curve is {x = 0}, blown down from the point p.
OneForm tangent_saddle_node(int k, long zeta, const ChartPoint& p) {
    BivariatePoly X = BivariatePoly::x(), Y = BivariatePoly::y();
    OneForm normal((BivariatePoly(Scalar(zeta)) * pow(X, k) - BivariatePoly(k)) * Y, pow(X, k + 1));
    return blow_down_form(normal.swapped(), p);
}

}  // namespace

TEST_CASE("radial germ: one dicritical component of valence 0") {
    ReductionTree t = reduce(parse_form("x dy - y dx"));
    CHECK(t.length() == 1);
    CHECK(t.component(0).dicritical);
    CHECK(t.component(0).valence() == 0);
    CHECK(t.component(0).rho == 1);
    CHECK(t.component(0).nu_D == 2);
    CHECK(is_generalized_curve_tree(t));
    CHECK(is_second_type(t));
}

TEST_CASE("Euclid tree of 2x dy - 3y dx") {
    ReductionTree t = reduce(parse_form("2x dy - 3y dx"));
    REQUIRE(t.length() == 3);
    CHECK(dicritical_count(t) == 1);
    const auto& D = t.component(2);
    CHECK(D.dicritical);
    CHECK(D.valence() == 2);
    CHECK(t.component(0).rho == 1);
    CHECK(t.component(1).rho == 1);
    CHECK(D.rho == 2);
    // independent recount of valences from the node records
    std::vector<std::set<int>> adj(t.length());
    for (const auto& n : t.nodes())
        if (n.blown_up) {
            for (int d : n.components()) {
                adj[n.created].insert(d);
                adj[d].insert(n.created);
            }
            if (n.is_corner()) {
                adj[n.comp_x].erase(n.comp_y);
                adj[n.comp_y].erase(n.comp_x);
            }
        }
    for (int d = 0; d < t.length(); ++d) CHECK(int(adj[d].size()) == t.component(d).valence());
    CHECK(tangency_excess(t) == 0);
}

TEST_CASE("reduced germs give empty trees") {
    CHECK(reduce(parse_form("2x dy + 3y dx")).empty());
    ReductionTree e = reduce(parse_form("(x - y) dx + x^2 dy"));
    CHECK(e.empty());
    CHECK(tangency_excess(e) == 0);
    CHECK(is_second_type(e));
    CHECK_FALSE(is_generalized_curve_tree(e));
    CHECK(reduce(parse_form("dy")).empty());
}

TEST_CASE("cusp foliation d(y^2 - x^3)") {
    ReductionTree t = reduce(parse_form("-3x^2 dx + 2y dy"));
    CHECK(t.length() == 3);
    CHECK(dicritical_count(t) == 0);
    CHECK(t.component(2).rho == 2);
    CHECK(is_generalized_curve_tree(t));
    CHECK(tangency_excess(t) == 0);
    // exact differential: nu_D(df) = nu_D(f) - 1 with nu_D(f) = 2, 3, 6
    CHECK(t.component(0).nu_D == 1);
    CHECK(t.component(1).nu_D == 2);
    CHECK(t.component(2).nu_D == 5);
}

TEST_CASE("blown-down tangent saddle-nodes") {
    for (int k = 1; k <= 3; ++k)
        for (long zeta : {0L, -1L})
            for (const ChartPoint& p : {ChartPoint{ChartKind::X, Scalar()}, ChartPoint{ChartKind::X, Scalar(1)},
                                        ChartPoint{ChartKind::Y, Scalar()}}) {
                CAPTURE(k);
                CAPTURE(zeta);
                OneForm w = tangent_saddle_node(k, zeta, p);
                ReductionTree t = reduce(w);
                CHECK(t.length() >= 1);
                CHECK(tangency_excess(t) == t.component(0).rho * k);
                CHECK_FALSE(is_second_type(t));
                CHECK_FALSE(is_generalized_curve_tree(t));
                int c = t.child_at(0, p);
                REQUIRE(c >= 0);
                CHECK(t.node(c).cls.kind == SingClass::Kind::SaddleNode);
                CHECK(t.node(c).cls.weak_index == k + 1);
            }
}

TEST_CASE("blow-up ceiling") {
    CHECK_THROWS_AS(reduce(parse_form("2x dy - 3y dx"), ReduceOptions{2, 0}), CeilingExceeded);
    CHECK(reduce(parse_form("5x dy - 13y dx"), ReduceOptions{64, 0}).length() > 3);
}

TEST_CASE("tree invariants on random germs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    BivariatePoly X = BivariatePoly::x(), Y = BivariatePoly::y();
    int built = 0;
    for (int trial = 0; trial < 60 && built < 20; ++trial) {
        // product of rational linear forms as tangent cone keeps the special points rational
        BivariatePoly a, b;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                if (i + j == 0) continue;
                a.add_term(Scalar(c(rng)), i, j);
                b.add_term(Scalar(c(rng)), i, j);
            }
        OneForm w = OneForm(a, b).deflated();
        if (w.is_zero() || !w.is_singular()) continue;
        ReductionTree t;
        try {
            t = reduce(w);
        } catch (const NeedsAlgebraicExtension&) {
            continue;
        }
        ++built;
        for (int l : t.leaves()) {
            auto k = t.node(l).cls.kind;
            CHECK(k != SingClass::Kind::NotReduced);
        }
        for (const auto& D : t.components()) {
            CHECK(D.rho >= 1);
            CHECK(D.epsilon() == 1 - int(D.dicritical));
            for (int e : D.neighbors) CHECK_FALSE((D.dicritical && t.component(e).dicritical));
        }
    }
    CHECK(built >= 10);
}
