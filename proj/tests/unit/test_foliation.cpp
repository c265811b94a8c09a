#include <random>

#include "doctest.h"
#include "folpol/errors.hpp"
#include "folpol/form.hpp"
#include "random_germs.hpp"

using namespace folpol;

namespace {
const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();
BivariatePoly C(long v) { return BivariatePoly(v); }

OneForm radial() { return OneForm(-Y, X); }
OneForm euler() { return OneForm(X - Y, X * X); }
// (zeta x^k - k) y dx + x^(k+1) dy
OneForm saddle_node(int k, long zeta) {
    return OneForm((C(zeta) * pow(X, k) - C(k)) * Y, pow(X, k + 1));
}
Branch line_y0(int n) { return Branch(PowerSeries::monomial(1, 1), PowerSeries::zero(PowerSeries::kExact), n); }
Branch line_x0(int n) { return Branch(PowerSeries::zero(PowerSeries::kExact), PowerSeries::monomial(1, 1), n); }
}  // namespace

TEST_CASE("multiplicity") {
    CHECK(multiplicity(radial()) == 1);
    CHECK(multiplicity(euler()) == 1);
    CHECK(multiplicity(OneForm(C(4) * pow(X, 3), C(2) * Y + C(4) * X * X)) == 1);
}

TEST_CASE("milnor numbers") {
    CHECK(milnor(radial()).value == 1);
    CHECK(milnor(euler()).value == 2);
    CHECK(milnor(OneForm(C(1), C(0))).value == 0);
    CHECK(milnor(OneForm(X * Y, X * X)).infinite);
}

TEST_CASE("first blow-up dicriticity") {
    CHECK(is_dicritical_first_blowup(radial()));
    CHECK_FALSE(is_dicritical_first_blowup(OneForm(C(-3) * Y, C(2) * X)));
    CHECK_FALSE(is_dicritical_first_blowup(OneForm(Y, X)));
}

TEST_CASE("blow-up transforms") {
    OneForm r = blow_up(radial(), ChartKind::X, Scalar(0));
    CHECK(r.a().is_zero());
    CHECK(r.b() == C(1));
    OneForm q = blow_up(OneForm(C(-3) * Y, C(2) * X), ChartKind::X, Scalar(0));
    CHECK(q.a() == -Y);
    CHECK(q.b() == C(2) * X);
    // y dx - lambda x dy with lambda = -2 stays non-degenerate at the corner
    OneForm nd = blow_up(OneForm(Y, C(2) * X), ChartKind::X, Scalar(0));
    CHECK(classify(nd).kind == SingClass::Kind::NonDegenerate);
    CHECK(nd.divisor().has_x);
}

TEST_CASE("classification") {
    auto c1 = classify(OneForm(C(3) * Y, C(2) * X));
    REQUIRE(c1.kind == SingClass::Kind::NonDegenerate);
    REQUIRE(c1.lambda.has_value());
    CHECK(*c1.lambda == Scalar(Rational(-3, 2)));
    auto c2 = classify(euler());
    REQUIRE(c2.kind == SingClass::Kind::SaddleNode);
    CHECK(c2.weak_index == 2);
    CHECK(classify(OneForm(C(-3) * Y, C(2) * X)).kind == SingClass::Kind::NotReduced);
    CHECK(classify(OneForm(C(1), C(0))).kind == SingClass::Kind::Regular);
    for (int k = 1; k <= 4; ++k) CHECK(classify(saddle_node(k, 3)).weak_index == k + 1);
    // irrational eigenvalue ratio: y dx - sqrt(2) x dy type linear part from x dy + (x + 2y)... 
    auto c3 = classify(OneForm(X + Y, Y * C(2) - X));
    CHECK(c3.kind == SingClass::Kind::NonDegenerate);
}

TEST_CASE("tangency index") {
    OneForm w = OneForm((C(2) * X - C(1)) * Y, X * X);
    CHECK(tangency_index(w, line_y0(30)) == 2);
    CHECK(tangency_index(w, line_x0(30)) == 1);
    CHECK(tangency_index(OneForm(C(0), C(1)), line_y0(30)) == 0);
    CHECK_THROWS_AS(tangency_index(w, Branch(PowerSeries::monomial(1, 1), PowerSeries::monomial(1, 1), 30)),
                    NotInvariant);
}

TEST_CASE("weak separatrix jets") {
    Branch e = weak_separatrix_jet(euler(), 12);
    Scalar fact(1);
    for (int n = 1; n < 12; ++n) {
        CHECK(e.y().coeff(n) == fact);
        fact *= Scalar(n);
    }
    CHECK(e.formal());
    Branch z = weak_separatrix_jet(saddle_node(2, 1), 12);
    CHECK(z.y().coeffs().empty());
    // x^2 dy + (x - y + x^2) dx: c1 = 1, c_n = (n-1) c_{n-1} + [n = 2]
    Branch r = weak_separatrix_jet(OneForm(X - Y + X * X, X * X), 10);
    Scalar c(1);
    CHECK(r.y().coeff(1) == c);
    for (int n = 2; n < 10; ++n) {
        c = Scalar(n - 1) * c + Scalar(n == 2 ? 1 : 0);
        CHECK(r.y().coeff(n) == c);
    }
}


TEST_CASE("milnor recursion under one blow-up and the multiplicity bound") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; checked < 30 && trial < 200; ++trial) {
        int nu = 1 + trial % 3;
        bool dic = trial % 4 == 3;
        OneForm w = rgerm::random_germ(rng, nu, dic);
        if (w.multiplicity() != nu || is_dicritical_first_blowup(w) != dic) continue;
        auto mu = milnor(w);
        if (mu.infinite) continue;
        int sum = 0;
        for (const auto& p : special_points(w)) {
            auto m = milnor(blow_up_data(w, p).form);
            REQUIRE_FALSE(m.infinite);
            sum += m.value;
        }
        int expected = nu * nu + (dic ? nu : -nu) - 1 + sum;
        CHECK(mu.value == expected);
        CHECK(nu * (nu + 1) / 2 <= mu.value);
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("classification is invariant under linear changes of coordinates") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<OneForm> germs{euler(), OneForm(C(3) * Y, C(2) * X), saddle_node(2, 1), OneForm(C(-3) * Y, C(2) * X),
                               OneForm(Y + X * X, C(-5) * X + Y * Y), saddle_node(3, -1)};
    for (const auto& w : germs) {
        SingClass ref = classify(w);
        for (int k = 0; k < 5; ++k) {
            int p, q, r, s;
            do {
                p = coef(rng);
                q = coef(rng);
                r = coef(rng);
                s = coef(rng);
            } while (p * s - q * r == 0);
            SingClass c = classify(w.linear_change(p, q, r, s));
            CHECK(c.kind == ref.kind);
            if (ref.kind == SingClass::Kind::SaddleNode) CHECK(c.weak_index == ref.weak_index);
            if (ref.lambda && c.lambda) CHECK(*c.lambda == *ref.lambda);
        }
    }
}
