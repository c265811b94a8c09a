#include "folpol/form.hpp"

#include <algorithm>

#include "folpol/errors.hpp"
#include "folpol/roots.hpp"

namespace folpol {

int OneForm::multiplicity() const {
    if (a_.is_zero()) return b_.order();
    if (b_.is_zero()) return a_.order();
    return std::min(a_.order(), b_.order());
}

OneForm OneForm::deflated() const {
    BivariatePoly g = gcd(a_, b_);
    if (g.is_constant()) return *this;
    return OneForm(exact_divide(a_, g), exact_divide(b_, g), div_);
}

OneForm OneForm::swapped() const {
    return OneForm(b_.swap_xy(), a_.swap_xy(), DivisorRecord{div_.has_y, div_.has_x});
}

OneForm OneForm::translated(const Scalar& x0, const Scalar& y0) const {
    return OneForm(a_.translate(x0, y0), b_.translate(x0, y0), div_);
}

OneForm OneForm::linear_change(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s) const {
    BivariatePoly X = BivariatePoly::x(), Y = BivariatePoly::y();
    BivariatePoly nx = X * p + Y * q, ny = X * r + Y * s;
    BivariatePoly as = a_.substitute(nx, ny), bs = b_.substitute(nx, ny);
    return OneForm(as * p + bs * r, as * q + bs * s);
}

BivariatePoly OneForm::tangent_cone() const {
    int nu = multiplicity();
    return BivariatePoly::x() * a_.homogeneous_part(nu) + BivariatePoly::y() * b_.homogeneous_part(nu);
}

PowerSeries OneForm::contract(const PowerSeries& X, const PowerSeries& Y) const {
    return eval_poly(a_, X, Y) * X.derivative() + eval_poly(b_, X, Y) * Y.derivative();
}

namespace {
std::string form_part(const BivariatePoly& p, const char* diff) {
    std::string s = p.str();
    if (p.terms().size() > 1) s = "(" + s + ")";
    return s + " " + diff;
}
bool single_negative(const BivariatePoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->second.is_rational() && sgn(p.terms().begin()->second.re()) < 0;
}
}  // namespace

std::string OneForm::str() const {
    if (a_.is_zero() && b_.is_zero()) return "0";
    if (a_.is_zero()) return form_part(b_, "dy");
    std::string s = form_part(a_, "dx");
    if (b_.is_zero()) return s;
    if (single_negative(b_)) return s + " - " + form_part(-b_, "dy");
    return s + " + " + form_part(b_, "dy");
}

std::string Direction::str() const {
    if (vertical) return "(0:1)";
    return "(1:" + slope.str() + ")";
}

std::string ChartPoint::str() const {
    if (chart == ChartKind::Y) return "Y:0";
    return "X:" + u.str();
}

std::string SingClass::kind_name() const {
    switch (kind) {
        case Kind::Regular: return "Regular";
        case Kind::NonDegenerate: return "NonDegenerate";
        case Kind::SaddleNode: return "SaddleNode";
        case Kind::NotReduced: return "NotReduced";
    }
    return "?";
}

std::string SingClass::lambda_str() const {
    if (lambda) return lambda->str();
    return "root of " + lambda_poly.str("t");
}

int multiplicity(const OneForm& w) { return w.multiplicity(); }

IntersectionValue milnor(const OneForm& w) { return intersection_number(w.a(), w.b()); }

bool is_dicritical_first_blowup(const OneForm& w) { return w.tangent_cone().is_zero(); }

BlowUpData blow_up_data(const OneForm& w, const ChartPoint& p) {
    BlowUpData out;
    out.nu = w.multiplicity();
    out.dicritical = is_dicritical_first_blowup(w);
    int strip = out.nu_E();
    BivariatePoly X = BivariatePoly::x(), Y = BivariatePoly::y();
    DivisorRecord d;
    d.has_x = true;
    if (p.chart == ChartKind::X) {
        // x = X, y = X (Y + u0): w = [a + (Y + u0) b] dX + X b dY
        BivariatePoly yy = X * (Y + BivariatePoly(p.u));
        BivariatePoly as = w.a().substitute(X, yy), bs = w.b().substitute(X, yy);
        BivariatePoly A = as + (Y + BivariatePoly(p.u)) * bs;
        BivariatePoly B = X * bs;
        out.form = OneForm(A.shift_exponents(-strip, 0), B.shift_exponents(-strip, 0));
        d.has_y = w.divisor().has_y && p.u.is_zero();
    } else {
        // x = X Y, y = X: w = [a Y + b] dX + a X dY
        BivariatePoly as = w.a().substitute(X * Y, X), bs = w.b().substitute(X * Y, X);
        BivariatePoly A = as * Y + bs;
        BivariatePoly B = as * X;
        out.form = OneForm(A.shift_exponents(-strip, 0), B.shift_exponents(-strip, 0));
        d.has_y = w.divisor().has_x;
    }
    out.form = out.form.with_divisor(d);
    return out;
}

OneForm blow_up(const OneForm& w, ChartKind chart, const Scalar& center) {
    return blow_up_data(w, ChartPoint{chart, center}).form;
}

std::vector<ChartPoint> special_points(const OneForm& w) {
    std::vector<ChartPoint> out;
    int nu = w.multiplicity();
    if (!is_dicritical_first_blowup(w)) {
        BivariatePoly T = w.tangent_cone();
        for (const auto& r : roots(T.dehomogenize_x())) out.push_back({ChartKind::X, r.value});
        if (T.coeff(0, nu + 1).is_zero()) out.push_back({ChartKind::Y, Scalar()});
    } else {
        BivariatePoly bn = w.b().homogeneous_part(nu), an = w.a().homogeneous_part(nu);
        UniPoly bu = bn.dehomogenize_x();
        if (!bu.is_zero())
            for (const auto& r : roots(bu)) out.push_back({ChartKind::X, r.value});
        if (an.coeff(0, nu).is_zero()) out.push_back({ChartKind::Y, Scalar()});
    }
    return out;
}

void blow_down_param(const ChartPoint& p, PowerSeries& X, PowerSeries& Y) {
    if (p.chart == ChartKind::X) {
        PowerSeries ny = X * (Y + PowerSeries::constant(p.u));
        Y = ny;
    } else {
        PowerSeries nx = X * Y;
        Y = X;
        X = nx;
    }
}

std::vector<Direction> eigen_directions(const OneForm& w) {
    BivariatePoly T = w.tangent_cone();
    std::vector<Direction> out;
    if (T.is_zero()) return out;
    int k = T.degree();
    for (const auto& r : roots(T.dehomogenize_x())) out.push_back({false, r.value});
    if (T.coeff(0, k).is_zero()) out.push_back({true, Scalar()});
    return out;
}

namespace {

Direction kernel_direction(const Scalar& p1, const Scalar& q1, const Scalar& p2, const Scalar& q2) {
    // kernel of the rank-one matrix with rows (p1, q1), (p2, q2)
    Scalar p = p1, q = q1;
    if (p.is_zero() && q.is_zero()) {
        p = p2;
        q = q2;
    }
    // vector (q, -p)
    if (q.is_zero()) return {true, Scalar()};
    return {false, -p / q};
}

// Positive rational roots of a polynomial with coefficients in Q(sqrt d).
bool has_positive_rational_root(const UniPoly& L) {
    std::vector<Scalar> r0, r1;
    for (const auto& c : L.coeffs()) {
        r0.push_back(Scalar(c.re()));
        r1.push_back(Scalar(c.ir()));
    }
    UniPoly g = gcd(UniPoly(r0), UniPoly(r1));
    if (g.degree() <= 0) return false;
    for (const auto& r : scan_roots(g).roots)
        if (r.value.is_rational() && sgn(r.value.re()) > 0) return true;
    return false;
}

}  // namespace

SingClass classify(const OneForm& w, int trunc) {
    SingClass out;
    if (!w.is_singular()) return out;
    int nu = w.multiplicity();
    if (nu >= 2) {
        out.kind = SingClass::Kind::NotReduced;
        return out;
    }
    Scalar a1 = w.a().coeff(1, 0), b1 = w.a().coeff(0, 1);  // a = a1 x + b1 y + ...
    Scalar a2 = w.b().coeff(1, 0), b2 = w.b().coeff(0, 1);  // b = a2 x + b2 y + ...
    // dual field b d/dx - a d/dy, linear part [[a2, b2], [-a1, -b1]]
    Scalar T = a2 - b1;
    Scalar D = -a2 * b1 + b2 * a1;
    if (!D.is_zero()) {
        UniPoly L(std::vector<Scalar>{D, -(T * T - D * Scalar(2)), D});
        out.lambda_poly = L;
        if (has_positive_rational_root(L)) {
            out.kind = SingClass::Kind::NotReduced;
            return out;
        }
        out.kind = SingClass::Kind::NonDegenerate;
        try {
            auto rs = roots(L);
            std::optional<Scalar> best;
            for (const auto& r : rs) {
                const Scalar& v = r.value;
                bool take;
                if (v.is_rational() || v.radicand() > 0) take = std::abs(v.approx_real()) >= 1.0 - 1e-12 && (!best || std::abs(v.approx_real()) > std::abs(best->approx_real()));
                else take = sgn(v.ir()) > 0;
                if (take) best = v;
            }
            if (!best && !rs.empty()) best = rs.front().value;
            out.lambda = best;
        } catch (const NeedsAlgebraicExtension&) {
        }
        try {
            out.directions = eigen_directions(w);
        } catch (const NeedsAlgebraicExtension&) {
        }
        return out;
    }
    if (T.is_zero()) {
        out.kind = SingClass::Kind::NotReduced;
        return out;
    }
    out.kind = SingClass::Kind::SaddleNode;
    out.weak = kernel_direction(a2, b2, -a1, -b1);
    out.strong = kernel_direction(a2 - T, b2, -a1, -b1 - T);
    int n0 = trunc > 0 ? trunc : initial_truncation(std::max(w.a().degree(), w.b().degree()));
    out.weak_index = with_adaptive_truncation(n0, [&](int n) {
        Branch weak = invariant_curve(w, out.weak, n, true);
        return tangency_index(w, weak);
    });
    return out;
}

Branch invariant_curve(const OneForm& w, const Direction& dir, int trunc, bool formal) {
    if (dir.vertical) {
        Branch b = invariant_curve(w.swapped(), Direction{false, Scalar()}, trunc, formal);
        return Branch(b.y(), b.x(), trunc, formal);
    }
    const Scalar& m = dir.slope;
    Scalar ay = w.a().coeff(0, 1), bx = w.b().coeff(1, 0), by = w.b().coeff(0, 1);
    std::vector<Scalar> c(2);
    c[1] = m;
    PowerSeries t = PowerSeries::monomial(Scalar(1), 1);
    for (int n = 2; n < trunc; ++n) {
        c.resize(n + 1);
        PowerSeries phi(c, n + 1);
        PowerSeries tt = t.truncated(n + 1);
        PowerSeries R = eval_poly(w.a(), tt, phi) + eval_poly(w.b(), tt, phi) * phi.derivative();
        Scalar Rn = R.coeff(n);
        Scalar slope = ay + Scalar(n) * (bx + m * by) + m * by;
        if (slope.is_zero()) {
            if (!Rn.is_zero()) throw NotInvariant("no formal invariant curve in direction " + dir.str());
            continue;
        }
        c[n] = -Rn / slope;
    }
    return Branch(t, PowerSeries(c, trunc), trunc, formal);
}

Branch weak_separatrix_jet(const OneForm& w, int trunc) {
    SingClass c = classify(w, trunc);
    if (c.kind != SingClass::Kind::SaddleNode) throw std::domain_error("weak separatrix requested for a non saddle-node");
    return invariant_curve(w, c.weak, trunc, true);
}

bool is_invariant(const OneForm& w, const Branch& s, int slack) {
    PowerSeries r = w.contract(s.x(), s.y());
    return r.valuation_bound() >= r.prec() - slack;
}

int tangency_index(const OneForm& w, const Branch& s, int slack) {
    if (!s.is_smooth()) throw std::domain_error("tangency index needs a smooth curve");
    if (!is_invariant(w, s, slack)) throw NotInvariant("curve is not invariant to truncation");
    if (s.x().valuation_bound() == 1) return eval_poly(w.b(), s.x(), s.y()).order(slack);
    return eval_poly(w.a(), s.x(), s.y()).order(slack);
}

}  // namespace folpol

namespace folpol {

OneForm pull_back(const OneForm& w, const ChartPoint& p) {
    BlowUpData bd = blow_up_data(w, p);
    int k = bd.nu_E();
    return OneForm(bd.form.a().shift_exponents(k, 0), bd.form.b().shift_exponents(k, 0), bd.form.divisor());
}

OneForm blow_down_form(const OneForm& wp, const ChartPoint& p) {
    // chart X: X = x, Y = y/x - u0, dY = (x dy - y dx)/x^2
    // chart Y: X = y, Y = x/y,      dY = (y dx - x dy)/y^2
    bool cx = p.chart == ChartKind::X;
    int deg = std::max(wp.a().degree(), wp.b().degree());
    int N = deg + 2;
    BivariatePoly a, b;
    for (const auto& [e, c] : wp.a().terms()) {
        // c X^i Y^j dX
        BivariatePoly t = BivariatePoly::monomial(c, 0, 0);
        int i = e.first, j = e.second;
        BivariatePoly base = cx ? BivariatePoly::x() : BivariatePoly::y();
        BivariatePoly num = cx ? BivariatePoly::y() - BivariatePoly::x() * p.u : BivariatePoly::x();
        // X^i Y^j = base^i num^j / base^j, times base^N
        BivariatePoly m = t * pow(base, unsigned(i)) * pow(num, unsigned(j)) * pow(base, unsigned(N - j));
        if (cx) a += m;
        else b += m;
    }
    for (const auto& [e, c] : wp.b().terms()) {
        // c X^i Y^j dY
        int i = e.first, j = e.second;
        BivariatePoly base = cx ? BivariatePoly::x() : BivariatePoly::y();
        BivariatePoly num = cx ? BivariatePoly::y() - BivariatePoly::x() * p.u : BivariatePoly::x();
        BivariatePoly m = BivariatePoly(c) * pow(base, unsigned(i)) * pow(num, unsigned(j)) * pow(base, unsigned(N - j - 2));
        if (cx) {
            a -= m * BivariatePoly::y();
            b += m * BivariatePoly::x();
        } else {
            a += m * BivariatePoly::y();
            b -= m * BivariatePoly::x();
        }
    }
    OneForm out(a, b);
    int k = std::min(a.is_zero() ? 1 << 20 : (cx ? a.order_in_x() : a.order_in_y()),
                     b.is_zero() ? 1 << 20 : (cx ? b.order_in_x() : b.order_in_y()));
    if (k > 0) out = cx ? OneForm(a.shift_exponents(-k, 0), b.shift_exponents(-k, 0))
                        : OneForm(a.shift_exponents(0, -k), b.shift_exponents(0, -k));
    return out.deflated();
}

Branch regular_leaf(const OneForm& w, int trunc) {
    if (w.is_singular()) throw std::domain_error("regular leaf requested at a singular point");
    Scalar b0 = w.b().constant_term();
    if (b0.is_zero()) {
        Branch s = regular_leaf(w.swapped(), trunc);
        return Branch(s.y(), s.x(), trunc);
    }
    std::vector<Scalar> c(1);
    PowerSeries t = PowerSeries::monomial(Scalar(1), 1);
    for (int n = 0; n + 1 < trunc; ++n) {
        c.resize(n + 2);
        PowerSeries phi(c, n + 2);
        PowerSeries tt = t.truncated(n + 2);
        PowerSeries R = eval_poly(w.a(), tt, phi) + eval_poly(w.b(), tt, phi) * phi.derivative();
        c[n + 1] = -R.coeff(n) / (b0 * Scalar(n + 1));
    }
    return Branch(t, PowerSeries(c, trunc), trunc);
}

}  // namespace folpol
