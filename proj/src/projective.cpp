#include "folpol/projective.hpp"

#include <random>
#include <sstream>

#include "folpol/errors.hpp"
#include "folpol/roots.hpp"

namespace folpol {

namespace {

// Index of the variable set to one, then the two local coordinates.
struct ChartVars {
    int h, f1, f2;
};

ChartVars vars_of(ProjChart c) {
    switch (c) {
        case ProjChart::Z: return {2, 0, 1};
        case ProjChart::X: return {0, 1, 2};
        default: return {1, 0, 2};
    }
}

const char* kVarNames[3] = {"X", "Y", "Z"};

Scalar random_rational(std::mt19937_64& rng, long range = 29) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 7);
    return Scalar(Rational(num(rng), den(rng)));
}

}  // namespace

std::string chart_name(ProjChart c) {
    switch (c) {
        case ProjChart::Z: return "z";
        case ProjChart::X: return "x";
        default: return "y";
    }
}

// ---- HomogPoly

HomogPoly HomogPoly::homogenize(const BivariatePoly& f, int degree, ProjChart c) {
    if (f.degree() > degree) throw std::domain_error("homogenization degree too small");
    ChartVars cv = vars_of(c);
    HomogPoly h(degree);
    for (const auto& [m, s] : f.terms()) {
        Exps e{};
        e[cv.f1] = m.first;
        e[cv.f2] = m.second;
        e[cv.h] = degree - m.first - m.second;
        h.add_term(s, e);
    }
    return h;
}

HomogPoly HomogPoly::var(int i) {
    HomogPoly h(1);
    Exps e{};
    e[i] = 1;
    h.add_term(Scalar(1), e);
    return h;
}

void HomogPoly::add_term(const Scalar& c, const Exps& e) {
    if (c.is_zero()) return;
    if (e[0] + e[1] + e[2] != deg_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw std::domain_error("monomial of wrong degree");
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (is_zero()) deg_ = o.deg_;
    if (!o.is_zero() && o.deg_ != deg_) throw std::domain_error("adding forms of different degrees");
    for (const auto& [e, c] : o.t_) add_term(c, e);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return *this += -o; }

HomogPoly HomogPoly::operator-() const {
    HomogPoly r(deg_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

HomogPoly operator*(const HomogPoly& p, const HomogPoly& q) {
    HomogPoly r(p.deg_ + q.deg_);
    for (const auto& [e1, c1] : p.t_)
        for (const auto& [e2, c2] : q.t_) r.add_term(c1 * c2, {e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]});
    return r;
}

HomogPoly operator*(HomogPoly p, const Scalar& s) {
    if (s.is_zero()) return HomogPoly(p.deg_);
    for (auto& [e, c] : p.t_) c *= s;
    return p;
}

bool HomogPoly::divisible_by_var(int i) const {
    for (const auto& [e, c] : t_)
        if (e[i] == 0) return false;
    return true;
}

HomogPoly HomogPoly::divide_by_var(int i) const {
    if (!divisible_by_var(i)) throw std::domain_error("not divisible");
    HomogPoly r(deg_ - 1);
    for (const auto& [e, c] : t_) {
        Exps f = e;
        --f[i];
        r.t_.emplace(f, c);
    }
    return r;
}

BivariatePoly HomogPoly::chart(ProjChart c) const {
    ChartVars cv = vars_of(c);
    BivariatePoly out;
    for (const auto& [e, s] : t_) out.add_term(s, e[cv.f1], e[cv.f2]);
    return out;
}

HomogPoly HomogPoly::linear_change(const Matrix3& m) const {
    std::array<std::vector<HomogPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        HomogPoly lin(1);
        for (int k = 0; k < 3; ++k) lin += var(k) * m[i][k];
        powers[i].push_back(HomogPoly::homogenize(BivariatePoly(1), 0));
        for (int p = 1; p <= deg_; ++p) powers[i].push_back(powers[i].back() * lin);
    }
    HomogPoly r(deg_);
    for (const auto& [e, c] : t_) r += powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * c;
    return r;
}

Scalar HomogPoly::eval(const Scalar& x, const Scalar& y, const Scalar& z) const {
    Scalar s;
    for (const auto& [e, c] : t_) s += c * pow(x, e[0]) * pow(y, e[1]) * pow(z, e[2]);
    return s;
}

std::string HomogPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool mono = false;
        if (cs != "1") os << cs, mono = true;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            os << (mono ? "*" : "") << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
            mono = true;
        }
        if (!mono) os << "1";
    }
    return os.str();
}

// ---- ProjectiveFoliation

ProjectiveFoliation ProjectiveFoliation::from_affine(const OneForm& w, ProjChart c) {
    if (w.is_zero()) throw InvalidInput("zero form");
    if (!gcd(w.a(), w.b()).is_constant()) throw InvalidInput("coefficients share a factor; singular set not finite");
    ChartVars cv = vars_of(c);
    int m = std::max(w.a().degree(), w.b().degree());
    HomogPoly A = HomogPoly::homogenize(w.a(), m, c), B = HomogPoly::homogenize(w.b(), m, c);
    HomogPoly H = HomogPoly::var(cv.h);
    ProjectiveFoliation F;
    F.c_[cv.f1] = H * A;
    F.c_[cv.f2] = H * B;
    F.c_[cv.h] = -(HomogPoly::var(cv.f1) * A + HomogPoly::var(cv.f2) * B);
    if (F.c_[cv.h].is_zero()) F.c_[cv.h] = HomogPoly(m + 1);
    bool div = true;
    for (const auto& p : F.c_) div = div && p.divisible_by_var(cv.h);
    if (div)
        for (auto& p : F.c_) p = p.divide_by_var(cv.h);
    return F;
}

OneForm ProjectiveFoliation::chart_form(ProjChart c) const {
    ChartVars cv = vars_of(c);
    return OneForm(c_[cv.f1].chart(c), c_[cv.f2].chart(c));
}

ProjectiveFoliation ProjectiveFoliation::transformed(const Matrix3& m) const {
    std::array<HomogPoly, 3> sub;
    for (int i = 0; i < 3; ++i) sub[i] = c_[i].linear_change(m);
    ProjectiveFoliation F;
    for (int k = 0; k < 3; ++k) {
        HomogPoly s(c_[0].degree());
        for (int i = 0; i < 3; ++i) s += sub[i] * m[i][k];
        F.c_[k] = s;
    }
    return F;
}

std::string ProjectiveFoliation::str() const {
    return "(" + c_[0].str() + ") dX + (" + c_[1].str() + ") dY + (" + c_[2].str() + ") dZ";
}

InvariantCurve InvariantCurve::from_affine(const BivariatePoly& f, ProjChart c) {
    if (f.degree() < 1) throw InvalidInput("curve must have positive degree");
    return {HomogPoly::homogenize(f, f.degree(), c)};
}

bool is_invariant(const ProjectiveFoliation& F, const InvariantCurve& S) {
    for (ProjChart c : {ProjChart::Z, ProjChart::X, ProjChart::Y}) {
        OneForm w = F.chart_form(c);
        BivariatePoly s = S.S.chart(c);
        if (s.is_constant()) continue;
        if (!divides(s, w.a() * s.dy() - w.b() * s.dx())) return false;
    }
    return true;
}

std::array<Scalar, 3> SingularPoint::homogeneous() const {
    switch (chart) {
        case ProjChart::Z: return {u, v, Scalar(1)};
        case ProjChart::X: return {Scalar(1), u, v};
        default: return {u, Scalar(1), v};
    }
}

std::string SingularPoint::str() const {
    auto h = homogeneous();
    return "[" + h[0].str() + ":" + h[1].str() + ":" + h[2].str() + "]";
}

// ---- degree

DegreeReport degree_of(const ProjectiveFoliation& F, std::uint64_t seed) {
    DegreeReport r;
    r.degree = F.degree();
    std::mt19937_64 rng(seed);
    OneForm w = F.chart_form(ProjChart::Z);
    int good = 0;
    for (int draw = 0; draw < 12 && good < 3; ++draw) {
        Scalar x0 = random_rational(rng), y0 = random_rational(rng), u = random_rational(rng), v = random_rational(rng);
        if (u.is_zero() && v.is_zero()) continue;
        ++r.lines_sampled;
        BivariatePoly X = BivariatePoly(x0) + BivariatePoly::x() * u, Y = BivariatePoly(y0) + BivariatePoly::x() * v;
        BivariatePoly t = w.a().substitute(X, Y) * u + w.b().substitute(X, Y) * v;
        if (t.is_zero()) continue;  // invariant line
        ++good;
        r.tangency_degree = std::max(r.tangency_degree, t.degree());
    }
    if (good == 0) throw LineNotGeneric("every sampled line is invariant");
    if (r.tangency_degree != r.degree)
        throw std::logic_error("tangency count " + std::to_string(r.tangency_degree) + " disagrees with degree " +
                               std::to_string(r.degree));
    return r;
}

// ---- singular locus

namespace {

SingularPoint make_point(const ProjectiveFoliation& F, ProjChart c, const Scalar& u, const Scalar& v) {
    SingularPoint p;
    p.chart = c;
    p.u = u;
    p.v = v;
    p.germ = F.chart_form(c).translated(u, v);
    IntersectionValue m = milnor(p.germ);
    if (m.infinite) throw InvalidInput("non-isolated singular point " + p.str());
    p.milnor = m.value;
    return p;
}

void scan_fibre(const ProjectiveFoliation& F, ProjChart c, const Scalar& x0, const UniPoly& g, SingularLocus& out) {
    if (g.degree() < 1) return;
    RootScan rs = scan_roots(g);
    for (const auto& r : rs.roots) out.points.push_back(make_point(F, c, x0, r.value));
    if (rs.leftover.degree() >= 1)
        out.clusters.push_back({c, "first coordinate " + x0.str() + ", second coordinate root of " + rs.leftover.str("v"),
                                rs.leftover.degree()});
}

}  // namespace

SingularLocus singular_locus(const ProjectiveFoliation& F) {
    SingularLocus out;
    // affine part
    OneForm w = F.chart_form(ProjChart::Z);
    UniPoly res = sheared_resultant(w.a(), w.b(), Scalar());
    if (res.is_zero()) throw InvalidInput("coefficients share a factor");
    RootScan rs = scan_roots(res);
    for (const auto& r : rs.roots) {
        UniPoly g = gcd(w.a().eval_x(r.value), w.b().eval_x(r.value));
        scan_fibre(F, ProjChart::Z, r.value, g, out);
    }
    if (rs.leftover.degree() >= 1)
        out.clusters.push_back({ProjChart::Z, "first coordinate root of " + rs.leftover.str("u"), rs.leftover.degree()});
    // line at infinity minus [0:1:0], chart X at z = 0
    OneForm wx = F.chart_form(ProjChart::X);
    UniPoly g = gcd(wx.a().eval_y(Scalar()), wx.b().eval_y(Scalar()));
    if (g.degree() >= 1) {
        RootScan ri = scan_roots(g);
        for (const auto& r : ri.roots) out.points.push_back(make_point(F, ProjChart::X, r.value, Scalar()));
        if (ri.leftover.degree() >= 1)
            out.clusters.push_back({ProjChart::X, "z = 0, y root of " + ri.leftover.str("y"), ri.leftover.degree()});
    }
    // [0:1:0]
    OneForm wy = F.chart_form(ProjChart::Y);
    if (wy.is_singular()) out.points.push_back(make_point(F, ProjChart::Y, Scalar(), Scalar()));
    return out;
}

// ---- Bezout

BezoutReport bezout_check(const ProjectiveFoliation& F, std::uint64_t seed) {
    BezoutReport r;
    r.degree = F.degree();
    r.expected = r.degree * r.degree + r.degree + 1;
    r.locus = singular_locus(F);
    for (const auto& p : r.locus.points) r.milnor_sum += p.milnor;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-5, 5);
    bool counted = false;
    for (int attempt = 0; attempt < 20 && !counted; ++attempt) {
        Matrix3 m;
        for (auto& row : m)
            for (auto& e : row) e = Scalar(entry(rng));
        Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det.is_zero()) continue;
        ProjectiveFoliation G = F.transformed(m);
        // no singular point on the new line at infinity
        UniPoly g;
        for (int k = 0; k < 3; ++k) g = gcd(g, G.coefficient(k).chart(ProjChart::X).eval_y(Scalar()));
        if (g.degree() >= 1) continue;
        bool top = true;
        for (int k = 0; k < 3; ++k) top = top && G.coefficient(k).eval(Scalar(), Scalar(1), Scalar()).is_zero();
        if (top) continue;
        OneForm w = G.chart_form(ProjChart::Z);
        Scalar c = random_rational(rng, 9);
        auto lead_constant = [&](const BivariatePoly& f) {
            BivariatePoly s = f.substitute(BivariatePoly::x() + BivariatePoly::y() * c, BivariatePoly::y());
            return !s.is_zero() && s.as_poly_in_y().back().degree() == 0;
        };
        if (!lead_constant(w.a()) || !lead_constant(w.b())) continue;
        r.generic_count = sheared_resultant(w.a(), w.b(), c).degree();
        counted = true;
    }
    if (!counted) throw std::runtime_error("no generic projective change found");
    r.holds = r.generic_count == r.expected && (!r.locus.complete() || r.milnor_sum == r.expected);
    return r;
}

// ---- invariant curve terms

LocalCurveTerm local_curve_term(const OneForm& germ, const BivariatePoly& s, const PolarOptions& opt) {
    LocalCurveTerm term;
    term.s_local = s;
    ReductionTree t = reduce(germ);
    CurveSelection sel;
    sel.curves.push_back(s);
    with_instance(t, sel, [&](const LocalInstance& in) {
        term.branches = static_cast<int>(in.c.size());
        term.var = 0;
        for (int k : in.c) term.var += var_branch(germ, in.f, k, opt);
        std::vector<int> rest;
        for (int z : in.f.zeros())
            if (std::find(in.c.begin(), in.c.end(), z) == in.c.end()) rest.push_back(z);
        term.to_rest = cross_intersection(in.f, in.c, rest);
        term.to_poles = -cross_intersection(in.f, in.c, in.f.poles());
        return 0;
    });
    term.gsv = term.var + term.to_rest - term.to_poles;
    term.gsv_direct = gsv_direct(germ, t, sel, opt);
    term.generalized_curve = is_generalized_curve_tree(t);
    return term;
}


namespace {

void require_complete(const SingularLocus& L) {
    if (L.complete()) return;
    std::string msg = "singular points outside the representable field:";
    for (const auto& c : L.clusters) msg += " [chart " + chart_name(c.chart) + ": " + c.description + "]";
    throw NeedsAlgebraicExtension(msg);
}

std::vector<LocalCurveTerm> curve_terms(const ProjectiveFoliation& F, const InvariantCurve& S, const PolarOptions& opt) {
    if (!is_invariant(F, S)) throw NotInvariant("the curve is not invariant by the foliation");
    SingularLocus L = singular_locus(F);
    require_complete(L);
    std::vector<LocalCurveTerm> out;
    for (const auto& p : L.points) {
        BivariatePoly s = S.S.chart(p.chart).translate(p.u, p.v);
        if (!s.constant_term().is_zero()) continue;
        LocalCurveTerm term = local_curve_term(p.germ, s, opt);
        term.point = p;
        out.push_back(term);
    }
    return out;
}

}  // namespace

BrunellaReport brunella_identity(const ProjectiveFoliation& F, const InvariantCurve& S, const PolarOptions& opt) {
    BrunellaReport r;
    r.degree = F.degree();
    r.curve_degree = S.degree();
    r.lhs = (r.degree + 2 - r.curve_degree) * r.curve_degree;
    r.terms = curve_terms(F, S, opt);
    for (const auto& t : r.terms) r.gsv_sum += t.gsv;
    r.holds = r.lhs == r.gsv_sum;
    return r;
}

PoincareReport poincare_bound(const ProjectiveFoliation& F, const InvariantCurve& S, const PolarOptions& opt) {
    PoincareReport r;
    r.degree = F.degree();
    r.curve_degree = S.degree();
    r.terms = curve_terms(F, S, opt);
    r.generalized_curves = true;
    for (const auto& t : r.terms) {
        r.correction_sum += t.correction();
        r.generalized_curves = r.generalized_curves && t.generalized_curve;
    }
    r.rhs = Rational(r.degree + 2) + Rational(r.correction_sum, r.curve_degree);
    r.rhs.canonicalize();
    r.bound_holds = Rational(r.curve_degree) <= r.rhs;
    r.equality = Rational(r.curve_degree) == r.rhs;
    return r;
}

}  // namespace folpol
