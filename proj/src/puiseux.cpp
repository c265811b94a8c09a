#include "folpol/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "folpol/errors.hpp"
#include "folpol/roots.hpp"

namespace folpol {

int initial_truncation(int degree_estimate) { return 4 * (std::max(degree_estimate, 1) + 4); }

// ---------------------------------------------------------------- BranchEquation

int BranchEquation::precision() const {
    int p = PowerSeries::kExact;
    for (const auto& c : c_) p = std::min(p, c.prec());
    return p;
}

PowerSeries BranchEquation::eval_impl(const PowerSeries& U, const PowerSeries& V, int du, int dv) const {
    // sum_k d^du c_k(U) * d^dv (V^k), derivatives taken formally in (u, v).
    PowerSeries r = PowerSeries::zero(PowerSeries::kExact);
    int e = degree();
    std::vector<PowerSeries> vp{PowerSeries::constant(Scalar(1))};
    for (int k = 1; k <= e; ++k) vp.push_back(vp.back() * V);
    for (int k = dv; k <= e; ++k) {
        PowerSeries ck = c_[k];
        for (int i = 0; i < du; ++i) ck = ck.derivative();
        if (ck.coeffs().empty() && ck.is_exact()) continue;
        Scalar fall(1);
        for (int i = 0; i < dv; ++i) fall *= Scalar(k - i);
        PowerSeries term = ck.compose(U) * vp[k - dv];
        r += term * fall;
    }
    return r;
}

PowerSeries BranchEquation::eval(const PowerSeries& X, const PowerSeries& Y) const {
    return swapped_ ? eval_impl(Y, X, 0, 0) : eval_impl(X, Y, 0, 0);
}

PowerSeries BranchEquation::eval_dx(const PowerSeries& X, const PowerSeries& Y) const {
    return swapped_ ? eval_impl(Y, X, 0, 1) : eval_impl(X, Y, 1, 0);
}

PowerSeries BranchEquation::eval_dy(const PowerSeries& X, const PowerSeries& Y) const {
    return swapped_ ? eval_impl(Y, X, 1, 0) : eval_impl(X, Y, 0, 1);
}

BivariatePoly BranchEquation::poly() const {
    BivariatePoly p;
    for (int k = 0; k <= degree(); ++k) {
        const auto& cs = c_[k].coeffs();
        for (size_t i = 0; i < cs.size(); ++i) {
            if (swapped_) p.add_term(cs[i], k, static_cast<int>(i));
            else p.add_term(cs[i], static_cast<int>(i), k);
        }
    }
    return p;
}

// ---------------------------------------------------------------- Branch

namespace {

struct Normalized {
    bool swapped = false;
    Scalar c;        // u = c s^e
    int e = 0;
    PowerSeries v;   // other coordinate as a series in s
};

Normalized normalize_param(const PowerSeries& x, const PowerSeries& y, int cap) {
    Normalized n;
    int ox = x.valuation_bound(), oy = y.valuation_bound();
    if (ox >= x.prec() && oy >= y.prec()) throw TruncationInsufficient("parametrization vanishes to truncation");
    n.swapped = oy < ox;
    const PowerSeries& u = n.swapped ? y : x;
    const PowerSeries& v = n.swapped ? x : y;
    n.e = u.order();
    n.c = u.coeff(n.e);
    PowerSeries h = u.divided_by_t(n.e) * n.c.inverse() - PowerSeries::constant(Scalar(1));
    if (h.coeffs().empty()) {
        n.v = v;
        if (!h.is_exact()) n.v = n.v.truncated(std::max(h.prec() + 1, 1) + n.e);
        return n;
    }
    int work = std::min({cap, v.prec(), h.prec() + 1});
    PowerSeries s = h.binomial_power(Rational(1, n.e), work).shifted(1).truncated(work);
    PowerSeries T = s.reversion(work);
    n.v = v.compose(T);
    return n;
}

}  // namespace

Branch::Branch(PowerSeries x, PowerSeries y, int cap, bool formal)
    : x_(std::move(x)), y_(std::move(y)), formal_(formal) {
    int ox = x_.valuation_bound(), oy = y_.valuation_bound();
    mult_ = std::min(ox, oy);
    if (mult_ == 0) throw std::domain_error("branch parametrization must pass through the origin");
    Normalized n = normalize_param(x_, y_, cap);
    int e = n.e;
    int P = n.v.prec();
    int M = n.v.is_exact() ? PowerSeries::kExact : (P - 1) / e + 1;
    // Power sums p_k(U) = e * sum_{m} [s^{m e}] v^k (U/c)^m.
    std::vector<PowerSeries> psum(e + 1);
    PowerSeries vk = PowerSeries::constant(Scalar(1));
    Scalar cinv = n.c.inverse();
    for (int k = 1; k <= e; ++k) {
        vk = vk * n.v;
        std::vector<Scalar> coeffs;
        const auto& vc = vk.coeffs();
        Scalar cpow(1);
        for (size_t idx = 0, m = 0; idx < vc.size(); idx += e, ++m) {
            coeffs.push_back(vc[idx] * cpow * Scalar(e));
            cpow *= cinv;
        }
        psum[k] = PowerSeries(coeffs, M);
    }
    // Newton identities: k sigma_k = sum_{i=1..k} (-1)^{i-1} sigma_{k-i} p_i.
    std::vector<PowerSeries> sigma(e + 1);
    sigma[0] = PowerSeries::constant(Scalar(1));
    for (int k = 1; k <= e; ++k) {
        PowerSeries acc = PowerSeries::zero(PowerSeries::kExact);
        for (int i = 1; i <= k; ++i) {
            PowerSeries t = sigma[k - i] * psum[i];
            if (i % 2 == 0) acc -= t;
            else acc += t;
        }
        sigma[k] = acc * Scalar(Rational(1, k));
    }
    std::vector<PowerSeries> coeff(e + 1);
    for (int k = 0; k <= e; ++k) coeff[e - k] = k % 2 ? -sigma[k] : sigma[k];
    eq_ = std::make_shared<BranchEquation>(n.swapped, std::move(coeff));
}

int Branch::truncation() const { return std::min(x_.prec(), y_.prec()); }

PuiseuxSeries Branch::puiseux() const {
    Normalized n = normalize_param(x_, y_, truncation() >= PowerSeries::kExact ? 64 : truncation());
    // u = c s^e; rescale s so the expansion is in powers of u^(1/e) only when c is an e-th power;
    // the stored series is v(s) with s = (u/c)^(1/e).
    return PuiseuxSeries{n.e, n.v};
}

std::vector<int> Branch::characteristic_exponents() const {
    PuiseuxSeries p = puiseux();
    std::vector<int> out{p.ramification};
    int g = p.ramification;
    const auto& c = p.series.coeffs();
    for (size_t n = 0; n < c.size() && g > 1; ++n) {
        if (c[n].is_zero()) continue;
        int nn = static_cast<int>(n);
        if (nn % g != 0) {
            out.push_back(nn);
            g = std::gcd(g, nn);
        }
    }
    if (g > 1) throw TruncationInsufficient("characteristic exponents beyond truncation");
    return out;
}

std::string Branch::str(int terms) const {
    return "(" + x_.str("t", terms) + ", " + y_.str("t", terms) + ")";
}

// ---------------------------------------------------------------- Newton-Puiseux

namespace {

struct Chart {
    Scalar A;            // x = A t^Q
    int Q = 1;
    std::vector<Scalar> P;  // y = P(t) + B t^M w
    Scalar B;
    int M = 0;
};

std::vector<Scalar> poly_sub_power(const std::vector<Scalar>& p, const Scalar& a, int q) {
    // p(a t^q)
    std::vector<Scalar> r(p.empty() ? 0 : (p.size() - 1) * q + 1);
    Scalar ap(1);
    for (size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) r[k * q] = p[k] * ap;
        ap *= a;
    }
    return r;
}

// g(a t^q, t^m (b + w)) / t^l in variables (t, w).
BivariatePoly edge_substitute(const BivariatePoly& g, const Scalar& a, int q, int m, const Scalar& b, int l) {
    BivariatePoly r;
    for (const auto& [mono, c] : g.terms()) {
        int i = mono.first, j = mono.second;
        int texp = q * i + m * j - l;
        Scalar coef = c * pow(a, static_cast<unsigned>(i));
        // (b + w)^j
        Integer binom = 1;
        for (int k = 0; k <= j; ++k) {
            r.add_term(coef * Scalar(Rational(binom)) * pow(b, static_cast<unsigned>(j - k)), texp, k);
            binom = binom * (j - k) / (k + 1);
        }
    }
    return r;
}

// Solves g(t, w) = 0 with w(0) = 0 when dg/dw(0,0) != 0, to precision n.
PowerSeries implicit_solve(const BivariatePoly& g, int n) {
    BivariatePoly gw = g.dy();
    PowerSeries w = PowerSeries::zero(1);
    int p = 1;
    PowerSeries tvar = PowerSeries::monomial(Scalar(1), 1);
    while (p < n) {
        p = std::min(2 * p, n);
        PowerSeries wp(w.coeffs(), p);
        PowerSeries tt = tvar.truncated(p);
        PowerSeries num = eval_poly(g, tt, wp);
        PowerSeries den = eval_poly(gw, tt, wp);
        w = (wp - num * den.inverse(p)).truncated(p);
    }
    return PowerSeries(w.coeffs(), n);
}

void expand(const BivariatePoly& g0, int r, const Chart& ch, int trunc, std::vector<Branch>& out) {
    BivariatePoly g = g0;
    auto emit = [&](const PowerSeries& w, int cap) {
        PowerSeries x = PowerSeries::monomial(ch.A, ch.Q);
        PowerSeries y = PowerSeries(ch.P, PowerSeries::kExact) + w.shifted(ch.M) * ch.B;
        out.emplace_back(x, y, cap);
    };
    if (g.order_in_y() >= 1) {
        // w = 0 is an exact solution
        emit(PowerSeries::zero(PowerSeries::kExact), trunc);
        g = exact_divide(g, BivariatePoly::y());
        --r;
        if (g.order_in_y() >= 1) throw NotSquareFree("repeated branch detected");
    }
    if (r == 0) return;
    if (r == 1) {
        int need = std::max(trunc - ch.M, 2);
        emit(implicit_solve(g, need), trunc);
        return;
    }
    // Lower Newton polygon from (0, r) down to the i-axis.
    std::vector<std::pair<int, int>> pts;
    for (const auto& [mono, c] : g.terms()) pts.push_back(mono);
    int ci = 0, cj = r;
    while (cj > 0) {
        // choose the next vertex minimising di/dj, ties broken by the largest dj
        int bi = -1, bj = -1;
        for (auto [i, j] : pts) {
            if (j >= cj) continue;
            if (bi < 0) {
                bi = i;
                bj = j;
                continue;
            }
            long lhs = static_cast<long>(i - ci) * (cj - bj), rhs = static_cast<long>(bi - ci) * (cj - j);
            if (lhs < rhs || (lhs == rhs && j < bj)) {
                bi = i;
                bj = j;
            }
        }
        int di = bi - ci, dj = cj - bj;
        int gg = std::gcd(di, dj);
        int m = di / gg, q = dj / gg;
        int l = q * ci + m * cj;
        // edge polynomial phi(T) = sum a_ij T^((j - bj)/q)
        std::vector<Scalar> phi(gg + 1);
        for (const auto& [mono, c] : g.terms())
            if (q * mono.first + m * mono.second == l && mono.second >= bj && mono.second <= cj)
                phi[(mono.second - bj) / q] += c;
        int u = 1;
        while ((u * q) % m != 1 % m) ++u;
        if (m == 1) u = 1;
        int v = (u * q - 1) / m;
        for (const auto& root : roots(UniPoly(phi))) {
            if (root.value.is_zero()) continue;
            const Scalar& xi = root.value;
            Scalar xa = pow(xi, static_cast<unsigned>(v)), xb = pow(xi, static_cast<unsigned>(u));
            BivariatePoly g1 = edge_substitute(g, xa, q, m, xb, l);
            Chart nc;
            nc.A = ch.A * pow(xa, static_cast<unsigned>(ch.Q));
            nc.Q = ch.Q * q;
            nc.P = poly_sub_power(ch.P, xa, q);
            Scalar bx = ch.B * pow(xa, static_cast<unsigned>(ch.M));
            int pos = ch.M * q + m;
            if (static_cast<int>(nc.P.size()) <= pos) nc.P.resize(pos + 1);
            nc.P[pos] += bx * xb;
            nc.B = bx;
            nc.M = pos;
            expand(g1, root.multiplicity, nc, trunc, out);
        }
        ci = bi;
        cj = bj;
    }
}

}  // namespace

std::vector<Branch> newton_puiseux(const BivariatePoly& f0, int trunc) {
    if (f0.is_zero()) throw std::domain_error("newton_puiseux of the zero polynomial");
    if (!f0.constant_term().is_zero()) return {};
    BivariatePoly g = gcd(f0, gcd(f0.dx(), f0.dy()));
    if (!g.is_constant() && g.constant_term().is_zero()) throw NotSquareFree("f has a repeated factor through the origin");
    std::vector<Branch> out;
    BivariatePoly f = f0;
    if (f.order_in_x() >= 1) {
        out.emplace_back(PowerSeries::zero(PowerSeries::kExact), PowerSeries::monomial(Scalar(1), 1), trunc);
        f = exact_divide(f, BivariatePoly::x());
    }
    if (f.order_in_x() >= 1) throw NotSquareFree("x divides f twice");
    if (!f.constant_term().is_zero()) return out;
    int r = f.eval_x(Scalar(0)).order();
    Chart ch;
    ch.A = Scalar(1);
    ch.Q = 1;
    ch.B = Scalar(1);
    ch.M = 0;
    expand(f, r, ch, trunc, out);
    return out;
}

// ---------------------------------------------------------------- intersections

int order_along(const BivariatePoly& g, const Branch& b, int slack) { return eval_poly(g, b.x(), b.y()).order(slack); }

int branch_intersection(const Branch& b1, const Branch& b2, int slack) {
    int a = b2.equation().eval(b1.x(), b1.y()).order(slack);
    int c;
    try {
        c = b1.equation().eval(b2.x(), b2.y()).order(slack);
    } catch (const TruncationInsufficient&) {
        return a;
    }
    if (a != c) throw std::logic_error("asymmetric branch intersection " + std::to_string(a) + " vs " + std::to_string(c));
    return a;
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    size_t n = m.size();
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Scalar inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar f = m[r][col] * inv;
            for (size_t k = col; k < n; ++k)
                if (!m[col][k].is_zero()) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace {

BivariatePoly shear(const BivariatePoly& f, const Scalar& c) {
    return f.substitute(BivariatePoly::x() + BivariatePoly::y() * c, BivariatePoly::y());
}

Scalar sylvester_det(const UniPoly& a, int da, const UniPoly& b, int db) {
    int n = da + db;
    if (n == 0) return Scalar(1);
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[r][r + da - k] = a.coeff(k);
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[db + r][r + db - k] = b.coeff(k);
    return determinant(std::move(m));
}

// Interpolating polynomial through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Scalar>& xs, std::vector<Scalar> ys) {
    size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly r(ys[n - 1]);
    for (size_t k = n - 1; k-- > 0;) {
        r *= UniPoly(std::vector<Scalar>{-xs[k], Scalar(1)});
        r += UniPoly(ys[k]);
    }
    return r;
}

const std::vector<Scalar>& shear_values() {
    static const std::vector<Scalar> v{Scalar(Rational(3, 7)), Scalar(Rational(-5, 11)), Scalar(Rational(13, 4)),
                                       Scalar(Rational(-17, 9)), Scalar(Rational(29, 31)), Scalar(Rational(-2, 23))};
    return v;
}

}  // namespace

UniPoly sheared_resultant(const BivariatePoly& f, const BivariatePoly& g, const Scalar& c) {
    BivariatePoly fs = shear(f, c), gs = shear(g, c);
    int da = fs.degree_y(), db = gs.degree_y();
    if (da <= 0 && db <= 0) return UniPoly(Scalar(1));
    int bound = std::max(fs.degree(), 0) * std::max(gs.degree(), 0) + 1;
    std::vector<Scalar> xs, ys;
    for (int k = 0; k < bound; ++k) {
        Scalar x0(k - bound / 2);
        xs.push_back(x0);
        ys.push_back(sylvester_det(fs.eval_x(x0), da, gs.eval_x(x0), db));
    }
    return interpolate(xs, ys);
}

namespace {

// Intersection number of polynomials without common factor through the origin.
int resultant_order(const BivariatePoly& f, const BivariatePoly& g) {
    std::vector<int> vals;
    for (const auto& c : shear_values()) {
        BivariatePoly ft = f.homogeneous_part(f.degree()), gt = g.homogeneous_part(g.degree());
        if (ft.eval(c, Scalar(1)).is_zero() || gt.eval(c, Scalar(1)).is_zero()) continue;
        UniPoly r = sheared_resultant(f, g, c);
        if (r.is_zero()) continue;
        vals.push_back(r.order());
        if (vals.size() == 2 && vals[0] == vals[1]) break;
        if (vals.size() == 3) break;
    }
    if (vals.empty()) throw std::logic_error("no admissible shear");
    return *std::min_element(vals.begin(), vals.end());
}

}  // namespace

IntersectionValue intersection_number(const BivariatePoly& f0, const BivariatePoly& g0) {
    if (f0.is_zero() || g0.is_zero()) return {true, 0};
    if (!f0.constant_term().is_zero() || !g0.constant_term().is_zero()) return {false, 0};
    BivariatePoly f = f0, g = g0;
    BivariatePoly h = gcd(f, g);
    if (!h.is_constant()) {
        if (h.constant_term().is_zero()) return {true, 0};
        f = exact_divide(f, h);
        g = exact_divide(g, h);
    }
    // Jets above the answer do not matter: truncate at T and accept when the result is <= T.
    int full = std::max(f.degree(), g.degree());
    for (int T = std::max(f.order() + g.order() + 2, 6);; T *= 2) {
        if (T >= full) return {false, resultant_order(f, g)};
        BivariatePoly ft = f.truncated(T + 1), gt = g.truncated(T + 1);
        BivariatePoly ht = gcd(ft, gt);
        if (!ht.is_constant() && ht.constant_term().is_zero()) continue;
        if (!ht.is_constant()) {
            ft = exact_divide(ft, ht);
            gt = exact_divide(gt, ht);
        }
        int v = resultant_order(ft, gt);
        if (v <= T) return {false, v};
    }
}

IntersectionValue intersection_number_branches(const BivariatePoly& f0, const BivariatePoly& g) {
    if (f0.is_zero() || g.is_zero()) return {true, 0};
    if (!f0.constant_term().is_zero() || !g.constant_term().is_zero()) return {false, 0};
    BivariatePoly f = f0;
    BivariatePoly h = gcd(f, g);
    if (!h.is_constant() && h.constant_term().is_zero()) return {true, 0};
    // f = rad * sq with rad square-free; repeated factors contribute again through sq
    BivariatePoly sq = gcd(f, gcd(f.dx(), f.dy()));
    if (!sq.is_constant() && sq.constant_term().is_zero())
        return {false, intersection_number_branches(exact_divide(f, sq), g).value +
                           intersection_number_branches(sq, g).value};
    int deg = std::max(f.degree(), g.degree());
    return with_adaptive_truncation(initial_truncation(deg * deg), [&](int n) {
        int total = 0;
        for (const auto& b : newton_puiseux(f, n)) total += order_along(g, b);
        return IntersectionValue{false, total};
    });
}

}  // namespace folpol
