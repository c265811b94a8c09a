#include "folpol/poly.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace folpol {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Scalar c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Scalar& c, int k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar();
    return c_[k];
}

int UniPoly::order() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

bool UniPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar UniPoly::eval(const Scalar& t) const {
    Scalar r;
    for (size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> r;
    for (size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (size_t k = c_.size(); k-- > 0;) r = r * inner + UniPoly(c_[k]);
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    r *= lead().inverse();
    return r;
}

UniPoly UniPoly::conj() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    BivariatePoly b;
    for (size_t k = 0; k < c_.size(); ++k) b.add_term(c_[k], static_cast<int>(k), 0);
    std::string s = b.str();
    if (var != "x") {
        std::string out;
        for (char ch : s) {
            if (ch == 'x') out += var;
            else out += ch;
        }
        return out;
    }
    return s;
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        q = UniPoly();
        r = a;
        return;
    }
    std::vector<Scalar> quo(da - db + 1);
    Scalar inv = b.lead().inverse();
    for (int k = da; k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Scalar c = rem[k] * inv;
        quo[k - db] = c;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b.coeffs()[i];
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact univariate division");
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r(Scalar(1)), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

// ---------------------------------------------------------------- BivariatePoly

BivariatePoly::BivariatePoly(Scalar c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
}

BivariatePoly BivariatePoly::monomial(const Scalar& c, int i, int j) {
    BivariatePoly p;
    p.add_term(c, i, j);
    return p;
}

BivariatePoly BivariatePoly::from_terms(const Terms& t) {
    BivariatePoly p;
    for (const auto& [m, c] : t) p.add_term(c, m.first, m.second);
    return p;
}

bool BivariatePoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0}); }

Scalar BivariatePoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Scalar() : it->second;
}

int BivariatePoly::order() const {
    if (t_.empty()) return -1;
    int o = INT_MAX;
    for (const auto& [m, c] : t_) o = std::min(o, m.first + m.second);
    return o;
}

int BivariatePoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
    return d;
}

int BivariatePoly::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first);
    return d;
}

int BivariatePoly::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.second);
    return d;
}

int BivariatePoly::order_in_x() const {
    if (t_.empty()) return -1;
    int o = INT_MAX;
    for (const auto& [m, c] : t_) o = std::min(o, m.first);
    return o;
}

int BivariatePoly::order_in_y() const {
    if (t_.empty()) return -1;
    int o = INT_MAX;
    for (const auto& [m, c] : t_) o = std::min(o, m.second);
    return o;
}

bool BivariatePoly::is_rational() const {
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

long BivariatePoly::radicand() const {
    for (const auto& [m, c] : t_)
        if (!c.is_rational()) return c.radicand();
    return 0;
}

void BivariatePoly::add_term(const Scalar& c, int i, int j) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.t_) add_term(c, m.first, m.second);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.t_) add_term(-c, m.first, m.second);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    BivariatePoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(c1 * c2, m1.first + m2.first, m1.second + m2.second);
    t_ = std::move(r.t_);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

BivariatePoly BivariatePoly::dx() const {
    BivariatePoly r;
    for (const auto& [m, c] : t_)
        if (m.first > 0) r.add_term(c * Scalar(m.first), m.first - 1, m.second);
    return r;
}

BivariatePoly BivariatePoly::dy() const {
    BivariatePoly r;
    for (const auto& [m, c] : t_)
        if (m.second > 0) r.add_term(c * Scalar(m.second), m.first, m.second - 1);
    return r;
}

BivariatePoly BivariatePoly::homogeneous_part(int k) const {
    BivariatePoly r;
    for (const auto& [m, c] : t_)
        if (m.first + m.second == k) r.t_.emplace(m, c);
    return r;
}

BivariatePoly BivariatePoly::truncated(int deg) const {
    BivariatePoly r;
    for (const auto& [m, c] : t_)
        if (m.first + m.second < deg) r.t_.emplace(m, c);
    return r;
}

BivariatePoly BivariatePoly::swap_xy() const {
    BivariatePoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.second, m.first}, c);
    return r;
}

BivariatePoly BivariatePoly::shift_exponents(int di, int dj) const {
    BivariatePoly r;
    for (const auto& [m, c] : t_) {
        if (m.first + di < 0 || m.second + dj < 0) throw std::domain_error("negative exponent in shift");
        r.t_.emplace(Monomial{m.first + di, m.second + dj}, c);
    }
    return r;
}

BivariatePoly BivariatePoly::conj() const {
    BivariatePoly r = *this;
    for (auto& [m, c] : r.t_) c = c.conj();
    return r;
}

Scalar BivariatePoly::eval(const Scalar& x, const Scalar& y) const {
    Scalar r;
    for (const auto& [m, c] : t_) r += c * pow(x, m.first) * pow(y, m.second);
    return r;
}

UniPoly BivariatePoly::eval_x(const Scalar& x0) const {
    std::vector<Scalar> v(std::max(0, degree_y() + 1));
    for (const auto& [m, c] : t_) v[m.second] += c * pow(x0, m.first);
    return UniPoly(std::move(v));
}

UniPoly BivariatePoly::eval_y(const Scalar& y0) const {
    std::vector<Scalar> v(std::max(0, degree_x() + 1));
    for (const auto& [m, c] : t_) v[m.first] += c * pow(y0, m.second);
    return UniPoly(std::move(v));
}

BivariatePoly BivariatePoly::substitute(const BivariatePoly& X, const BivariatePoly& Y) const {
    std::vector<BivariatePoly> xp{BivariatePoly(1)}, yp{BivariatePoly(1)};
    BivariatePoly r;
    for (const auto& [m, c] : t_) {
        while (static_cast<int>(xp.size()) <= m.first) xp.push_back(xp.back() * X);
        while (static_cast<int>(yp.size()) <= m.second) yp.push_back(yp.back() * Y);
        r += xp[m.first] * yp[m.second] * c;
    }
    return r;
}

namespace {
// Binomial-expanded (t + s)^k coefficients s^(k-i) C(k,i) for i = 0..k.
std::vector<Scalar> shifted_powers(const Scalar& s, int k) {
    std::vector<Scalar> out(k + 1);
    Integer binom = 1;
    for (int i = 0; i <= k; ++i) {
        out[i] = Scalar(Rational(binom)) * pow(s, static_cast<unsigned>(k - i));
        binom = binom * (k - i) / (i + 1);
    }
    return out;
}
}  // namespace

BivariatePoly BivariatePoly::translate(const Scalar& x0, const Scalar& y0) const {
    if (x0.is_zero() && y0.is_zero()) return *this;
    BivariatePoly r;
    for (const auto& [m, c] : t_) {
        auto bx = shifted_powers(x0, m.first);
        auto by = shifted_powers(y0, m.second);
        for (int i = 0; i <= m.first; ++i) {
            if (bx[i].is_zero()) continue;
            Scalar ci = c * bx[i];
            for (int j = 0; j <= m.second; ++j)
                if (!by[j].is_zero()) r.add_term(ci * by[j], i, j);
        }
    }
    return r;
}

UniPoly BivariatePoly::dehomogenize_x() const {
    std::vector<Scalar> v(std::max(0, degree_y() + 1));
    for (const auto& [m, c] : t_) v[m.second] += c;
    return UniPoly(std::move(v));
}

UniPoly BivariatePoly::dehomogenize_y() const {
    std::vector<Scalar> v(std::max(0, degree_x() + 1));
    for (const auto& [m, c] : t_) v[m.first] += c;
    return UniPoly(std::move(v));
}

std::vector<UniPoly> BivariatePoly::as_poly_in_y() const {
    std::vector<std::vector<Scalar>> raw(std::max(0, degree_y() + 1));
    for (const auto& [m, c] : t_) {
        auto& v = raw[m.second];
        if (static_cast<int>(v.size()) <= m.first) v.resize(m.first + 1);
        v[m.first] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

BivariatePoly BivariatePoly::from_poly_in_y(const std::vector<UniPoly>& c) {
    BivariatePoly r;
    for (size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].degree(); ++i) r.add_term(c[j].coeff(i), i, static_cast<int>(j));
    return r;
}

namespace {
std::string monomial_str(int i, int j) {
    std::string s;
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    return s;
}
}  // namespace

// Terms by ascending total degree, then descending power of x.
std::string BivariatePoly::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, Scalar>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
        int dp = p.first.first + p.first.second, dq = q.first.first + q.first.second;
        if (dp != dq) return dp < dq;
        return p.first.first > q.first.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : v) {
        std::string mono = monomial_str(m.first, m.second);
        bool neg = c.is_rational() && sgn(c.re()) < 0;
        Scalar mag = neg ? -c : c;
        std::string cs;
        if (!mag.is_rational()) cs = "(" + mag.str() + ")";
        else cs = mag.str();
        std::string term;
        if (mono.empty()) term = cs;
        else if (mag.is_one()) term = mono;
        else term = cs + "*" + mono;
        if (first) s += neg ? "-" + term : term;
        else s += neg ? " - " + term : " + " + term;
        first = false;
    }
    return s;
}

BivariatePoly pow(const BivariatePoly& p, unsigned e) {
    BivariatePoly r(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

BivariatePoly exact_divide(const BivariatePoly& f, const BivariatePoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    BivariatePoly rem = f, quo;
    auto lt_g = *g.terms().rbegin();
    Scalar inv = lt_g.second.inverse();
    while (!rem.is_zero()) {
        auto lt = *rem.terms().rbegin();
        int di = lt.first.first - lt_g.first.first;
        int dj = lt.first.second - lt_g.first.second;
        if (di < 0 || dj < 0) throw std::domain_error("inexact bivariate division");
        BivariatePoly t = BivariatePoly::monomial(lt.second * inv, di, dj);
        quo += t;
        rem -= t * g;
    }
    return quo;
}

bool divides(const BivariatePoly& g, const BivariatePoly& f) {
    try {
        exact_divide(f, g);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

namespace {
using YPoly = std::vector<UniPoly>;

void ytrim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly ycontent(const YPoly& p) {
    UniPoly g;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

YPoly yprimitive(const YPoly& p) {
    UniPoly c = ycontent(p);
    YPoly r;
    for (const auto& q : p) r.push_back(q / c);
    return r;
}

// Pseudo-remainder of a by b with respect to y.
YPoly yprem(YPoly a, const YPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const UniPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        UniPoly la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        ytrim(a);
    }
    return a;
}
}  // namespace

BivariatePoly gcd(const BivariatePoly& f, const BivariatePoly& g) {
    if (f.is_zero()) return g.is_zero() ? g : gcd(g, g);
    if (g.is_zero()) {
        BivariatePoly r = f;
        r *= f.terms().rbegin()->second.inverse();
        return r;
    }
    YPoly a = f.as_poly_in_y(), b = g.as_poly_in_y();
    UniPoly cont = gcd(ycontent(a), ycontent(b));
    a = yprimitive(a);
    b = yprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        YPoly r = yprem(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
            break;
        }
        b = yprimitive(r);
    }
    YPoly res;
    if (b.empty()) res = a;
    else res = YPoly{UniPoly(Scalar(1))};  // b is a nonzero y-free polynomial: primitive part is 1
    for (auto& c : res) c *= cont;
    BivariatePoly r = BivariatePoly::from_poly_in_y(res);
    r *= r.terms().rbegin()->second.inverse();
    return r;
}

}  // namespace folpol
