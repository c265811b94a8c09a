#include "folpol/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "folpol/errors.hpp"

namespace folpol {

PowerSeries::PowerSeries(std::vector<Scalar> coeffs, int prec) : c_(std::move(coeffs)), prec_(prec) {
    if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_);
    trim();
}

void PowerSeries::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PowerSeries PowerSeries::constant(const Scalar& c, int prec) { return PowerSeries({c}, prec); }

PowerSeries PowerSeries::monomial(const Scalar& c, int k, int prec) {
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return PowerSeries(std::move(v), prec);
}

PowerSeries PowerSeries::from_poly(const UniPoly& p, int prec) { return PowerSeries(p.coeffs(), prec); }

Scalar PowerSeries::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar();
    return c_[k];
}

int PowerSeries::valuation_bound() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return prec_;
}

int PowerSeries::order(int slack) const {
    int v = valuation_bound();
    if (v >= prec_ - slack) {
        if (is_exact() && v >= prec_) throw InfiniteIntersection("series vanishes identically");
        throw TruncationInsufficient("order not determined below truncation " + std::to_string(prec_));
    }
    return v;
}

bool PowerSeries::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

PowerSeries PowerSeries::truncated(int prec) const { return PowerSeries(c_, std::min(prec, prec_)); }

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    prec_ = std::min(prec_, o.prec_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_);
    trim();
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    prec_ = std::min(prec_, o.prec_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_);
    trim();
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int prec = std::min(prec_add(a.prec_, b.valuation_bound()), prec_add(b.prec_, a.valuation_bound()));
    if (a.c_.empty() || b.c_.empty()) return PowerSeries({}, prec);
    int len = std::min<long>(prec, static_cast<long>(a.c_.size() + b.c_.size() - 1));
    std::vector<Scalar> r(std::max(len, 0));
    for (size_t i = 0; i < a.c_.size() && static_cast<int>(i) < len; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) < len; ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PowerSeries(std::move(r), prec);
}

PowerSeries PowerSeries::shifted(int k) const {
    std::vector<Scalar> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return PowerSeries(std::move(v), prec_add(prec_, k));
}

PowerSeries PowerSeries::divided_by_t(int k) const {
    if (valuation_bound() < k) throw std::domain_error("series not divisible by t^k");
    if (k >= static_cast<int>(c_.size())) return PowerSeries({}, is_exact() ? prec_ : prec_ - k);
    std::vector<Scalar> v(c_.begin() + k, c_.end());
    return PowerSeries(std::move(v), is_exact() ? prec_ : prec_ - k);
}

PowerSeries PowerSeries::inverse(int cap) const {
    if (coeff(0).is_zero()) throw std::domain_error("inverse of a non-unit series");
    int prec = std::min(prec_, cap);
    if (prec >= kExact) {
        if (c_.size() == 1) return PowerSeries({c_[0].inverse()}, kExact);
        throw std::logic_error("inverse of an exact non-constant series needs a cap");
    }
    std::vector<Scalar> r(prec);
    Scalar inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int n = 1; n < prec; ++n) {
        Scalar s;
        for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k)
            if (!c_[k].is_zero()) s += c_[k] * r[n - k];
        r[n] = -s * inv0;
    }
    return PowerSeries(std::move(r), prec);
}

PowerSeries PowerSeries::derivative() const {
    std::vector<Scalar> v;
    for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return PowerSeries(std::move(v), is_exact() ? prec_ : std::max(prec_ - 1, 0));
}

PowerSeries PowerSeries::integral() const {
    std::vector<Scalar> v(c_.size() + 1);
    for (size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / Scalar(static_cast<long>(k + 1));
    return PowerSeries(std::move(v), prec_add(prec_, 1));
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries r = constant(Scalar(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    int v = inner.valuation_bound();
    if (v < 1) throw std::domain_error("composition requires inner series without constant term");
    PowerSeries r = PowerSeries({}, kExact);
    for (size_t k = c_.size(); k-- > 0;) r = r * inner + constant(c_[k]);
    int cap = prec_mul(prec_, v);
    return r.truncated(cap);
}

PowerSeries PowerSeries::substitute_power(int e) const {
    std::vector<Scalar> v(c_.empty() ? 0 : (c_.size() - 1) * e + 1);
    for (size_t k = 0; k < c_.size(); ++k) v[k * e] = c_[k];
    return PowerSeries(std::move(v), prec_mul(prec_, e));
}

PowerSeries PowerSeries::binomial_power(const Rational& r, int cap) const {
    if (valuation_bound() < 1) throw std::domain_error("binomial power needs a series without constant term");
    int prec = std::min(prec_, cap);
    if (c_.empty()) return constant(Scalar(1), prec_);
    if (prec >= kExact) throw std::logic_error("binomial power of an exact series needs a cap");
    // y = (1+h)^r solves (1+h) y' = r h' y; fill coefficients directly.
    PowerSeries h = truncated(prec);
    PowerSeries hp = h.derivative();
    std::vector<Scalar> y(prec);
    y[0] = Scalar(1);
    for (int n = 0; n + 1 < prec; ++n) {
        // (n+1) y_{n+1} + sum_{k>=1} h_k (n+1-k) y_{n+1-k} = r * sum_{k} (k+1) h_{k+1} y_{n-k}
        Scalar lhs;
        for (int k = 1; k <= n + 1; ++k) {
            Scalar hk = h.coeff(k);
            if (!hk.is_zero()) lhs += hk * Scalar(n + 1 - k) * y[n + 1 - k];
        }
        Scalar rhs;
        for (int k = 0; k <= n; ++k) {
            Scalar hk = hp.coeff(k);
            if (!hk.is_zero()) rhs += hk * y[n - k];
        }
        rhs *= Scalar(r);
        y[n + 1] = (rhs - lhs) / Scalar(n + 1);
    }
    return PowerSeries(std::move(y), prec);
}

PowerSeries PowerSeries::reversion(int cap) const {
    if (!coeff(0).is_zero() || coeff(1).is_zero()) throw std::domain_error("reversion needs t*c1 + ... with c1 != 0");
    int prec = std::min(prec_, cap);
    if (prec >= kExact) {
        if (c_.size() == 2) return monomial(c_[1].inverse(), 1);
        throw std::logic_error("reversion of an exact series needs a cap");
    }
    // Newton iteration T <- T - (f(T) - t) / f'(T), doubling the precision each step.
    PowerSeries f = truncated(prec);
    PowerSeries fp = f.derivative();
    PowerSeries T = monomial(coeff(1).inverse(), 1, 2);
    int p = 2;
    while (p < prec) {
        p = std::min(2 * p, prec);
        PowerSeries Tp = T.truncated(p);
        Tp = PowerSeries(Tp.coeffs(), p);
        PowerSeries num = f.truncated(p).compose(Tp) - monomial(Scalar(1), 1, p);
        PowerSeries den = fp.truncated(p).compose(Tp);
        T = (Tp - num * den.inverse(p)).truncated(p);
    }
    return PowerSeries(T.coeffs(), prec);
}

std::string PowerSeries::str(const std::string& var, int max_terms) const {
    std::string s;
    int shown = 0;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (shown == max_terms) {
            s += " + ...";
            break;
        }
        std::string cs = c_[k].is_rational() ? c_[k].str() : "(" + c_[k].str() + ")";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term = mono.empty() ? cs : (c_[k].is_one() ? mono : cs + "*" + mono);
        s += shown == 0 ? term : " + " + term;
        ++shown;
    }
    if (s.empty()) s = "0";
    if (!is_exact()) s += " + O(" + var + "^" + std::to_string(prec_) + ")";
    return s;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b, int cap) {
    int k = b.order();
    PowerSeries bb = b.divided_by_t(k);
    PowerSeries aa = a.divided_by_t(k);
    if (bb.coeffs().size() == 1) return aa * bb.coeff(0).inverse();
    int c = cap;
    if (!aa.is_exact()) c = std::min(c, aa.prec());
    return aa * bb.inverse(c);
}

PowerSeries eval_poly(const BivariatePoly& p, const PowerSeries& X, const PowerSeries& Y) {
    std::vector<PowerSeries> xp{PowerSeries::constant(Scalar(1))}, yp{PowerSeries::constant(Scalar(1))};
    PowerSeries r = PowerSeries::zero(PowerSeries::kExact);
    for (const auto& [m, c] : p.terms()) {
        while (static_cast<int>(xp.size()) <= m.first) xp.push_back(xp.back() * X);
        while (static_cast<int>(yp.size()) <= m.second) yp.push_back(yp.back() * Y);
        r += (xp[m.first] * yp[m.second]) * c;
    }
    return r;
}

}  // namespace folpol
