#include "folpol/polar.hpp"

#include <algorithm>
#include <random>

#include "folpol/errors.hpp"

namespace folpol {

namespace {

// Generic order of a PX + b PY over sampled directions.
int generic_order(const PowerSeries& P, const PowerSeries& Q, const PolarOptions& opt, PolarCertificate* cert) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
    std::vector<int> orders;
    PolarCertificate local;
    auto sample = [&]() {
        long n1 = num(rng), n2 = num(rng);
        if (n1 == 0 && n2 == 0) n2 = 1;
        Scalar a(Rational(n1, den(rng))), b(Rational(n2, den(rng)));
        local.directions.push_back({a, b});
        local.orders.push_back((P * a + Q * b).order(2));
    };
    for (int i = 0; i < 3; ++i) sample();
    for (int extra = 0;; ++extra) {
        int m = *std::min_element(local.orders.begin(), local.orders.end());
        int hits = static_cast<int>(std::count(local.orders.begin(), local.orders.end(), m));
        if (hits >= 2) {
            if (cert) *cert = local;
            return m;
        }
        if (extra == 3) throw NonGenericSamples("polar directions did not certify a minimum");
        sample();
    }
}

}  // namespace

int polar_intersection(const OneForm& w, const PowerSeries& x, const PowerSeries& y, const PolarOptions& opt,
                       PolarCertificate* cert) {
    return generic_order(eval_poly(w.a(), x, y), eval_poly(w.b(), x, y), opt, cert);
}

int polar_of_equation(const Branch& b, const PolarOptions& opt) {
    const BranchEquation& e = b.equation();
    return generic_order(e.eval_dx(b.x(), b.y()), e.eval_dy(b.x(), b.y()), opt, nullptr);
}

int cross_intersection(const BranchDivisor& f, const std::vector<int>& c, const std::vector<int>& d) {
    int s = 0;
    for (int i : c)
        for (int j : d)
            if (i != j) s += f.items[j].coeff * branch_intersection(f.items[i].branch, f.items[j].branch);
    return s;
}

int polar_of_divisor(const BranchDivisor& f, int k, const PolarOptions& opt) {
    if (f.items.at(k).coeff != 1) throw std::domain_error("polar of a divisor along an item of coefficient != 1");
    std::vector<int> all(f.items.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return polar_of_equation(f.items[k].branch, opt) + cross_intersection(f, {k}, all);
}

int var_branch(const OneForm& w, const BranchDivisor& f, int k, const PolarOptions& opt) {
    return polar_intersection(w, f.items.at(k).branch, opt) - polar_of_divisor(f, k, opt);
}

int var_rel_set(const OneForm& w, const BranchDivisor& f, const std::vector<int>& c, const PolarOptions& opt) {
    // d(f_C / H): the zeros outside C are dropped
    BranchDivisor g;
    std::vector<int> idx;
    for (int i : c) {
        idx.push_back(static_cast<int>(g.items.size()));
        g.items.push_back(f.items.at(i));
    }
    for (int j : f.poles()) g.items.push_back(f.items[j]);
    int v = 0;
    for (int i : idx) v += polar_intersection(w, g.items[i].branch, opt) - polar_of_divisor(g, i, opt);
    return v;
}

int gsv_branches(const OneForm& w, const std::vector<Branch>& c, const PolarOptions& opt) {
    int g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        g += polar_intersection(w, c[i], opt) - polar_of_equation(c[i], opt);
        for (size_t j = 0; j < i; ++j) g -= 2 * branch_intersection(c[i], c[j]);
    }
    return g;
}

LocalInstance instantiate(const ReductionTree& t, const CurveSelection& sel, int trunc) {
    std::vector<Branch> adapt;
    for (const auto& c : sel.curves) {
        if (!c.constant_term().is_zero()) throw InvalidInput("curve does not pass through the point");
        for (auto& b : newton_puiseux(c, trunc)) adapt.push_back(b);
    }
    LocalInstance inst;
    inst.trunc = trunc;
    inst.f = balanced_equation(t, adapt, trunc);
    std::vector<bool> chosen(inst.f.items.size(), false);
    for (const auto& b : adapt) {
        Attachment a = locate(t, b);
        for (size_t i = 0; i < inst.f.items.size(); ++i)
            if (inst.f.items[i].at.same_place(a)) chosen[i] = true;
    }
    for (int i : sel.items) chosen.at(i) = true;
    if (sel.all_zeros)
        for (int i : inst.f.zeros()) chosen[i] = true;
    for (size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i]) {
            if (inst.f.items[i].coeff != 1) throw InvalidInput("selected separatrix is not a zero of the balanced equation");
            inst.c.push_back(static_cast<int>(i));
        }
    return inst;
}

int polar_excess(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt) {
    return with_instance(t, c, [&](const LocalInstance& in) {
        int v = 0;
        for (int k : in.c) v += var_branch(w, in.f, k, opt);
        return v;
    });
}

int polar_excess_rel(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt) {
    return with_instance(t, c, [&](const LocalInstance& in) { return var_rel_set(w, in.f, in.c, opt); });
}

int gsv_direct(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt) {
    return with_instance(t, c, [&](const LocalInstance& in) {
        std::vector<Branch> bs;
        for (int k : in.c) bs.push_back(in.f.items[k].branch);
        return gsv_branches(w, bs, opt);
    });
}

int gsv_polar(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt) {
    return with_instance(t, c, [&](const LocalInstance& in) {
        int v = 0;
        for (int k : in.c) v += var_branch(w, in.f, k, opt);
        std::vector<int> rest;
        for (int z : in.f.zeros())
            if (std::find(in.c.begin(), in.c.end(), z) == in.c.end()) rest.push_back(z);
        // poles carry negative coefficients, so adding them subtracts (C, F_inf)
        return v + cross_intersection(in.f, in.c, rest) + cross_intersection(in.f, in.c, in.f.poles());
    });
}

bool is_generalized_curve_polar(const OneForm& w, const ReductionTree& t, const PolarOptions& opt) {
    CurveSelection all;
    all.all_zeros = true;
    return polar_excess(w, t, all, opt) == 0;
}

}  // namespace folpol
