#pragma once
#include <cstdint>
#include <vector>

#include "folpol/separatrix.hpp"

namespace folpol {

struct PolarOptions {
    std::uint64_t seed = 0;
};

// Orders of (a P + b Q) along the branch for the sampled directions (a : b).
struct PolarCertificate {
    std::vector<std::pair<Scalar, Scalar>> directions;
    std::vector<int> orders;
};

// Generic polar intersection of the foliation w along a parametrized invariant curve.
int polar_intersection(const OneForm& w, const PowerSeries& x, const PowerSeries& y,
                       const PolarOptions& opt = {}, PolarCertificate* cert = nullptr);
inline int polar_intersection(const OneForm& w, const Branch& b, const PolarOptions& opt = {},
                              PolarCertificate* cert = nullptr) {
    return polar_intersection(w, b.x(), b.y(), opt, cert);
}
// Polar intersection of df along B, f the equation of B.
int polar_of_equation(const Branch& b, const PolarOptions& opt = {});
// Polar intersection of d(sum a_i B_i) along the item B_k (coefficient one).
int polar_of_divisor(const BranchDivisor& f, int k, const PolarOptions& opt = {});

// Branch-level quantities with a fixed balanced equation.
int var_branch(const OneForm& w, const BranchDivisor& f, int k, const PolarOptions& opt = {});
int var_rel_set(const OneForm& w, const BranchDivisor& f, const std::vector<int>& c, const PolarOptions& opt = {});
int gsv_branches(const OneForm& w, const std::vector<Branch>& c, const PolarOptions& opt = {});
// (C, D) summed over items
int cross_intersection(const BranchDivisor& f, const std::vector<int>& c, const std::vector<int>& d);

// Which separatrices form C: branches of given curves (the balanced equation is adapted to them),
// explicit items of the balanced equation, or every zero.
struct CurveSelection {
    std::vector<BivariatePoly> curves;
    std::vector<int> items;
    bool all_zeros = false;
};

struct LocalInstance {
    BranchDivisor f;
    std::vector<int> c;  // indices of the selected items
    int trunc = 0;
};
LocalInstance instantiate(const ReductionTree& t, const CurveSelection& sel, int trunc);
// Runs fn on instances of increasing truncation until the orders are certified.
template <class Fn>
auto with_instance(const ReductionTree& t, const CurveSelection& sel, Fn fn) {
    int deg = std::max(t.germ().a().degree(), t.germ().b().degree());
    for (const auto& c : sel.curves) deg = std::max(deg, c.degree());
    return with_adaptive_truncation(initial_truncation(deg + t.length()),
                                    [&](int n) { return fn(instantiate(t, sel, n)); });
}

int polar_excess(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt = {});
int polar_excess_rel(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt = {});
int gsv_direct(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt = {});
int gsv_polar(const OneForm& w, const ReductionTree& t, const CurveSelection& c, const PolarOptions& opt = {});
bool is_generalized_curve_polar(const OneForm& w, const ReductionTree& t, const PolarOptions& opt = {});

}  // namespace folpol
