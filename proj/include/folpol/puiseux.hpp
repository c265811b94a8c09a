#pragma once
#include <memory>
#include <string>
#include <vector>

#include "folpol/errors.hpp"
#include "folpol/poly.hpp"
#include "folpol/series.hpp"

namespace folpol {

// Fractional power series sum c_n s^(n/e), truncated at s^(N/e).
struct PuiseuxSeries {
    int ramification = 1;
    PowerSeries series;  // in the variable s^(1/e)
};

// Monic equation of an irreducible branch in one variable with series coefficients
// in the other: sum_k coeff[k](u) v^k, coeff[degree] = 1; (u, v) = (x, y) or (y, x).
class BranchEquation {
public:
    BranchEquation() = default;
    BranchEquation(bool swapped, std::vector<PowerSeries> coeff) : swapped_(swapped), c_(std::move(coeff)) {}

    bool swapped() const { return swapped_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<PowerSeries>& coefficients() const { return c_; }
    int precision() const;  // precision of the coefficients in u

    PowerSeries eval(const PowerSeries& X, const PowerSeries& Y) const;
    PowerSeries eval_dx(const PowerSeries& X, const PowerSeries& Y) const;
    PowerSeries eval_dy(const PowerSeries& X, const PowerSeries& Y) const;
    BivariatePoly poly() const;  // truncation of the equation as a polynomial

private:
    PowerSeries eval_impl(const PowerSeries& U, const PowerSeries& V, int du, int dv) const;
    bool swapped_ = false;
    std::vector<PowerSeries> c_;
};

// A formal irreducible curve germ at the origin with a primitive parametrization.
class Branch {
public:
    Branch() = default;
    // Builds the equation from the parametrization; cap bounds infinite expansions.
    Branch(PowerSeries x, PowerSeries y, int cap, bool formal = false);

    const PowerSeries& x() const { return x_; }
    const PowerSeries& y() const { return y_; }
    int mult() const { return mult_; }
    bool formal() const { return formal_; }
    void set_formal(bool f) { formal_ = f; }
    int truncation() const;  // precision of the parametrization
    const BranchEquation& equation() const { return *eq_; }
    BivariatePoly equation_poly() const { return eq_->poly(); }
    bool is_smooth() const { return mult_ == 1; }
    // Expansion of the second coordinate in powers of the first one (ramification = mult).
    PuiseuxSeries puiseux() const;
    // Characteristic exponents beta_0 < beta_1 < ... (in the adapted coordinate).
    std::vector<int> characteristic_exponents() const;
    std::string str(int terms = 8) const;

private:
    PowerSeries x_, y_;
    int mult_ = 0;
    bool formal_ = false;
    std::shared_ptr<const BranchEquation> eq_;
};

// Newton-Puiseux expansion of the branches of f at the origin to t-precision trunc.
std::vector<Branch> newton_puiseux(const BivariatePoly& f, int trunc);

// Order of b2's equation along b1 (checked against the symmetric order).
int branch_intersection(const Branch& b1, const Branch& b2, int slack = 2);
// Order of a polynomial along a branch.
int order_along(const BivariatePoly& g, const Branch& b, int slack = 2);

// Intersection multiplicity at the origin; nullopt-like flag for INFINITE.
struct IntersectionValue {
    bool infinite = false;
    int value = 0;
};
IntersectionValue intersection_number(const BivariatePoly& f, const BivariatePoly& g);
// Second route: sum over branches of f of ord g o gamma.
IntersectionValue intersection_number_branches(const BivariatePoly& f, const BivariatePoly& g);
// Resultant in y after the shear x -> x + c y, as a polynomial in x.
UniPoly sheared_resultant(const BivariatePoly& f, const BivariatePoly& g, const Scalar& c);
Scalar determinant(std::vector<std::vector<Scalar>> m);

// Default starting truncation for order computations.
int initial_truncation(int degree_estimate);
constexpr int kTruncationCeiling = 4096;

// Runs fn(N) for N = N0, 2 N0, ... until it stops throwing TruncationInsufficient.
template <class Fn>
auto with_adaptive_truncation(int n0, Fn fn) -> decltype(fn(0)) {
    int n = n0;
    for (;;) {
        try {
            return fn(n);
        } catch (const TruncationInsufficient&) {
            if (2 * n > kTruncationCeiling) throw;
            n *= 2;
        }
    }
}

}  // namespace folpol
