#pragma once
#include <optional>
#include <string>
#include <vector>

#include "folpol/poly.hpp"
#include "folpol/puiseux.hpp"

namespace folpol {

// Local divisor components through the origin: {x = 0} and/or {y = 0}.
struct DivisorRecord {
    bool has_x = false;
    bool has_y = false;
    int count() const { return int(has_x) + int(has_y); }
};

// Germ of foliation given by w = a dx + b dy.
class OneForm {
public:
    OneForm() = default;
    OneForm(BivariatePoly a, BivariatePoly b, DivisorRecord d = {}) : a_(std::move(a)), b_(std::move(b)), div_(d) {}

    const BivariatePoly& a() const { return a_; }
    const BivariatePoly& b() const { return b_; }
    const DivisorRecord& divisor() const { return div_; }
    OneForm with_divisor(DivisorRecord d) const { return OneForm(a_, b_, d); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int multiplicity() const;
    bool is_singular() const { return a_.constant_term().is_zero() && b_.constant_term().is_zero(); }
    OneForm deflated() const;  // divides out gcd(a, b)
    OneForm swapped() const;   // exchange the roles of x and y
    OneForm translated(const Scalar& x0, const Scalar& y0) const;
    // Pull-back by x = p X + q Y, y = r X + s Y.
    OneForm linear_change(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s) const;
    // x a_nu + y b_nu
    BivariatePoly tangent_cone() const;
    // w(gamma)(gamma') along a parametrized curve
    PowerSeries contract(const PowerSeries& X, const PowerSeries& Y) const;
    std::string str() const;

private:
    BivariatePoly a_, b_;
    DivisorRecord div_;
};

// Point of P^1: direction (1 : slope), or (0 : 1) when vertical.
struct Direction {
    bool vertical = false;
    Scalar slope;
    friend bool operator==(const Direction& p, const Direction& q) {
        return p.vertical == q.vertical && (p.vertical || p.slope == q.slope);
    }
    std::string str() const;
};

struct SingClass {
    enum class Kind { Regular, NonDegenerate, SaddleNode, NotReduced };
    Kind kind = Kind::Regular;
    // NonDegenerate: eigenvalue ratio; exact value when representable, and its quadratic
    // D t^2 - (T^2 - 2D) t + D as descriptor.
    std::optional<Scalar> lambda;
    UniPoly lambda_poly;
    std::vector<Direction> directions;  // eigen-directions (NonDegenerate)
    // SaddleNode
    Direction weak, strong;
    int weak_index = 0;

    std::string kind_name() const;
    std::string lambda_str() const;
};

int multiplicity(const OneForm& w);
IntersectionValue milnor(const OneForm& w);
bool is_dicritical_first_blowup(const OneForm& w);

enum class ChartKind { X, Y };
struct ChartPoint {
    ChartKind chart = ChartKind::X;
    Scalar u;  // center u0 in chart X (ignored for chart Y, which is always its origin)
    friend bool operator==(const ChartPoint& p, const ChartPoint& q) {
        return p.chart == q.chart && (p.chart == ChartKind::Y || p.u == q.u);
    }
    std::string str() const;
};

// Pull-back by the blow-up at the origin, in normalized local coordinates at the chosen point:
// chart X: (x, y) = (X, X (Y + u0)); chart Y: (x, y) = (X Y, X). The new component is {X = 0}.
struct BlowUpData {
    OneForm form;      // divided by X^nu or X^(nu+1)
    int nu = 0;        // multiplicity of the germ that was blown up
    bool dicritical = false;
    int nu_E() const { return nu + (dicritical ? 1 : 0); }  // power of X stripped from the pull-back
};
BlowUpData blow_up_data(const OneForm& w, const ChartPoint& p);
// Pull-back without dividing by the exceptional equation.
OneForm pull_back(const OneForm& w, const ChartPoint& p);
// Inverse operation: a polynomial germ at the center whose transform at p is proportional to wp.
OneForm blow_down_form(const OneForm& wp, const ChartPoint& p);
OneForm blow_up(const OneForm& w, ChartKind chart, const Scalar& center);

// Points of the exceptional line that need attention after blowing up w: singular points
// (non-dicritical case) or tangency points (dicritical case).
std::vector<ChartPoint> special_points(const OneForm& w);

// Maps a parametrized curve from blown-up local coordinates to the coordinates of the center.
void blow_down_param(const ChartPoint& p, PowerSeries& X, PowerSeries& Y);

SingClass classify(const OneForm& w, int trunc = 0);
// Directions of invariant lines of the linear part (roots of the tangent cone).
std::vector<Direction> eigen_directions(const OneForm& w);

// Formal invariant curve tangent to dir, as a branch (t, phi(t)) or (phi(t), t).
Branch invariant_curve(const OneForm& w, const Direction& dir, int trunc, bool formal = false);
// Leaf through a regular point, as (t, phi(t)) when b(0,0) != 0, else (phi(t), t).
Branch regular_leaf(const OneForm& w, int trunc);
Branch weak_separatrix_jet(const OneForm& w, int trunc);
int tangency_index(const OneForm& w, const Branch& s, int slack = 2);
bool is_invariant(const OneForm& w, const Branch& s, int slack = 2);

}  // namespace folpol
