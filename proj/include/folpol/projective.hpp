#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "folpol/polar.hpp"

namespace folpol {

// Affine charts {Z = 1}, {X = 1}, {Y = 1} of the projective plane. Local coordinates are
// (x, y) in chart Z, (y, z) in chart X and (x, z) in chart Y, in this order.
enum class ProjChart { Z, X, Y };
std::string chart_name(ProjChart c);

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

// Homogeneous polynomial in X, Y, Z.
class HomogPoly {
public:
    using Exps = std::array<int, 3>;

    HomogPoly() = default;
    explicit HomogPoly(int degree) : deg_(degree) {}
    // Z^degree f(X/Z, Y/Z) for f given in the local coordinates of chart c.
    static HomogPoly homogenize(const BivariatePoly& f, int degree, ProjChart c = ProjChart::Z);
    static HomogPoly var(int i);

    int degree() const { return deg_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exps, Scalar>& terms() const { return t_; }
    void add_term(const Scalar& c, const Exps& e);

    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    friend HomogPoly operator+(HomogPoly p, const HomogPoly& q) { return p += q; }
    friend HomogPoly operator-(HomogPoly p, const HomogPoly& q) { return p -= q; }
    friend HomogPoly operator*(const HomogPoly& p, const HomogPoly& q);
    friend HomogPoly operator*(HomogPoly p, const Scalar& s);
    HomogPoly operator-() const;
    friend bool operator==(const HomogPoly& p, const HomogPoly& q) { return p.deg_ == q.deg_ && p.t_ == q.t_; }

    bool divisible_by_var(int i) const;
    HomogPoly divide_by_var(int i) const;
    BivariatePoly chart(ProjChart c) const;
    // H(M v)
    HomogPoly linear_change(const Matrix3& m) const;
    Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;
    std::string str() const;

private:
    int deg_ = 0;
    std::map<Exps, Scalar> t_;
};

struct SingularPoint {
    ProjChart chart = ProjChart::Z;
    Scalar u, v;   // local coordinates in the chart
    OneForm germ;  // chart form translated to the point
    int milnor = 0;
    std::array<Scalar, 3> homogeneous() const;
    std::string str() const;
};

// Singular points whose coordinates the engine cannot represent.
struct SingularCluster {
    ProjChart chart = ProjChart::Z;
    std::string description;  // defining polynomial data
    int resultant_degree = 0;
};

struct SingularLocus {
    std::vector<SingularPoint> points;
    std::vector<SingularCluster> clusters;
    bool complete() const { return clusters.empty(); }
};

// Foliation P dX + Q dY + R dZ with X P + Y Q + Z R = 0 and no common factor.
class ProjectiveFoliation {
public:
    static ProjectiveFoliation from_affine(const OneForm& w, ProjChart c = ProjChart::Z);

    int degree() const { return c_[0].degree() - 1; }
    const HomogPoly& coefficient(int i) const { return c_.at(i); }
    // Restriction to chart c as a form in its local coordinates.
    OneForm chart_form(ProjChart c) const;
    // Pull-back by v -> M v.
    ProjectiveFoliation transformed(const Matrix3& m) const;
    std::string str() const;

private:
    std::array<HomogPoly, 3> c_;
};

struct InvariantCurve {
    HomogPoly S;
    static InvariantCurve from_affine(const BivariatePoly& f, ProjChart c = ProjChart::Z);
    int degree() const { return S.degree(); }
};
bool is_invariant(const ProjectiveFoliation& F, const InvariantCurve& S);

struct DegreeReport {
    int degree = 0;             // from the homogeneous form
    int tangency_degree = 0;    // number of tangencies with sampled lines
    int lines_sampled = 0;
};
DegreeReport degree_of(const ProjectiveFoliation& F, std::uint64_t seed = 0);

SingularLocus singular_locus(const ProjectiveFoliation& F);

struct BezoutReport {
    int degree = 0;
    int expected = 0;        // d^2 + d + 1
    int milnor_sum = 0;      // over represented points
    int generic_count = 0;   // resultant degree after a generic projective change
    SingularLocus locus;
    bool holds = false;
};
BezoutReport bezout_check(const ProjectiveFoliation& F, std::uint64_t seed = 0);

// Local data of S at a singular point, with a balanced equation adapted to its branches.
struct LocalCurveTerm {
    SingularPoint point;
    BivariatePoly s_local;
    int branches = 0;
    int var = 0;
    int to_rest = 0;   // (S, F_0 minus S)
    int to_poles = 0;  // (S, F_inf)
    int gsv = 0;       // var + to_rest - to_poles
    int gsv_direct = 0;
    bool generalized_curve = false;
    int correction() const { return to_poles - to_rest; }
};

LocalCurveTerm local_curve_term(const OneForm& germ, const BivariatePoly& s, const PolarOptions& opt = {});

struct BrunellaReport {
    int degree = 0, curve_degree = 0;
    int lhs = 0;       // (d + 2 - d0) d0
    int gsv_sum = 0;
    std::vector<LocalCurveTerm> terms;
    bool holds = false;
};
BrunellaReport brunella_identity(const ProjectiveFoliation& F, const InvariantCurve& S, const PolarOptions& opt = {});

struct PoincareReport {
    int degree = 0, curve_degree = 0;
    std::vector<LocalCurveTerm> terms;
    int correction_sum = 0;
    Rational rhs;                    // d + 2 + correction_sum / d0
    bool bound_holds = false;        // d0 <= rhs
    bool generalized_curves = false; // every germ over S is a generalized curve
    bool equality = false;           // d0 == rhs
};
PoincareReport poincare_bound(const ProjectiveFoliation& F, const InvariantCurve& S, const PolarOptions& opt = {});

}  // namespace folpol
