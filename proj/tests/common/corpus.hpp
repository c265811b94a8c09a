#pragma once
#include <string>
#include <vector>

#include "folpol/parse.hpp"

namespace corpus {

struct Germ {
    std::string name;
    folpol::OneForm form;
};

// Normal form (zeta x^k - k) y dx + x^(k+1) dy.
inline folpol::OneForm saddle_node(int k, long zeta) {
    using folpol::BivariatePoly;
    BivariatePoly X = BivariatePoly::x(), Y = BivariatePoly::y();
    return folpol::OneForm((BivariatePoly(folpol::Scalar(zeta)) * pow(X, k) - BivariatePoly(k)) * Y, pow(X, k + 1));
}

// Germ whose first blow-up carries, at p, a saddle-node with weak curve on the exceptional line.
inline folpol::OneForm tangent_saddle_node(int k, long zeta, const folpol::ChartPoint& p) {
    return folpol::blow_down_form(saddle_node(k, zeta).swapped(), p);
}

inline std::vector<Germ> germs() {
    using folpol::ChartKind;
    using folpol::ChartPoint;
    using folpol::Scalar;
    std::vector<Germ> out;
    auto add = [&](const std::string& s) { out.push_back({s, folpol::parse_form(s)}); };
    // hamiltonian generalized curves
    add("-3x^2 dx + 2y dy");               // d(y^2 - x^3)
    add("-5x^4 dx + 2y dy");               // d(y^2 - x^5)
    add("y dx + x dy");                    // d(xy)
    add("-4x^3 dx + 3y^2 dy");             // d(y^3 - x^4)
    add("(2x y - y^2) dx + (x^2 - 2x y) dy");  // d(xy(x - y))
    // non-degenerate
    add("2x dy + 3y dx");
    add("y dx + 2x dy + x^2 dy");
    // radial and quasi-radial
    add("x dy - y dx");
    add("2x dy - 3y dx");
    add("3x dy - 5y dx");
    add("x dy - 2y dx");
    add("x dy - y dx + x^3 dy");
    add("x dy - y dx + y^3 dx");
    // saddle-nodes
    add("(x - y) dx + x^2 dy");            // Euler
    out.push_back({"saddle-node k=1", saddle_node(1, 0)});
    out.push_back({"saddle-node k=2 zeta=1", saddle_node(2, 1)});
    out.push_back({"saddle-node k=3", saddle_node(3, 0)});
    // Poincare-Dulac
    add("(2x + y^2) dy - y dx");
    add("(3x + y^3) dy - y dx");
    // nilpotent
    add("4x^3 dx + (2y + 4x^2) dy");
    // tangent saddle-nodes after one blow-down
    out.push_back({"tangent saddle-node k=1 zeta=0 X:0", tangent_saddle_node(1, 0, {ChartKind::X, Scalar()})});
    out.push_back({"tangent saddle-node k=2 zeta=-1 X:1", tangent_saddle_node(2, -1, {ChartKind::X, Scalar(1)})});
    out.push_back({"tangent saddle-node k=3 zeta=0 Y", tangent_saddle_node(3, 0, {ChartKind::Y, Scalar()})});
    out.push_back({"tangent saddle-node k=1 zeta=-1 Y", tangent_saddle_node(1, -1, {ChartKind::Y, Scalar()})});
    // mixed
    add("(y + x^2) dy - x^3 dx");
    add("(x^2 - y^2) dy + x^3 dx");
    return out;
}

}  // namespace corpus
