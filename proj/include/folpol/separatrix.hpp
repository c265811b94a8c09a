#pragma once
#include <map>
#include <string>
#include <vector>

#include "folpol/reduction.hpp"

namespace folpol {

// Where a separatrix lives in the reduction tree.
struct Attachment {
    enum class Kind { Isolated, Curvet };
    Kind kind = Kind::Isolated;
    int node = -1;         // Isolated: leaf carrying the strict transform
    Direction direction;   // Isolated: tangent direction at that leaf
    int component = -1;    // Curvet: dicritical component
    ChartPoint point;      // Curvet: point of the component (chart of its creating blow-up)

    bool same_place(const Attachment& o) const;
    std::string str() const;
};

struct Separatrix {
    Branch branch;
    Attachment at;
};

struct DivisorItem {
    Branch branch;
    int coeff = 1;
    Attachment at;
    bool adapted = false;  // supplied by the caller
};

// Formal combination sum a_i B_i of branches.
struct BranchDivisor {
    std::vector<DivisorItem> items;

    std::vector<int> zeros() const;
    std::vector<int> poles() const;
    int multiplicity() const;  // sum a_i mult(B_i)
};

// One blow-up of a parametrized germ through the origin: chart point and strict transform.
struct BranchStep {
    ChartPoint q;
    PowerSeries x, y;
    int mult = 0;  // multiplicity of the germ before the blow-up
};
BranchStep blow_up_param(const PowerSeries& x, const PowerSeries& y, int slack = 2);

// Strict transform of a branch along the tree.
struct BranchPath {
    struct Step {
        int node;
        PowerSeries x, y;  // local parametrization at the node
        int mult;
    };
    std::vector<Step> steps;
    bool ends_at_leaf = false;  // else the branch leaves the tree at a generic point of a component
    int component = -1;         // component crossed when !ends_at_leaf
    ChartPoint point;           // its position on that component
};
BranchPath follow(const ReductionTree& t, const Branch& b, int slack = 2);

// Isolated separatrices (every leaf contributes its transverse curve).
std::vector<Separatrix> separatrices(const ReductionTree& t, int trunc);
// Curvet of the dicritical component d through point q.
Branch curvet(const ReductionTree& t, int d, const ChartPoint& q, int trunc);
// Deterministic order of points on component d avoiding the points visited by the reduction.
std::vector<ChartPoint> curvet_points(const ReductionTree& t, int d, int count,
                                      const std::vector<ChartPoint>& avoid = {});
// Curve through a generic point of d meeting it transversally.
Branch curvette(const ReductionTree& t, int d, int trunc, const std::vector<ChartPoint>& avoid = {});
// Transforms a local parametrization at node id to the coordinates of the root.
void blow_down_to_root(const ReductionTree& t, int id, PowerSeries& x, PowerSeries& y);

Attachment locate(const ReductionTree& t, const Branch& b, int slack = 2);

BranchDivisor balanced_equation(const ReductionTree& t, const std::vector<Branch>& adapt_to, int trunc);
// Checks the defining conditions of a balanced equation; message describes the first failure.
bool is_balanced(const ReductionTree& t, const BranchDivisor& f, std::string* why = nullptr);

// nu(F) - 1
int pure_multiplicity(const BranchDivisor& f);
// Recursive pure valuations of the components.
std::map<int, int> pure_valuations(const ReductionTree& t, const BranchDivisor& f);
// Valuations of the divisor along the components, via intersections with curvettes.
std::map<int, int> divisor_valuations(const ReductionTree& t, const BranchDivisor& f, int trunc);
// Stores pure valuations in the component table.
void annotate_pure_valuations(ReductionTree& t, const BranchDivisor& f);

// Divisor of F o pi / h^(nu(F) - eps) at the point q of the first blow-up, with local branches.
BranchDivisor blown_up_balanced(const ReductionTree& t, const BranchDivisor& f, const ChartPoint& q, int trunc);

}  // namespace folpol
