#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folpol/form.hpp"

namespace folpol {

struct ExceptionalComponent {
    int id = 0;
    int created_at = 0;  // node whose blow-up created the component
    int rho = 1;
    bool dicritical = false;
    int nu_D = 0;                     // order of the total pull-back of w along D
    std::optional<int> nu_star_D;     // filled from a balanced equation
    std::set<int> neighbors;
    int epsilon() const { return dicritical ? 0 : 1; }
    int valence() const { return static_cast<int>(neighbors.size()); }
};

struct TreeNode {
    int id = 0;
    int parent = -1;
    ChartPoint position;   // relative to the blow-up of the parent
    OneForm germ;          // local transform, divisor given by comp_x / comp_y
    int comp_x = -1;       // component {x = 0} through the point
    int comp_y = -1;       // component {y = 0}
    SingClass cls;
    bool blown_up = false;
    int created = -1;      // component created when blown up
    std::vector<int> children;
    int depth = 0;

    bool is_corner() const { return comp_x >= 0 && comp_y >= 0; }
    std::vector<int> components() const;
};

struct ReduceOptions {
    int max_blowups = 64;
    int trunc = 0;  // 0: adaptive
};

class ReductionTree {
public:
    const OneForm& germ() const { return nodes_.front().germ; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const TreeNode& node(int i) const { return nodes_.at(i); }
    const std::vector<ExceptionalComponent>& components() const { return comps_; }
    const ExceptionalComponent& component(int i) const { return comps_.at(i); }
    ExceptionalComponent& component_mut(int i) { return comps_.at(i); }
    int length() const { return static_cast<int>(comps_.size()); }
    bool empty() const { return comps_.empty(); }
    std::vector<int> leaves() const;
    // Leaf that is a saddle-node whose weak separatrix lies in a divisor component; returns that
    // component or -1.
    int weak_component(const TreeNode& leaf) const;
    // Child of node p sitting at chart point q, or -1.
    int child_at(int p, const ChartPoint& q) const;

    friend ReductionTree reduce(const OneForm& w, const ReduceOptions& opt);

private:
    std::vector<TreeNode> nodes_;
    std::vector<ExceptionalComponent> comps_;
};

ReductionTree reduce(const OneForm& w, const ReduceOptions& opt = {});
int tangency_excess(const ReductionTree& t);
bool is_second_type(const ReductionTree& t);
bool is_generalized_curve_tree(const ReductionTree& t);

}  // namespace folpol
