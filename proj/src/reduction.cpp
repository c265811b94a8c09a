#include "folpol/reduction.hpp"

#include <deque>

#include "folpol/errors.hpp"

namespace folpol {

std::vector<int> TreeNode::components() const {
    std::vector<int> out;
    if (comp_x >= 0) out.push_back(comp_x);
    if (comp_y >= 0) out.push_back(comp_y);
    return out;
}

std::vector<int> ReductionTree::leaves() const {
    std::vector<int> out;
    for (const auto& n : nodes_)
        if (!n.blown_up) out.push_back(n.id);
    return out;
}

int ReductionTree::child_at(int p, const ChartPoint& q) const {
    for (int c : nodes_.at(p).children)
        if (nodes_[c].position == q) return c;
    return -1;
}

int ReductionTree::weak_component(const TreeNode& n) const {
    if (n.blown_up || n.cls.kind != SingClass::Kind::SaddleNode) return -1;
    if (n.comp_x >= 0 && n.cls.weak.vertical) return n.comp_x;
    if (n.comp_y >= 0 && !n.cls.weak.vertical && n.cls.weak.slope.is_zero()) return n.comp_y;
    return -1;
}

namespace {

bool needs_blow_up(const TreeNode& n, const std::vector<ExceptionalComponent>& comps) {
    if (n.cls.kind == SingClass::Kind::NotReduced) return true;
    bool dx = n.comp_x >= 0 && comps[n.comp_x].dicritical;
    bool dy = n.comp_y >= 0 && comps[n.comp_y].dicritical;
    if (n.germ.is_singular()) return dx || dy;
    if (dx && dy) return true;
    if (dx && n.germ.b().constant_term().is_zero()) return true;
    if (dy && n.germ.a().constant_term().is_zero()) return true;
    return false;
}

}  // namespace

ReductionTree reduce(const OneForm& w0, const ReduceOptions& opt) {
    if (w0.is_zero()) throw InvalidInput("zero form");
    ReductionTree t;
    TreeNode root;
    root.germ = w0.with_divisor({});
    t.nodes_.push_back(root);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        t.nodes_[id].cls = classify(t.nodes_[id].germ, opt.trunc);
        if (!needs_blow_up(t.nodes_[id], t.comps_)) continue;
        if (t.length() >= opt.max_blowups)
            throw CeilingExceeded("more than " + std::to_string(opt.max_blowups) + " blow-ups");

        const TreeNode p = t.nodes_[id];
        ExceptionalComponent E;
        E.id = t.length();
        E.created_at = id;
        E.dicritical = is_dicritical_first_blowup(p.germ);
        E.rho = 0;
        E.nu_D = p.germ.multiplicity() + (E.dicritical ? 1 : 0);
        for (int d : p.components()) {
            E.rho += t.comps_[d].rho;
            E.nu_D += t.comps_[d].nu_D;
            E.neighbors.insert(d);
            t.comps_[d].neighbors.insert(E.id);
        }
        if (E.rho == 0) E.rho = 1;
        if (p.is_corner()) {
            t.comps_[p.comp_x].neighbors.erase(p.comp_y);
            t.comps_[p.comp_y].neighbors.erase(p.comp_x);
        }
        t.comps_.push_back(E);
        t.nodes_[id].blown_up = true;
        t.nodes_[id].created = E.id;

        std::vector<ChartPoint> pts = special_points(p.germ);
        auto add = [&](const ChartPoint& q) {
            for (const auto& r : pts)
                if (r == q) return;
            pts.push_back(q);
        };
        if (p.comp_y >= 0) add({ChartKind::X, Scalar()});
        if (p.comp_x >= 0) add({ChartKind::Y, Scalar()});

        for (const auto& q : pts) {
            TreeNode c;
            c.id = static_cast<int>(t.nodes_.size());
            c.parent = id;
            c.position = q;
            c.germ = blow_up_data(p.germ, q).form;
            c.comp_x = E.id;
            if (q.chart == ChartKind::X) c.comp_y = q.u.is_zero() ? p.comp_y : -1;
            else c.comp_y = p.comp_x;
            c.depth = p.depth + 1;
            t.nodes_[id].children.push_back(c.id);
            t.nodes_.push_back(c);
            queue.push_back(c.id);
        }
    }
    return t;
}

int tangency_excess(const ReductionTree& t) {
    int tau = 0;
    for (int l : t.leaves()) {
        const TreeNode& n = t.node(l);
        int d = t.weak_component(n);
        if (d >= 0) tau += t.component(d).rho * (n.cls.weak_index - 1);
    }
    return tau;
}

bool is_second_type(const ReductionTree& t) {
    for (int l : t.leaves())
        if (t.weak_component(t.node(l)) >= 0) return false;
    return true;
}

bool is_generalized_curve_tree(const ReductionTree& t) {
    for (int l : t.leaves())
        if (t.node(l).cls.kind == SingClass::Kind::SaddleNode) return false;
    return true;
}

}  // namespace folpol
