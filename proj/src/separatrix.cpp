#include "folpol/separatrix.hpp"

#include <algorithm>

#include "folpol/errors.hpp"

namespace folpol {

bool Attachment::same_place(const Attachment& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Isolated) return node == o.node && direction == o.direction;
    return component == o.component && point == o.point;
}

std::string Attachment::str() const {
    if (kind == Kind::Isolated) return "isolated@" + std::to_string(node) + direction.str();
    return "curvet@D" + std::to_string(component) + ":" + point.str();
}

std::vector<int> BranchDivisor::zeros() const {
    std::vector<int> out;
    for (size_t i = 0; i < items.size(); ++i)
        if (items[i].coeff > 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> BranchDivisor::poles() const {
    std::vector<int> out;
    for (size_t i = 0; i < items.size(); ++i)
        if (items[i].coeff < 0) out.push_back(static_cast<int>(i));
    return out;
}

int BranchDivisor::multiplicity() const {
    int m = 0;
    for (const auto& it : items) m += it.coeff * it.branch.mult();
    return m;
}

namespace {

using StepResult = BranchStep;

// One blow-up step of a parametrized germ (x(t), y(t)) through the origin.
StepResult step(const PowerSeries& X, const PowerSeries& Y, int slack) {
    int vx = X.valuation_bound(), vy = Y.valuation_bound();
    bool kx = vx < X.prec() - slack, ky = vy < Y.prec() - slack;
    StepResult r;
    if (kx && vx <= vy) {
        if (!ky && vx >= Y.prec() - slack) throw TruncationInsufficient("branch too short to blow up");
        Scalar u0 = (vx == vy) ? Y.coeff(vy) / X.coeff(vx) : Scalar();
        r.q = {ChartKind::X, u0};
        r.x = X;
        r.y = divide(Y, X) - PowerSeries::constant(u0);
        r.mult = vx;
    } else if (ky && (!kx || vy < vx)) {
        if (!kx && vy >= X.prec() - slack) throw TruncationInsufficient("branch too short to blow up");
        r.q = {ChartKind::Y, Scalar()};
        r.x = Y;
        r.y = divide(X, Y);
        r.mult = vy;
    } else {
        throw TruncationInsufficient("branch order unknown");
    }
    return r;
}

Direction tangent_of(const PowerSeries& X, const PowerSeries& Y, int slack) {
    StepResult s = step(X, Y, slack);
    if (s.q.chart == ChartKind::Y) return {true, Scalar()};
    return {false, s.q.u};
}

Direction transverse_direction(const TreeNode& n) {
    if (n.cls.kind == SingClass::Kind::NonDegenerate) {
        for (const auto& d : n.cls.directions)
            if (!d.vertical) return d;
        if (n.cls.directions.empty()) eigen_directions(n.germ);  // throws when not representable
        throw std::logic_error("no transverse eigendirection");
    }
    if (n.cls.kind == SingClass::Kind::SaddleNode) return n.cls.weak.vertical ? n.cls.strong : n.cls.weak;
    throw std::logic_error("transverse direction of a non-reduced point");
}

std::vector<Attachment> isolated_places(const ReductionTree& t) {
    std::vector<Attachment> out;
    auto push = [&](int node, const Direction& d) {
        Attachment a;
        a.kind = Attachment::Kind::Isolated;
        a.node = node;
        a.direction = d;
        out.push_back(a);
    };
    if (t.empty()) {
        const TreeNode& r = t.node(0);
        switch (r.cls.kind) {
            case SingClass::Kind::Regular: {
                Scalar a0 = r.germ.a().constant_term(), b0 = r.germ.b().constant_term();
                if (b0.is_zero()) push(0, {true, Scalar()});
                else push(0, {false, -a0 / b0});
                break;
            }
            case SingClass::Kind::NonDegenerate: {
                auto dirs = r.cls.directions.empty() ? eigen_directions(r.germ) : r.cls.directions;
                for (const auto& d : dirs) push(0, d);
                break;
            }
            case SingClass::Kind::SaddleNode:
                push(0, r.cls.strong);
                push(0, r.cls.weak);
                break;
            default: throw std::logic_error("unreduced root in an empty tree");
        }
        return out;
    }
    for (int l : t.leaves()) {
        const TreeNode& n = t.node(l);
        if (!n.germ.is_singular() || n.is_corner()) continue;
        push(l, transverse_direction(n));
    }
    return out;
}

}  // namespace

BranchStep blow_up_param(const PowerSeries& x, const PowerSeries& y, int slack) { return step(x, y, slack); }

BranchPath follow(const ReductionTree& t, const Branch& b, int slack) {
    BranchPath path;
    int node = 0;
    PowerSeries X = b.x(), Y = b.y();
    for (;;) {
        const TreeNode& n = t.node(node);
        if (!n.blown_up) {
            int vx = X.valuation_bound(), vy = Y.valuation_bound();
            path.steps.push_back({node, X, Y, std::min(vx, vy)});
            path.ends_at_leaf = true;
            return path;
        }
        StepResult s = step(X, Y, slack);
        path.steps.push_back({node, X, Y, s.mult});
        int c = t.child_at(node, s.q);
        if (c < 0) {
            path.component = n.created;
            path.point = s.q;
            return path;
        }
        node = c;
        X = s.x;
        Y = s.y;
    }
}

void blow_down_to_root(const ReductionTree& t, int id, PowerSeries& x, PowerSeries& y) {
    while (id > 0) {
        const TreeNode& n = t.node(id);
        blow_down_param(n.position, x, y);
        id = n.parent;
    }
}

std::vector<Separatrix> separatrices(const ReductionTree& t, int trunc) {
    std::vector<Separatrix> out;
    for (const auto& a : isolated_places(t)) {
        const TreeNode& n = t.node(a.node);
        Separatrix s;
        s.at = a;
        if (n.cls.kind == SingClass::Kind::Regular) {
            s.branch = regular_leaf(n.germ, trunc);
        } else {
            bool weak = n.cls.kind == SingClass::Kind::SaddleNode && a.direction == n.cls.weak;
            Branch local = invariant_curve(n.germ, a.direction, trunc, weak);
            PowerSeries x = local.x(), y = local.y();
            blow_down_to_root(t, a.node, x, y);
            s.branch = Branch(x, y, trunc, weak);
        }
        out.push_back(s);
    }
    return out;
}

Branch curvet(const ReductionTree& t, int d, const ChartPoint& q, int trunc) {
    const ExceptionalComponent& D = t.component(d);
    if (!D.dicritical) throw std::domain_error("curvets live on dicritical components");
    const TreeNode& p = t.node(D.created_at);
    if (t.child_at(p.id, q) >= 0) throw std::domain_error("curvet requested at a special point");
    OneForm local = blow_up_data(p.germ, q).form;
    if (local.b().constant_term().is_zero()) throw std::domain_error("leaf tangent to a dicritical component");
    Branch leaf = regular_leaf(local, trunc);
    PowerSeries x = leaf.x(), y = leaf.y();
    blow_down_param(q, x, y);
    blow_down_to_root(t, p.id, x, y);
    return Branch(x, y, trunc);
}

std::vector<ChartPoint> curvet_points(const ReductionTree& t, int d, int count, const std::vector<ChartPoint>& avoid) {
    std::vector<ChartPoint> out;
    int p = t.component(d).created_at;
    for (long k = 0; static_cast<int>(out.size()) < count; ++k) {
        ChartPoint q;
        if (k == 0) q = {ChartKind::X, Scalar()};
        else if (k == 1) q = {ChartKind::Y, Scalar()};
        else {
            long m = k / 2;
            q = {ChartKind::X, Scalar(k % 2 == 0 ? m : -m)};
        }
        if (t.child_at(p, q) >= 0) continue;
        if (std::find(avoid.begin(), avoid.end(), q) != avoid.end()) continue;
        out.push_back(q);
    }
    return out;
}

Branch curvette(const ReductionTree& t, int d, int trunc, const std::vector<ChartPoint>& avoid) {
    ChartPoint q = curvet_points(t, d, 1, avoid).front();
    PowerSeries x = PowerSeries::monomial(Scalar(1), 1), y = PowerSeries::zero(PowerSeries::kExact);
    blow_down_param(q, x, y);
    blow_down_to_root(t, t.component(d).created_at, x, y);
    return Branch(x, y, trunc);
}

Attachment locate(const ReductionTree& t, const Branch& b, int slack) {
    const OneForm& w = t.germ();
    auto require_invariant = [&]() {
        if (!is_invariant(w, b, slack)) throw NotASeparatrix("branch is not invariant: " + b.str(4));
    };
    BranchPath path = follow(t, b, slack);
    Attachment a;
    if (!path.ends_at_leaf) {
        if (!t.component(path.component).dicritical)
            throw NotASeparatrix("branch crosses an invariant component");
        require_invariant();
        a.kind = Attachment::Kind::Curvet;
        a.component = path.component;
        a.point = path.point;
        return a;
    }
    const auto& last = path.steps.back();
    const TreeNode& n = t.node(last.node);
    if (t.empty()) {
        require_invariant();
        a.node = 0;
        a.direction = tangent_of(b.x(), b.y(), slack);
        return a;
    }
    if (n.germ.is_singular()) {
        if (n.is_corner()) throw NotASeparatrix("branch reaches a corner");
        require_invariant();
        a.node = n.id;
        a.direction = transverse_direction(n);
        return a;
    }
    if (n.comp_x >= 0 && t.component(n.comp_x).dicritical && !n.is_corner()) {
        require_invariant();
        a.kind = Attachment::Kind::Curvet;
        a.component = n.comp_x;
        a.point = n.position;
        return a;
    }
    throw NotASeparatrix("branch ends at a regular point of an invariant component");
}

BranchDivisor balanced_equation(const ReductionTree& t, const std::vector<Branch>& adapt_to, int trunc) {
    std::vector<std::pair<Attachment, const Branch*>> adapted;
    for (const auto& b : adapt_to) {
        Attachment a = locate(t, b);
        bool dup = false;
        for (const auto& e : adapted) dup = dup || e.first.same_place(a);
        if (!dup) adapted.push_back({a, &b});
    }
    BranchDivisor f;
    for (const auto& s : separatrices(t, trunc)) {
        DivisorItem it{s.branch, 1, s.at, false};
        for (const auto& e : adapted)
            if (e.first.same_place(s.at)) {
                it.branch = *e.second;
                it.adapted = true;
            }
        f.items.push_back(it);
    }
    for (const auto& e : adapted) {
        if (e.first.kind != Attachment::Kind::Isolated) continue;
        bool found = false;
        for (const auto& it : f.items) found = found || it.at.same_place(e.first);
        if (!found) throw NotASeparatrix("branch does not match an isolated separatrix");
    }
    for (const auto& D : t.components()) {
        if (!D.dicritical) continue;
        int target = 2 - D.valence();
        std::vector<ChartPoint> zeros = curvet_points(t, D.id, std::max(0, target));
        std::vector<const Branch*> given(zeros.size(), nullptr);
        for (const auto& e : adapted) {
            if (e.first.kind != Attachment::Kind::Curvet || e.first.component != D.id) continue;
            auto pos = std::find(zeros.begin(), zeros.end(), e.first.point);
            if (pos == zeros.end()) {
                zeros.push_back(e.first.point);
                given.push_back(e.second);
            } else {
                given[pos - zeros.begin()] = e.second;
            }
        }
        int npoles = static_cast<int>(zeros.size()) - target;
        std::vector<ChartPoint> poles = curvet_points(t, D.id, npoles, zeros);
        for (size_t i = 0; i < zeros.size(); ++i) {
            Attachment a;
            a.kind = Attachment::Kind::Curvet;
            a.component = D.id;
            a.point = zeros[i];
            if (given[i]) f.items.push_back({*given[i], 1, a, true});
            else f.items.push_back({curvet(t, D.id, zeros[i], trunc), 1, a, false});
        }
        for (const auto& q : poles) {
            Attachment a;
            a.kind = Attachment::Kind::Curvet;
            a.component = D.id;
            a.point = q;
            f.items.push_back({curvet(t, D.id, q, trunc), -1, a, false});
        }
    }
    return f;
}

bool is_balanced(const ReductionTree& t, const BranchDivisor& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    std::vector<Attachment> places;
    for (const auto& it : f.items) {
        Attachment a;
        try {
            a = locate(t, it.branch);
        } catch (const NotASeparatrix& e) {
            return fail(std::string("item is not a separatrix: ") + e.what());
        }
        for (const auto& p : places)
            if (p.same_place(a)) return fail("branch repeated at " + a.str());
        places.push_back(a);
        if (a.kind == Attachment::Kind::Isolated && it.coeff != 1)
            return fail("isolated separatrix with coefficient " + std::to_string(it.coeff));
    }
    for (const auto& iso : isolated_places(t)) {
        bool found = false;
        for (const auto& p : places) found = found || p.same_place(iso);
        if (!found) return fail("missing isolated separatrix " + iso.str());
    }
    for (const auto& D : t.components()) {
        if (!D.dicritical) continue;
        int sum = 0;
        for (size_t i = 0; i < places.size(); ++i)
            if (places[i].kind == Attachment::Kind::Curvet && places[i].component == D.id) sum += f.items[i].coeff;
        if (sum != 2 - D.valence())
            return fail("curvet coefficients on D" + std::to_string(D.id) + " sum to " + std::to_string(sum));
    }
    return true;
}

int pure_multiplicity(const BranchDivisor& f) { return f.multiplicity() - 1; }

std::map<int, int> pure_valuations(const ReductionTree& t, const BranchDivisor& f) {
    std::vector<std::map<int, int>> mults;  // per item: node -> multiplicity of the strict transform
    for (const auto& it : f.items) {
        std::map<int, int> m;
        for (const auto& s : follow(t, it.branch).steps) m[s.node] = s.mult;
        mults.push_back(m);
    }
    std::map<int, int> out;
    for (const auto& D : t.components()) {
        const TreeNode& p = t.node(D.created_at);
        int nu_p = 0;
        for (size_t i = 0; i < f.items.size(); ++i) {
            auto pos = mults[i].find(p.id);
            if (pos != mults[i].end()) nu_p += f.items[i].coeff * pos->second;
        }
        int below = 0;
        for (int d : p.components()) {
            nu_p += t.component(d).epsilon();
            below += out.at(d);
        }
        out[D.id] = nu_p - 1 + (1 - D.epsilon()) + below;
    }
    return out;
}

std::map<int, int> divisor_valuations(const ReductionTree& t, const BranchDivisor& f, int trunc) {
    std::map<int, int> out;
    for (const auto& D : t.components()) {
        std::vector<ChartPoint> avoid;
        for (const auto& it : f.items) {
            BranchPath path = follow(t, it.branch);
            if (!path.ends_at_leaf && path.component == D.id) avoid.push_back(path.point);
        }
        Branch g = curvette(t, D.id, trunc, avoid);
        int v = 0;
        for (const auto& it : f.items) v += it.coeff * branch_intersection(g, it.branch);
        out[D.id] = v;
    }
    return out;
}

void annotate_pure_valuations(ReductionTree& t, const BranchDivisor& f) {
    for (const auto& [d, v] : pure_valuations(t, f)) t.component_mut(d).nu_star_D = v;
}

BranchDivisor blown_up_balanced(const ReductionTree& t, const BranchDivisor& f, const ChartPoint& q, int trunc) {
    BranchDivisor out;
    for (const auto& it : f.items) {
        StepResult s = step(it.branch.x(), it.branch.y(), 2);
        if (!(s.q == q)) continue;
        out.items.push_back({Branch(s.x, s.y, trunc, it.branch.formal()), it.coeff, {}, it.adapted});
    }
    if (!is_dicritical_first_blowup(t.germ())) {
        Branch E(PowerSeries::zero(PowerSeries::kExact), PowerSeries::monomial(Scalar(1), 1), trunc);
        out.items.push_back({E, 1, {}, false});
    }
    return out;
}

}  // namespace folpol
