#pragma once
#include <string>
#include <vector>

#include "folpol/polar.hpp"

namespace laws {

// Branch-wise checks of the polar blow-up law (foliation and differential) and of the
// var drop along the first blow-up. Returns the failures.
inline std::vector<std::string> first_blowup_laws(const folpol::ReductionTree& t) {
    using namespace folpol;
    const OneForm& w = t.germ();
    int tau = tangency_excess(t);
    CurveSelection all;
    all.all_zeros = true;
    return with_instance(t, all, [&](const LocalInstance& in) {
        std::vector<std::string> bad;
        const BranchDivisor& f = in.f;
        for (int k : f.zeros()) {
            const Branch& B = f.items[k].branch;
            BranchStep s = blow_up_param(B.x(), B.y());
            int nu_q = s.y.known_zero() ? s.x.order(2) : s.x.known_zero() ? s.y.order(2) : std::min(s.x.order(2), s.y.order(2));
            std::string tag = "item " + std::to_string(k) + " at " + s.q.str();

            int lhs = polar_intersection(pull_back(w, s.q), s.x, s.y);
            if (lhs != polar_intersection(w, B) + nu_q) bad.push_back("polar law (foliation) " + tag);

            // pi^* dF: transforms through q plus nu(F) E
            BranchDivisor local;
            int kq = -1;
            for (size_t i = 0; i < f.items.size(); ++i) {
                BranchStep si = blow_up_param(f.items[i].branch.x(), f.items[i].branch.y());
                if (!(si.q == s.q)) continue;
                if (static_cast<int>(i) == k) kq = static_cast<int>(local.items.size());
                local.items.push_back({Branch(si.x, si.y, in.trunc), f.items[i].coeff, {}, false});
            }
            if (f.multiplicity() != 0)
                local.items.push_back({Branch(PowerSeries::zero(PowerSeries::kExact),
                                              PowerSeries::monomial(Scalar(1), 1), in.trunc),
                                       f.multiplicity(), {}, false});
            if (polar_of_divisor(local, kq) != polar_of_divisor(f, k) + nu_q)
                bad.push_back("polar law (differential) " + tag);

            // var drop
            int child = t.empty() ? -1 : t.child_at(0, s.q);
            OneForm wq = child >= 0 ? t.node(child).germ : blow_up_data(w, s.q).form;
            BranchDivisor fq = blown_up_balanced(t, f, s.q, in.trunc);
            int var_q = polar_intersection(wq, s.x, s.y) - polar_of_divisor(fq, kq);
            if (var_branch(w, f, k) - var_q != tau * B.mult()) bad.push_back("var drop " + tag);
        }
        return bad;
    });
}

}  // namespace laws
