#include "minverma/branching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minverma {

BranchingResult branch_to_levi(const WeightSystem& ws, const ThetaSubset& ts) {
    const RootSystem& rs = ws.root_system();
    // Residual multiplicities on the Theta-dominant weights, peeled in
    // ascending level order (levels only grow along the Theta-dominance
    // order, so maximal components are consumed first).
    std::map<VecQ, long> residual;
    std::vector<VecQ> order;  // Theta-dominant weights in canonical (level) order
    for (const auto& w : ws.weights()) {
        if (ts.is_theta_dominant(w)) {
            residual[w] = ws.mult(w);
            order.push_back(w);
        }
    }
    BranchingResult out;
    out.total_dim = 0;
    for (const auto& h : order) {
        long c = residual.at(h);
        if (c == 0) continue;
        if (c < 0) throw std::logic_error("branching peel produced a negative residual");
        WeightSystem comp = WeightSystem::build_levi(rs, ts, h);
        for (const auto& [w, m] : comp.multiplicities()) {
            auto it = residual.find(w);
            if (it == residual.end()) {
                if (ts.is_theta_dominant(w))
                    throw std::logic_error("branching peel left the weight support");
                continue;
            }
            it->second -= c * m;
        }
        BranchingComponent bc;
        bc.highest = h;
        bc.lowest = comp.lowest();
        bc.count = c;
        bc.levi_dim = comp.dim();
        out.total_dim += bc.levi_dim * c;
        out.components.push_back(std::move(bc));
    }
    for (const auto& [w, m] : residual)
        if (m != 0) throw std::logic_error("branching peel left a nonzero residual");
    if (out.total_dim != ws.dim())
        throw std::logic_error("branching dimension bookkeeping failed");
    std::sort(out.components.begin(), out.components.end(),
              [](const BranchingComponent& a, const BranchingComponent& b) {
                  return a.lowest < b.lowest;
              });
    return out;
}

long levi_lowest_count_alternating(const WeightSystem& ws, const ThetaSubset& ts, const VecQ& w,
                                   unsigned long max_subgroup) {
    if (!ts.is_theta_antidominant(w))
        throw std::invalid_argument("alternating count requires a Theta-antidominant weight");
    const RootSystem& rs = ws.root_system();
    // Count components with lowest weight w: sum over W_Theta of
    // sign(u) m_pi(u(w - rho(Theta)) + rho(Theta)).
    Rational total(0);
    for (const auto& word : ts.enumerate_weyl_subgroup(max_subgroup)) {
        VecQ img = rs.apply_word(word, w - ts.rho_levi()) + ts.rho_levi();
        long sign = (word.size() % 2 == 0) ? 1 : -1;
        total += Rational(sign * ws.mult(img));
    }
    if (!total.is_integer()) throw std::logic_error("alternating sum not an integer");
    return total.to_long();
}

std::vector<TensorComponent> klimyk_tensor(const WeightSystem& a, const VecQ& Lambda) {
    const RootSystem& rs = a.root_system();
    for (int i = 1; i <= rs.rank(); ++i) {
        Rational p = rs.coroot_pairing(Lambda, i);
        if (!p.is_integer() || p.sign() < 0)
            throw std::invalid_argument("klimyk_tensor: Lambda not dominant integral");
    }
    std::map<VecQ, long> acc;
    for (const auto& [w, m] : a.multiplicities()) {
        VecQ v = Lambda + w + rs.rho();
        WeylWord word;
        VecQ dom = rs.dominant_rep(v, &word);
        bool singular = false;
        for (int i = 1; i <= rs.rank(); ++i)
            if (dot(dom, rs.simple_root(i)).is_zero()) {
                singular = true;
                break;
            }
        if (singular) continue;
        long sign = (word.size() % 2 == 0) ? 1 : -1;
        acc[dom - rs.rho()] += sign * m;
    }
    std::vector<TensorComponent> out;
    for (const auto& [h, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::logic_error("klimyk cancellation produced a negative multiplicity");
        out.push_back({h, m});
    }
    return out;
}

std::vector<TensorComponent> tensor_by_levi_counts(const WeightSystem& dual_ws,
                                                   const ThetaSubset& ts, const VecQ& Lambda) {
    for (int i : ts.indices())
        if (!dot(Lambda, ts.root_system().simple_root(i)).is_zero())
            throw std::invalid_argument("parabolic character requires <Lambda, Theta> = 0");
    BranchingResult br = branch_to_levi(dual_ws, ts);
    std::map<VecQ, long> acc;
    for (const auto& c : br.components) acc[Lambda + c.highest] += c.count;
    std::vector<TensorComponent> out;
    for (const auto& [h, m] : acc) out.push_back({h, m});
    return out;
}

bool eigenvalue_hypotheses_hold(const RootSystem& rs, const ThetaSubset& ts,
                                const BranchingResult& dual_branch, const VecQ& Lambda) {
    for (int i : ts.indices())
        if (!dot(Lambda, rs.simple_root(i)).is_zero()) return false;
    for (const auto& c : dual_branch.components) {
        for (int j = 1; j <= rs.rank(); ++j) {
            if (ts.contains(j)) continue;
            if (dot(Lambda + c.highest, rs.simple_root(j)).sign() < 0) return false;
        }
    }
    return true;
}

Rational d_shift(const WeightSystem& ws, const TraceForm& form, const VecQ& w) {
    if (!ws.has_weight(w)) throw std::invalid_argument("d_shift: not a weight of pi");
    const VecQ& low = ws.lowest();
    const VecQ two_rho = Rational(2) * ws.root_system().rho();
    return form.pair(low - w, low + w - two_rho) / Rational(2);
}

std::set<Rational> eigenvalue_set(const WeightSystem& ws, const ThetaSubset& ts,
                                  const TraceForm& form, const VecQ& Lambda) {
    std::set<Rational> vals;
    for (const auto& c : branch_to_levi(ws, ts).components)
        vals.insert(form.pair(Lambda, c.lowest) + d_shift(ws, form, c.lowest));
    return vals;
}

std::set<Rational> eigenvalue_set_dual(const WeightSystem& dual_ws, const ThetaSubset& ts,
                                       const TraceForm& form, const VecQ& Lambda) {
    const VecQ& hw = dual_ws.highest();
    const VecQ two_rho = Rational(2) * dual_ws.root_system().rho();
    std::set<Rational> vals;
    for (const auto& c : branch_to_levi(dual_ws, ts).components) {
        const VecQ& w = c.highest;
        vals.insert(-form.pair(Lambda, w) + form.pair(hw - w, hw + w + two_rho) / Rational(2));
    }
    return vals;
}

}  // namespace minverma
