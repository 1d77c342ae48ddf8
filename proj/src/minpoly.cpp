#include "minverma/minpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace minverma {

namespace {

/// Flip the sign of every lambda coefficient (the lambda -> -lambda
/// substitution used by the PsiPrime delegation).
LinearForm negate_lambda(const LinearForm& f) {
    LinearForm r(f.constant());
    for (const auto& [j, c] : f.coeffs()) r.set_coeff(j, -c);
    return r;
}

WeightSystem dual_weight_system(const WeightSystem& ws) {
    const RootSystem& rs = ws.root_system();
    return WeightSystem::build(rs, rs.dual_highest_weight(ws.highest()));
}

}  // namespace

LinearForm restriction_form(const ThetaSubset& ts, const TraceForm& form, const VecQ& w) {
    LinearForm f;
    for (int j : ts.free_vars())
        f.set_coeff(j, form.pair(ts.root_system().fundamental_weight(j), w));
    return f;
}

LinearForm root_form(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                     const VecQ& w) {
    LinearForm f = restriction_form(ts, form, w);
    f.set_constant(d_shift(ws, form, w));
    return f;
}

MinPolyResult global_min_poly(const WeightSystem& ws, const ThetaSubset& ts,
                              const TraceForm& form, Convention conv) {
    if (conv == Convention::PsiPrime) {
        WeightSystem dual = dual_weight_system(ws);
        MinPolyResult r = global_min_poly(dual, ts, form, Convention::Psi);
        MinPolyResult out;
        out.convention = Convention::PsiPrime;
        for (const auto& [w, f] : r.entries) out.entries.emplace_back(w, negate_lambda(f));
        for (const auto& [w, f] : out.entries)
            if (out.q.factors().count(f) == 0) out.q.add_factor(f);
        out.squarefree_symbolic = (out.q.degree() == out.entries.size());
        return out;
    }
    MinPolyResult out;
    out.convention = Convention::Psi;
    BranchingResult br = branch_to_levi(ws, ts);
    for (const auto& c : br.components) {
        LinearForm f = root_form(ws, ts, form, c.lowest);
        out.entries.emplace_back(c.lowest, f);
    }
    for (const auto& [w, f] : out.entries)
        if (out.q.factors().count(f) == 0) out.q.add_factor(f);
    out.squarefree_symbolic = (out.q.degree() == out.entries.size());
    return out;
}

MinPolyAt min_poly_at(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                      const MinPolyResult& mp, const Assignment& lambda) {
    const RootSystem& rs = ws.root_system();
    MinPolyAt out;
    out.roots = mp.q.eval_at(lambda);
    out.minimal = true;
    {
        std::set<Rational> distinct;
        for (const auto& [v, m] : out.roots) distinct.insert(v);
        out.minimal = (distinct.size() == mp.q.degree());
    }

    // Weyl-dot linkage partition of the component lowest weights at this
    // lambda: w ~ w' iff lambda_Theta - w and lambda_Theta - w' are in one
    // dot orbit. In the PsiPrime delegation the entries are dual-side data
    // and lambda enters negated, with the dot shift using the dual rho = rho.
    Assignment lam = lambda;
    if (mp.convention == Convention::PsiPrime)
        for (auto& [j, v] : lam) v = -v;
    VecQ lambda_theta = ts.lambda_theta(lam);

    std::vector<std::pair<VecQ, VecQ>> keyed;  // (dominant key of lambda_Theta - w + rho, w)
    for (const auto& [w, f] : mp.entries)
        keyed.emplace_back(rs.dominant_rep(lambda_theta - w + rs.rho()), w);

    std::map<VecQ, std::vector<VecQ>> parts;
    std::map<VecQ, std::vector<Rational>> values;
    for (size_t i = 0; i < keyed.size(); ++i) {
        parts[keyed[i].first].push_back(keyed[i].second);
        values[keyed[i].first].push_back(mp.entries[i].second.eval(lambda));
    }

    for (auto& [key, members] : parts) {
        LinkageClass cls;
        const auto& vals = values.at(key);
        cls.value = vals.front();
        for (const auto& v : vals)
            if (v != cls.value)
                throw std::logic_error("root value not constant on a linkage class");
        // Longest strictly increasing chain of restrictions. Members are
        // topologically ordered by the free-coordinate level (a <_Theta b
        // implies a strictly smaller level), so the DP only looks backwards.
        const VecQ base = members.front();
        auto level = [&](const VecQ& w) {
            auto c = *rs.simple_coords(w - base);
            Rational s(0);
            for (int j : ts.free_vars())
                if (j <= rs.rank()) s += c[j - 1];
            return s;
        };
        std::sort(members.begin(), members.end(), [&](const VecQ& a, const VecQ& b) {
            Rational la = level(a), lb = level(b);
            if (la != lb) return la < lb;
            return a < b;
        });
        const size_t n = members.size();
        std::vector<unsigned> best(n, 1);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < i; ++j)
                if (ts.lt_theta(members[j], members[i])) best[i] = std::max(best[i], best[j] + 1);
        cls.kappa = *std::max_element(best.begin(), best.end());
        cls.weights = members;
        out.classes.push_back(std::move(cls));
    }
    for (const auto& cls : out.classes) out.annihilator[cls.value] += cls.kappa;
    return out;
}

FactoredPoly tau_min_poly(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                          const std::vector<int>& tau, Convention conv) {
    const RootSystem& rs = ws.root_system();
    const int r = rs.rank();
    if (static_cast<int>(tau.size()) != r + 1)
        throw std::invalid_argument("tau must map each simple index (1-based array)");
    // tau must be a diagram automorphism preserving Theta.
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            if (dot(rs.simple_root(i), rs.simple_root(j)) !=
                dot(rs.simple_root(tau[i]), rs.simple_root(tau[j])))
                throw std::invalid_argument("tau is not a diagram automorphism");
    for (int i : ts.indices())
        if (!ts.contains(tau[i])) throw std::invalid_argument("tau does not preserve Theta");

    // variable identification: free index j -> smallest member of its tau-orbit
    std::map<int, int> orbit_min;
    for (int j : ts.free_vars()) {
        if (j > r) {
            orbit_min[j] = j;  // the center is tau-fixed
            continue;
        }
        int m = j, cur = tau[j];
        while (cur != j) {
            m = std::min(m, cur);
            cur = tau[cur];
        }
        orbit_min[j] = m;
    }

    MinPolyResult mp = global_min_poly(ws, ts, form, conv);
    FactoredPoly out;
    std::set<LinearForm> seen;
    for (const auto& [w, f] : mp.entries) {
        LinearForm merged(f.constant());
        for (const auto& [j, c] : f.coeffs()) {
            int m = orbit_min.at(j);
            merged.set_coeff(m, merged.coeff(m) + c);
        }
        if (seen.insert(merged).second) out.add_factor(merged);
    }
    return out;
}

std::vector<CharPolyFactor> char_poly(const WeightSystem& ws, const TraceForm& form) {
    const VecQ& hw = ws.highest();
    const Rational top = form.casimir(hw);
    std::vector<CharPolyFactor> out;
    for (const auto& w : ws.weights())
        out.push_back({w, (top - form.pair(w, w)) / Rational(2)});
    return out;
}

ClassicalLimit classical_limit(const WeightSystem& ws, const ThetaSubset& ts,
                               const TraceForm& form, Convention conv) {
    MinPolyResult mp = global_min_poly(ws, ts, form, conv);
    std::set<LinearForm> restrictions;
    for (const auto& [w, f] : mp.entries) {
        LinearForm mu = f;
        mu.set_constant(Rational(0));
        restrictions.insert(mu);
    }
    ClassicalLimit out;
    for (const auto& mu : restrictions) out.qbar.add_factor(mu);
    for (const auto& mu : restrictions)
        for (const auto& nu : restrictions)
            if (mu != nu) out.rbar.mul_form(mu - nu);
    return out;
}

FactoredPoly specialized_min_poly(const WeightSystem& ws, const ThetaSubset& ts,
                                  const TraceForm& form, SpecialKind kind, Convention conv) {
    const RootSystem& rs = ws.root_system();
    if (conv == Convention::PsiPrime) {
        WeightSystem dual = dual_weight_system(ws);
        FactoredPoly q = specialized_min_poly(dual, ts, form, kind, Convention::Psi);
        FactoredPoly out;
        for (const auto& [f, m] : q.factors()) out.add_factor(negate_lambda(f), m);
        return out;
    }
    switch (kind) {
        case SpecialKind::MultiplicityFree: {
            if (!ws.is_multiplicity_free())
                throw std::invalid_argument("representation is not multiplicity free");
            std::map<VecQ, std::vector<VecQ>> fibers;
            for (const auto& w : ws.weights()) fibers[ts.restriction_key(w)].push_back(w);
            FactoredPoly out;
            std::set<LinearForm> seen;
            for (const auto& [key, members] : fibers) {
                const VecQ* low = nullptr;
                for (const auto& w : members) {
                    bool minimal = true;
                    for (const auto& v : members)
                        if (v != w && ws.leq(v, w)) {
                            minimal = false;
                            break;
                        }
                    if (minimal) {
                        if (low)
                            throw std::logic_error("restriction fiber has two minimal weights");
                        low = &w;
                    }
                }
                LinearForm f = root_form(ws, ts, form, *low);
                if (seen.insert(f).second) out.add_factor(f);
            }
            return out;
        }
        case SpecialKind::Adjoint: {
            if (!ws.is_adjoint()) throw std::invalid_argument("representation is not adjoint");
            if (form.pair(rs.highest_root(),
                          rs.highest_root() + Rational(2) * rs.rho()) != Rational(1))
                throw std::invalid_argument("adjoint closed form needs the Killing normalization");
            if (ts.indices().empty())
                throw std::invalid_argument("adjoint closed form requires nonempty Theta");
            AdjointLeviDecomposition dec = levi_decompose_adjoint(rs, ts);
            FactoredPoly out;
            std::set<LinearForm> seen;
            auto push = [&](const LinearForm& f) {
                if (seen.insert(f).second) out.add_factor(f);
            };
            push(LinearForm(Rational(1, 2)));
            // per-component constants B(a_max^i, a_max^i + 2 rho(Theta_i)), as a set
            for (const auto& comp : dec.zero_components) {
                std::vector<VecQ> comp_pos;
                for (const auto& root : ts.levi_positive_roots()) {
                    auto c = *rs.simple_coords(root);
                    bool in = true;
                    for (int i = 1; i <= rs.rank(); ++i)
                        if (!c[i - 1].is_zero() &&
                            std::find(comp.begin(), comp.end(), i) == comp.end())
                            in = false;
                    if (in) comp_pos.push_back(root);
                }
                VecQ rho_i(rs.ambient_dim(), Rational(0));
                const VecQ* amax = nullptr;
                Rational best(-1);
                for (const auto& root : comp_pos) {
                    rho_i = rho_i + root;
                    auto c = *rs.simple_coords(root);
                    Rational h(0);
                    for (int i = 1; i <= rs.rank(); ++i) h += c[i - 1];
                    if (h > best) {
                        best = h;
                        amax = &root;
                    }
                }
                Rational ci = form.pair(*amax, *amax + rho_i);  // rho_i holds 2 rho(Theta_i)
                push(LinearForm((Rational(1) - ci) / Rational(2)));
            }
            for (const auto& fib : dec.nonzero_fibers) {
                const VecQ& am = fib.lowest;
                LinearForm f = restriction_form(ts, form, am);
                f.set_constant(form.pair(rs.rho(), am) +
                               (Rational(1) - form.pair(am, am)) / Rational(2));
                push(f);
            }
            return out;
        }
        case SpecialKind::Minuscule: {
            if (!ws.is_minuscule()) throw std::invalid_argument("representation is not minuscule");
            FactoredPoly out;
            std::set<LinearForm> seen;
            const VecQ shift = rs.rho() - Rational(2) * ts.rho_levi();
            const Rational cpi = form.pair(rs.rho(), ws.highest());
            for (const auto& h : ws.levi_decompose_minuscule(ts)) {
                LinearForm f = restriction_form(ts, form, h);
                f.set_constant(form.pair(shift, h) + cpi);
                if (seen.insert(f).second) out.add_factor(f);
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

MultiPoly power_sum(const WeightSystem& ws, unsigned k) {
    MultiPoly total;
    for (const auto& [w, m] : ws.multiplicities()) {
        LinearForm lf;
        for (size_t i = 0; i < w.size(); ++i) lf.set_coeff(static_cast<int>(i) + 1, w[i]);
        total += Rational(m) * MultiPoly(lf).pow(k);
    }
    return total;
}

}  // namespace minverma
