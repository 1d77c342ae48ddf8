#ifndef MINVERMA_BRANCHING_HPP
#define MINVERMA_BRANCHING_HPP

#include <gmpxx.h>

#include <set>
#include <vector>

#include "minverma/rational.hpp"
#include "minverma/root_system.hpp"
#include "minverma/trace_form.hpp"
#include "minverma/weight_system.hpp"

namespace minverma {

/// One isomorphism class of irreducible g_Theta-summands of pi restricted to
/// the Levi.
struct BranchingComponent {
    VecQ highest;       // Theta-dominant highest weight
    VecQ lowest;        // Theta-antidominant lowest weight
    long count = 0;     // how many isomorphic copies occur
    mpz_class levi_dim; // dimension of one copy
};

struct BranchingResult {
    std::vector<BranchingComponent> components;  // sorted by lowest weight
    mpz_class total_dim;                         // sum count * levi_dim

    /// The lowest weights (the components' Theta-antidominant extremes),
    /// without counts.
    std::vector<VecQ> lowest_weights() const {
        std::vector<VecQ> v;
        v.reserve(components.size());
        for (const auto& c : components) v.push_back(c.lowest);
        return v;
    }
    std::vector<VecQ> highest_weights() const {
        std::vector<VecQ> v;
        v.reserve(components.size());
        for (const auto& c : components) v.push_back(c.highest);
        return v;
    }
    bool has_lowest(const VecQ& w) const {
        for (const auto& c : components)
            if (c.lowest == w) return true;
        return false;
    }
};

/// Restriction of pi to the Levi g_Theta by iterative highest-weight peeling:
/// walk the Theta-dominant weights downward, read off residual multiplicities
/// as component counts, subtract the component's own weight multiplicities.
/// Sum count x dim is checked against dim pi.
BranchingResult branch_to_levi(const WeightSystem& ws, const ThetaSubset& ts);

/// Independent small-scale oracle: component count with lowest weight w via
/// the alternating W_Theta character sum. Guarded by the subgroup size.
long levi_lowest_count_alternating(const WeightSystem& ws, const ThetaSubset& ts, const VecQ& w,
                                   unsigned long max_subgroup = 100000);

struct TensorComponent {
    VecQ highest;
    long mult = 0;
};

/// Tensor product decomposition V_a (x) V_Lambda by the signed dominant-
/// representative cancellation over the weights of V_a. Singular terms
/// (Lambda + w + rho on a wall) drop out.
std::vector<TensorComponent> klimyk_tensor(const WeightSystem& a, const VecQ& Lambda);

/// The same decomposition through the parabolic character identity: when
/// <Lambda, alpha> = 0 on Theta, chi_{pi*} chi_Lambda = sum over the Theta-
/// highest weights w of pi* of (component count) chi_{Lambda + w}.
/// dual_ws must be the weight system of pi*.
std::vector<TensorComponent> tensor_by_levi_counts(const WeightSystem& dual_ws,
                                                   const ThetaSubset& ts, const VecQ& Lambda);

/// Hypotheses for the eigenvalue description: <Lambda, alpha> = 0 for alpha
/// in Theta, and <Lambda + w, alpha> >= 0 for w in W_Theta(pi*) and simple
/// alpha outside Theta. dual_branch = branching of pi*.
bool eigenvalue_hypotheses_hold(const RootSystem& rs, const ThetaSubset& ts,
                                const BranchingResult& dual_branch, const VecQ& Lambda);

/// Eigenvalue set {<Lambda, w> + D_pi(w) : w lowest weight of pi|_{g_Theta}}.
std::set<Rational> eigenvalue_set(const WeightSystem& ws, const ThetaSubset& ts,
                                  const TraceForm& form, const VecQ& Lambda);

/// The equal set computed from the dual side:
/// {-<Lambda, w> + (1/2)<pi* - w, pi* + w + 2 rho> : w in W_Theta(pi*)}.
std::set<Rational> eigenvalue_set_dual(const WeightSystem& dual_ws, const ThetaSubset& ts,
                                       const TraceForm& form, const VecQ& Lambda);

/// D_pi(w) = (1/2) <lowest - w, lowest + w - 2 rho>.
Rational d_shift(const WeightSystem& ws, const TraceForm& form, const VecQ& w);

}  // namespace minverma

#endif
