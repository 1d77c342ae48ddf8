#ifndef MINVERMA_MINPOLY_HPP
#define MINVERMA_MINPOLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "minverma/branching.hpp"
#include "minverma/factored_poly.hpp"
#include "minverma/multi_poly.hpp"
#include "minverma/root_system.hpp"
#include "minverma/trace_form.hpp"
#include "minverma/weight_system.hpp"

namespace minverma {

/// Which fundamental system the published data uses. Psi is the fixed
/// engine convention. PsiPrime computes against the negated system: the
/// engine delegates to the contragredient representation and flips the sign
/// of every lambda coefficient, which is the same thing.
enum class Convention { Psi, PsiPrime };

struct MinPolyResult {
    /// Deduplicated product: one factor per distinct (mu, C) pair.
    FactoredPoly q;
    /// Root forms before deduplication together with the weight that
    /// produced each (Psi: the Theta-lowest weights; PsiPrime: the dual-side
    /// Theta-lowest weights, i.e. the negatives of the Theta-highest weights
    /// of pi). The forms are already in user-facing lambda coordinates.
    std::vector<std::pair<VecQ, LinearForm>> entries;
    bool squarefree_symbolic = false;
    Convention convention = Convention::Psi;
};

/// The global annihilating polynomial q_{pi,Theta}(x; lambda):
/// factors x - <lambda_Theta, w> - D_pi(w) over the component lowest weights.
MinPolyResult global_min_poly(const WeightSystem& ws, const ThetaSubset& ts,
                              const TraceForm& form, Convention conv = Convention::Psi);

struct LinkageClass {
    std::vector<VecQ> weights;  // members of the class
    Rational value;             // common root value at lambda
    unsigned kappa = 0;         // longest strict chain of restrictions
};

struct MinPolyAt {
    std::map<Rational, unsigned> roots;  // roots of q at lambda with multiplicity
    bool minimal = false;                // all roots simple: certified minimal
    std::vector<LinkageClass> classes;   // partition by Weyl-dot linkage
    std::map<Rational, unsigned> annihilator;  // value -> kappa exponent
};

MinPolyAt min_poly_at(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                      const MinPolyResult& mp, const Assignment& lambda);

/// Variant for a diagram automorphism tau with tau(Theta) = Theta: lambda
/// coordinates are identified along tau-orbits (variable index = smallest
/// orbit member) and the factor set deduplicated on the restricted data.
FactoredPoly tau_min_poly(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                          const std::vector<int>& tau, Convention conv = Convention::Psi);

struct CharPolyFactor {
    VecQ weight;
    Rational constant;  // (<pi, pi+2rho> - <w, w>) / 2
};

/// Characteristic polynomial factors, one per distinct weight.
std::vector<CharPolyFactor> char_poly(const WeightSystem& ws, const TraceForm& form);

inline Rational casimir_eigenvalue(const TraceForm& form, const VecQ& mu) {
    return form.casimir(mu);
}

struct ClassicalLimit {
    FactoredPoly qbar;   // prod (x - mu(lambda)) over distinct restrictions
    FactorProduct rbar;  // prod over ordered pairs of distinct restrictions
};

ClassicalLimit classical_limit(const WeightSystem& ws, const ThetaSubset& ts,
                               const TraceForm& form, Convention conv = Convention::Psi);

enum class SpecialKind { MultiplicityFree, Adjoint, Minuscule };

/// Closed forms for the three special representation classes; exact
/// agreement with global_min_poly is the module's main cross-validation.
FactoredPoly specialized_min_poly(const WeightSystem& ws, const ThetaSubset& ts,
                                  const TraceForm& form, SpecialKind kind,
                                  Convention conv = Convention::Psi);

/// T^(k) = sum m(w) w^k as a polynomial in the epsilon variables
/// (variable index i = epsilon_i, 1-based).
MultiPoly power_sum(const WeightSystem& ws, unsigned k);

/// The lambda linear form <lambda_Theta, w> in the given trace form:
/// coefficient <Lambda_j, w> on each free variable j.
LinearForm restriction_form(const ThetaSubset& ts, const TraceForm& form, const VecQ& w);

/// Root form <lambda_Theta, w> + D_pi(w) for a component lowest weight.
LinearForm root_form(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                     const VecQ& w);

}  // namespace minverma

#endif
