#ifndef MINVERMA_GAP_HPP
#define MINVERMA_GAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "minverma/factored_poly.hpp"
#include "minverma/minpoly.hpp"
#include "minverma/multi_poly.hpp"
#include "minverma/root_system.hpp"
#include "minverma/trace_form.hpp"
#include "minverma/weight_system.hpp"

namespace minverma {

/// An extremal low weight of pi with respect to a simple root together with
/// the unique simple-root chain that connects it to the lowest weight.
struct ExtremalChain {
    int alpha = 0;                // target simple root index (gamma_K)
    VecQ weight;                  // the extremal low weight
    VecQ weight_prime;            // weight + alpha_K
    std::vector<int> gammas;      // gamma_1 .. gamma_K as simple indices
    std::vector<VecQ> chain;      // w_1 = lowest, ..., w_K = weight
};

/// All extremal low weights of pi with respect to alpha (at most three),
/// found as the minimal elements of the weights not orthogonal to alpha.
std::vector<ExtremalChain> extremal_low_weights(const WeightSystem& ws, int alpha);

/// The gap function r_{alpha, w_alpha}(lambda) as a signed product of
/// affine-linear factors, computed from the two products of its definition.
FactorProduct gap_function(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                           const ExtremalChain& chain);

enum class NonvanishingCriterion {
    ChainInTheta,
    Minuscule,
    MultiplicityFree,
    AdjointIrreducibleFiber,
    AdjointFallback,  // this candidate may vanish; another candidate works
    TypeATail,
    FiberIrreducible,
    None,
};

std::string to_string(NonvanishingCriterion c);

/// Which sufficient nonvanishing criterion applies to this candidate chain.
/// Every value except AdjointFallback and None asserts that the candidate's
/// own r is not identically zero; AdjointFallback asserts it for some other
/// candidate of the same alpha.
NonvanishingCriterion nonvanishing_criteria(const WeightSystem& ws, const ThetaSubset& ts,
                                            const ExtremalChain& chain);

struct GapCandidate {
    ExtremalChain chain;
    FactorProduct r;
    bool identically_zero = false;
    std::optional<Rational> value;  // r(lambda) when lambda was supplied
};

struct GapAlphaResult {
    int alpha = 0;
    std::vector<GapCandidate> candidates;
};

enum class GapVerdict { Certified, NotCertified, IdenticallyUncertifiable };

struct GapCertificate {
    std::vector<GapAlphaResult> alpha_results;
    GapVerdict verdict = GapVerdict::NotCertified;
    /// lambda_Theta + rho is dominant, upgrading a certified gap to the
    /// annihilator equality.
    bool annihilator_equality = false;
};

GapCertificate gap_certify(const WeightSystem& ws, const ThetaSubset& ts, const TraceForm& form,
                           const Assignment& lambda, Convention conv = Convention::Psi);

/// mu is dominant in the weak sense used throughout: 2<mu,a>/(a,a) is not a
/// negative integer for any positive root a.
bool weakly_dominant(const RootSystem& rs, const VecQ& mu);

struct GapExistence {
    bool dominant = false;  // lambda_Theta + rho weakly dominant (clause i context)
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
};

/// Conditions of the existence theorem on lambda_Theta; ii is a root-wise
/// orthogonality test, iii and iv compare finite dot-orbit sets.
GapExistence gapexist_check(const ThetaSubset& ts, const VecQ& lambda_theta,
                            unsigned long max_group = 200000);

// --- type-specific certification predicates -------------------------------

/// <lambda_Theta + rho, a> != 0 for every root a.
bool infinitesimal_char_regular(const RootSystem& rs, const VecQ& lambda_theta);

/// D_n: trivial stabilizer in the full signed-permutation group (including
/// odd sign changes).
bool strongly_regular_Dn(const RootSystem& rs, const VecQ& lambda_theta);

/// D_n auxiliary condition: <lambda_Theta + rho, 2 e_i> != 0 at the block
/// boundaries given by Theta.
bool dn_even_orthogonal_condition(const ThetaSubset& ts, const VecQ& lambda_theta);

struct PropEveryResult {
    bool certified = false;
    std::string clause;   // which clause/criterion decided
    std::string detail;
};

/// Dispatcher for the per-type certification predicates: natural
/// representations (gl/sl/sp/odd-orthogonal), the G2 7-dimensional
/// representation, D_n natural with its three Theta cases, and the
/// fundamental-representation families for E6/E7/E8/F4.
PropEveryResult prop_every_certify(const RootSystem& rs, const ThetaSubset& ts,
                                   const VecQ& lambda_theta);

/// iota and hat-alpha data for the E/F clauses (1-based simple index alpha).
int prop_every_iota(const RootSystem& rs, int alpha);
VecQ prop_every_alpha_hat(const RootSystem& rs, int alpha);
/// The condition that the first factors cannot vanish, per Theta-member alpha.
bool prop_every_exceptional_condition(const RootSystem& rs, const ThetaSubset& ts,
                                      const VecQ& lambda_theta);
/// The stronger sufficient interval condition.
bool prop_every_exceptional_sufficient(const RootSystem& rs, const ThetaSubset& ts,
                                       const VecQ& lambda_theta);

// --- gl_n block machinery --------------------------------------------------

/// bar-lambda coordinates: lambda_k + (nu - 1) - (n-1)/2 on block k.
std::vector<Rational> gln_bar_lambda(const std::vector<int>& blocks,
                                     const std::vector<Rational>& lambda);

/// Whether some in-block transposition of bar-lambda lies in the W(Theta)
/// orbit (brute force over the shuffle representatives).
bool gln_linkage_by_orbit(const std::vector<int>& blocks, const std::vector<Rational>& lambda);

/// The equivalent block-set condition on the Lambda_k = {bar lambda on block k}.
bool gln_linkage_by_sets(const std::vector<int>& blocks, const std::vector<Rational>& lambda);

// --- recursion closed forms -------------------------------------------------

/// Variable ids in the recursion polynomials.
inline constexpr int kRecT = 1;
inline int rec_mu(int nu) { return 1000 + nu; }
inline int rec_s(int nu) { return 2000 + nu; }

/// f(k, l) and g(k, l) from the two-term recursions.
MultiPoly recursion_f(int k, int l);
MultiPoly recursion_g(int k, int l);
/// Closed forms: f(l-1, l) and g(k, l) for k >= l.
MultiPoly recursion_f_closed(int l);
MultiPoly recursion_g_closed(int k, int l);

}  // namespace minverma

#endif
