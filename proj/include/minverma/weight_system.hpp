#ifndef MINVERMA_WEIGHT_SYSTEM_HPP
#define MINVERMA_WEIGHT_SYSTEM_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "minverma/root_system.hpp"
#include "minverma/vec.hpp"

namespace minverma {

/// Weyl dimension formula for the subsystem described by (positive roots,
/// half-sum rho_sub): prod (highest + rho, a) / (rho, a).
mpz_class weyl_dimension(const std::vector<VecQ>& positive, const VecQ& rho_sub,
                         const VecQ& highest);

/// Weight multiplicity map of an irreducible finite dimensional module,
/// either of the full algebra or of a Levi subalgebra g_Theta. Multiplicities
/// come from Freudenthal's recursion on dominant weights, spread over orbits;
/// the dimension is cross-checked against the Weyl formula at build time.
class WeightSystem {
public:
    static WeightSystem build(const RootSystem& rs, const VecQ& highest);
    /// Module of the Levi g_Theta with Theta-dominant integral highest weight.
    static WeightSystem build_levi(const RootSystem& rs, const ThetaSubset& ts,
                                   const VecQ& highest);

    const RootSystem& root_system() const { return *rs_; }
    const VecQ& highest() const { return highest_; }
    const VecQ& lowest() const { return lowest_; }
    const mpz_class& dim() const { return dim_; }
    const std::map<VecQ, long>& multiplicities() const { return mult_; }

    long mult(const VecQ& w) const {
        auto it = mult_.find(w);
        return it == mult_.end() ? 0 : it->second;
    }
    bool has_weight(const VecQ& w) const { return mult_.count(w) != 0; }

    /// Order of Definition-of-weights type: b - a in R_+ of the governing
    /// subsystem. For a full system this is the usual dominance order.
    bool leq(const VecQ& a, const VecQ& b) const;

    /// Weights in canonical order (ascending level, then coordinates).
    const std::vector<VecQ>& weights() const { return order_; }

    bool is_multiplicity_free() const;
    /// Full-system only: the representation is the adjoint one.
    bool is_adjoint() const;

    /// The unique dominant weight with all positive-coroot pairings in {0,1}.
    VecQ dominant_minuscule_weight() const;
    /// Highest weight is dominant minuscule (single Weyl orbit of weights).
    bool is_minuscule() const;

    /// Covering edges w -> w + alpha_i of the weight poset, as
    /// (lower, simple index) pairs in canonical order.
    std::vector<std::pair<VecQ, int>> poset_edges() const;

    /// Decomposition of a minuscule representation under the Levi g_Theta:
    /// the highest weights of the (pairwise non-isomorphic, multiplicity one)
    /// components, grouped by restriction fiber.
    std::vector<VecQ> levi_decompose_minuscule(const ThetaSubset& ts) const;

private:
    const RootSystem* rs_ = nullptr;
    bool levi_ = false;
    std::vector<int> sub_simple_;      // governing simple indices (1..rank or Theta)
    std::vector<VecQ> sub_positive_;   // governing positive roots
    VecQ sub_rho_;
    VecQ highest_, lowest_;
    mpz_class dim_ = 0;
    std::map<VecQ, long> mult_;
    std::vector<VecQ> order_;

    static WeightSystem build_impl(const RootSystem& rs, std::vector<int> simple_idx,
                                   std::vector<VecQ> positive, VecQ rho_sub, const VecQ& highest,
                                   bool levi);
};

/// Adjoint decomposition data of Proposition-of-free type ii): the fibers of
/// the root projection onto the free coordinates.
struct AdjointLeviFiber {
    std::vector<Rational> m;   // projection value (coeffs on free simple roots)
    std::vector<VecQ> roots;   // roots in the fiber (sorted)
    VecQ lowest;               // the <=-smallest root of the fiber
};

struct AdjointLeviDecomposition {
    std::vector<AdjointLeviFiber> nonzero_fibers;  // m != 0, canonical order
    std::vector<std::vector<int>> zero_components; // Theta components (m_Theta_i)
    int trivial_count = 0;                         // dim a_Theta
};

AdjointLeviDecomposition levi_decompose_adjoint(const RootSystem& rs, const ThetaSubset& ts);

}  // namespace minverma

#endif
