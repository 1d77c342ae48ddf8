#ifndef MINVERMA_ROOT_SYSTEM_HPP
#define MINVERMA_ROOT_SYSTEM_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minverma/linear_form.hpp"
#include "minverma/vec.hpp"

namespace minverma {

enum class Family { A, B, C, D, E, F, G, GL };

/// A Weyl group element as a word over simple reflections; the word [i1,...,ik]
/// acts as w_{i1} o ... o w_{ik} (the last letter acts first). Words need not
/// be reduced; equality of elements is tested through the action on rho.
using WeylWord = std::vector<int>;

/// Root system of a simple type A-G or of the reductive gl_n, realized in
/// epsilon coordinates. Simple roots are 1-indexed following the standard
/// numbering used throughout (A/B/C/D chains; E/F/G as in their diagrams).
class RootSystem {
public:
    /// Labels: "A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2", "gl4".
    static RootSystem build(const std::string& label);
    static RootSystem build(Family f, int n);

    Family family() const { return family_; }
    /// Type parameter: the subscript (A_{n}: n, B_n: n, ..., gl_n: n).
    int type_param() const { return n_; }
    std::string label() const;

    /// Number of simple roots.
    int rank() const { return static_cast<int>(simple_.size()); }
    int ambient_dim() const { return dim_; }

    bool has_center() const { return family_ == Family::GL; }
    /// Lambda-variable index of the center coordinate (gl only): rank()+1.
    int center_var() const { return rank() + 1; }

    const VecQ& simple_root(int i) const { return simple_.at(i - 1); }
    const std::vector<VecQ>& simple_roots() const { return simple_; }
    const std::vector<VecQ>& positive_roots() const { return positive_; }
    bool is_root(const VecQ& v) const { return root_set_.count(v) != 0; }
    bool is_positive_root(const VecQ& v) const;

    const VecQ& rho() const { return rho_; }

    /// Fundamental weight Lambda_i, 1 <= i <= rank(); for gl_n additionally
    /// i == rank()+1 yields the center weight e_1 + ... + e_n.
    const VecQ& fundamental_weight(int i) const;

    /// Highest root and its marks (coefficients on the simple roots).
    const VecQ& highest_root() const { return highest_root_; }
    std::vector<long> marks() const;
    /// Marks of the highest root of the dual root system (the criterion used
    /// for minuscule fundamental weights).
    std::vector<long> dual_marks() const;

    const mpz_class& weyl_order() const { return weyl_order_; }
    const WeylWord& longest_word() const { return longest_word_; }

    /// 2 (v, alpha_i) / (alpha_i, alpha_i).
    Rational coroot_pairing(const VecQ& v, int i) const;
    Rational coroot_pairing_root(const VecQ& v, const VecQ& alpha) const;

    /// Reflection in an arbitrary root (checked): w_alpha(mu).
    VecQ reflect(const VecQ& alpha, const VecQ& mu) const;
    VecQ simple_reflect(int i, const VecQ& mu) const;
    VecQ apply_word(const WeylWord& w, VecQ mu) const;
    VecQ apply_word_inverse(const WeylWord& w, VecQ mu) const;
    /// rho-shifted (dot) action: w.mu = w(mu + rho) - rho.
    VecQ dot_action(const WeylWord& w, const VecQ& mu) const;

    bool is_dominant(const VecQ& v) const;
    /// Unique dominant element of the W-orbit; optionally the word mapping
    /// it back to v (v = apply_word(*word, dominant)).
    VecQ dominant_rep(VecQ v, WeylWord* word = nullptr) const;
    /// Exact same-W-orbit test.
    bool same_orbit(const VecQ& a, const VecQ& b) const;
    /// Full W-orbit of a vector (caller is responsible for feasible sizes).
    std::vector<VecQ> orbit(const VecQ& v) const;

    /// Coordinates of v in the basis of simple roots (plus the center
    /// direction for gl_n, reported against fundamental_weight(rank()+1)
    /// normalized by ambient_dim). Returns nullopt when v is outside the span.
    std::optional<std::vector<Rational>> simple_coords(const VecQ& v) const;

    /// Weight from fundamental coordinates (gl_n: rank()+1 entries allowed,
    /// the last being the center coefficient on e_1+...+e_n).
    VecQ weight_from_fundamental(const std::vector<Rational>& c) const;
    /// Coroot pairings <v, alpha_i^vee>, i = 1..rank().
    std::vector<Rational> fundamental_coords(const VecQ& v) const;

    /// v is in the root lattice span and v = sum m_i alpha_i with integer
    /// m_i >= 0 (the R_+ membership test behind the dominance order).
    bool in_Rplus(const VecQ& v) const;

    /// Highest weight of the contragredient of V(highest): -w0(highest).
    VecQ dual_highest_weight(const VecQ& highest) const;

    /// Diagram automorphisms as permutations of {1..rank}: all permutations
    /// preserving the Cartan pairings (identity always included).
    std::vector<std::vector<int>> diagram_automorphisms() const;

private:
    Family family_ = Family::A;
    int n_ = 0;
    int dim_ = 0;
    std::vector<VecQ> simple_;
    std::vector<VecQ> positive_;
    std::set<VecQ> root_set_;
    VecQ rho_;
    std::vector<VecQ> fundamental_;  // rank entries (+ center for gl)
    VecQ highest_root_;
    mpz_class weyl_order_;
    WeylWord longest_word_;
    // Precomputed solver data for simple_coords: the simple roots (+ center
    // for gl) as a row basis with the Gram matrix factored once.
    std::vector<VecQ> span_basis_;
    std::vector<std::vector<Rational>> gram_inv_;

    void finish_build();
};

/// Subset Theta of the simple roots with its derived Levi data.
class ThetaSubset {
public:
    /// indices: subset of {1..rank}, Theta = Psi rejected.
    ThetaSubset(const RootSystem& rs, std::set<int> indices);

    const RootSystem& root_system() const { return *rs_; }
    const std::set<int>& indices() const { return idx_; }
    bool contains(int i) const { return idx_.count(i) != 0; }

    /// Free lambda-variable indices: simple-root indices not in Theta,
    /// ascending; for gl_n the center variable index is appended last.
    const std::vector<int>& free_vars() const { return free_vars_; }

    const std::vector<VecQ>& levi_positive_roots() const { return levi_positive_; }
    bool is_levi_root(const VecQ& v) const;
    const VecQ& rho_levi() const { return rho_levi_; }          // rho(Theta)
    const VecQ& rho_parabolic() const { return rho_parab_; }    // rho_Theta = rho - rho(Theta)

    /// Connected components of the sub-Dynkin diagram, each ascending.
    const std::vector<std::vector<int>>& components() const { return components_; }

    mpz_class weyl_subgroup_order() const;

    /// All elements of W_Theta as words over Theta (guarded; throws when the
    /// subgroup order exceeds max_size).
    std::vector<WeylWord> enumerate_weyl_subgroup(unsigned long max_size = 2000000) const;

    /// Minimal-length coset representatives W(Theta), as words; guarded.
    std::vector<WeylWord> min_coset_reps(unsigned long max_size = 2000000) const;

    /// v restricted to a_Theta vanishes, i.e. v in span(Theta).
    bool restriction_is_zero(const VecQ& v) const;
    /// Canonical representative of v|_{a_Theta}: the orthogonal projection of
    /// v onto span(Theta)^perp, so two vectors have equal restriction iff
    /// their keys are equal.
    VecQ restriction_key(const VecQ& v) const;
    /// Equal restrictions to a_Theta.
    bool same_restriction(const VecQ& a, const VecQ& b) const {
        return restriction_is_zero(a - b);
    }
    /// mu <=_Theta mu' on restrictions of weights: mu' - mu = sum over free
    /// simple roots with non-negative integer coefficients (mod span(Theta)).
    bool leq_theta(const VecQ& a, const VecQ& b) const;
    bool lt_theta(const VecQ& a, const VecQ& b) const {
        return !same_restriction(a, b) && leq_theta(a, b);
    }

    /// Theta-antidominant: <v, alpha> <= 0 for alpha in Theta.
    bool is_theta_antidominant(const VecQ& v) const;
    bool is_theta_dominant(const VecQ& v) const;
    /// Theta-antidominant representative under W_Theta.
    VecQ theta_antidominant_rep(VecQ v) const;
    VecQ theta_dominant_rep(VecQ v) const;

    /// lambda_Theta = sum_j lambda_j Lambda_j over the free variables.
    VecQ lambda_theta(const Assignment& lambda) const;
    /// The linear form lambda -> <lambda_Theta, w> in a given bilinear form,
    /// assembled by the caller from per-variable pairings.

private:
    const RootSystem* rs_;
    std::set<int> idx_;
    std::vector<int> free_vars_;
    std::vector<VecQ> levi_positive_;
    std::set<VecQ> levi_root_set_;
    VecQ rho_levi_;
    VecQ rho_parab_;
    std::vector<std::vector<int>> components_;
    std::vector<VecQ> theta_basis_;
    std::vector<std::vector<Rational>> theta_gram_inv_;
};

}  // namespace minverma

#endif
