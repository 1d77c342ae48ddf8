#ifndef MINVERMA_FACTORED_POLY_HPP
#define MINVERMA_FACTORED_POLY_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "minverma/linear_form.hpp"
#include "minverma/multi_poly.hpp"
#include "minverma/rational.hpp"

namespace minverma {

/// Monic polynomial in x kept in factored form: prod (x - root)^mult,
/// each root an affine-linear function of the lambda coordinates.
/// Stored as a multiset keyed by the root form, so equality is
/// order-independent by construction.
class FactoredPoly {
public:
    FactoredPoly() = default;

    void add_factor(const LinearForm& root, unsigned mult = 1) {
        if (mult == 0) return;
        factors_[root] += mult;
    }

    const std::map<LinearForm, unsigned>& factors() const { return factors_; }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [r, m] : factors_) d += m;
        return d;
    }
    unsigned distinct_factor_count() const { return static_cast<unsigned>(factors_.size()); }

    bool is_one() const { return factors_.empty(); }

    friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
        FactoredPoly r = a;
        for (const auto& [root, m] : b.factors_) r.factors_[root] += m;
        return r;
    }

    friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredPoly& a, const FactoredPoly& b) { return !(a == b); }

    /// Expand to a sparse polynomial in x (variable kVarX) and the lambda
    /// variables. The empty product expands to 1.
    MultiPoly expand() const {
        MultiPoly r{Rational(1)};
        const MultiPoly x = MultiPoly::variable(kVarX);
        for (const auto& [root, m] : factors_) {
            MultiPoly lin = x - MultiPoly(root);
            for (unsigned k = 0; k < m; ++k) r = r * lin;
        }
        return r;
    }

    /// Root values at a full lambda assignment, as value -> multiplicity.
    std::map<Rational, unsigned> eval_at(const Assignment& a) const {
        std::map<Rational, unsigned> roots;
        for (const auto& [root, m] : factors_) roots[root.eval(a)] += m;
        return roots;
    }

    /// True when all stored roots are pairwise distinct linear forms.
    bool squarefree_symbolic() const {
        for (const auto& [r, m] : factors_)
            if (m > 1) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const FactoredPoly& p) {
        if (p.factors_.empty()) return os << "1";
        for (const auto& [root, m] : p.factors_) {
            os << "(x";
            LinearForm neg = -root;
            if (!neg.is_zero()) {
                std::ostringstream t;
                t << neg;
                std::string s = t.str();
                if (!s.empty() && s[0] == '-')
                    os << " - " << s.substr(1);
                else
                    os << " + " << s;
            }
            os << ")";
            if (m > 1) os << "^" << m;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    std::map<LinearForm, unsigned> factors_;
};

/// Product of affine-linear forms in the lambda variables with a rational
/// prefactor (no x): scale * prod f_i^{m_i}. Used for the gap functions r
/// and for the classical-limit discriminant, where identically-zero
/// detection must be exact and factor-attributable.
class FactorProduct {
public:
    FactorProduct() : scale_(1) {}
    explicit FactorProduct(Rational scale) : scale_(std::move(scale)) {}

    /// Multiplies the product by the given form, keeping factors primitive:
    /// the content is folded into the scale. A zero form zeroes the scale
    /// and is recorded so the offending factor stays attributable.
    void mul_form(const LinearForm& f, unsigned mult = 1) {
        if (mult == 0) return;
        if (f.is_zero()) {
            zero_factors_ += mult;
            scale_ = Rational(0);
            return;
        }
        auto [s, prim] = f.primitive();
        for (unsigned k = 0; k < mult; ++k) scale_ *= s;
        factors_[prim] += mult;
    }

    void mul_scalar(const Rational& s) { scale_ *= s; }

    const Rational& scale() const { return scale_; }
    const std::map<LinearForm, unsigned>& factors() const { return factors_; }
    unsigned zero_factor_count() const { return zero_factors_; }

    bool identically_zero() const { return zero_factors_ > 0 || scale_.is_zero(); }

    unsigned degree() const {
        unsigned d = zero_factors_;
        for (const auto& [f, m] : factors_) d += m;
        return d;
    }

    Rational eval(const Assignment& a) const {
        if (identically_zero()) return Rational(0);
        Rational r = scale_;
        for (const auto& [f, m] : factors_) {
            Rational v = f.eval(a);
            for (unsigned k = 0; k < m; ++k) r *= v;
        }
        return r;
    }

    MultiPoly expand() const {
        if (identically_zero()) return MultiPoly();
        MultiPoly r{scale_};
        for (const auto& [f, m] : factors_) {
            MultiPoly lin{f};
            for (unsigned k = 0; k < m; ++k) r = r * lin;
        }
        return r;
    }

    friend bool operator==(const FactorProduct& a, const FactorProduct& b) {
        if (a.identically_zero() || b.identically_zero())
            return a.identically_zero() && b.identically_zero();
        return a.scale_ == b.scale_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactorProduct& a, const FactorProduct& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const FactorProduct& p) {
        if (p.identically_zero()) return os << "0";
        os << p.scale_;
        for (const auto& [f, m] : p.factors_) {
            os << "*(" << f << ")";
            if (m > 1) os << "^" << m;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    Rational scale_;
    std::map<LinearForm, unsigned> factors_;
    unsigned zero_factors_ = 0;
};

}  // namespace minverma

#endif
