#ifndef MINVERMA_TRACE_FORM_HPP
#define MINVERMA_TRACE_FORM_HPP

#include "minverma/root_system.hpp"
#include "minverma/vec.hpp"

namespace minverma {

class WeightSystem;

/// The bilinear form <X,Y> = trace pi(X) pi(Y) transported to the weight
/// space: <u,v> = (u0,v0)/C + (uc,vc)/C' where u0/uc are the traceless and
/// central parts (the central part only occurs for gl_n). C is the same for
/// every simple root, which the factory checks.
class TraceForm {
public:
    static TraceForm for_representation(const RootSystem& rs, const VecQ& highest);
    static TraceForm for_weight_system(const WeightSystem& ws);
    /// Killing form: the trace form of the adjoint representation.
    static TraceForm killing(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }
    const Rational& c() const { return c_; }
    const Rational& c_center() const { return c_center_; }

    Rational pair(const VecQ& a, const VecQ& b) const;
    /// <mu, mu + 2 rho>: the Casimir eigenvalue on a highest weight module.
    Rational casimir(const VecQ& mu) const;

private:
    const RootSystem* rs_ = nullptr;
    Rational c_;
    Rational c_center_;
};

}  // namespace minverma

#endif
