#include "minverma/trace_form.hpp"

#include <stdexcept>

#include "minverma/weight_system.hpp"

namespace minverma {

TraceForm TraceForm::for_representation(const RootSystem& rs, const VecQ& highest) {
    return for_weight_system(WeightSystem::build(rs, highest));
}

TraceForm TraceForm::for_weight_system(const WeightSystem& ws) {
    const RootSystem& rs = ws.root_system();
    TraceForm f;
    f.rs_ = &rs;
    // C = sum_w m(w) (alpha, w)^2 / (alpha, alpha), the same value for every
    // simple root; computed from each and cross-checked.
    for (int i = 1; i <= rs.rank(); ++i) {
        const VecQ& a = rs.simple_root(i);
        Rational c(0);
        for (const auto& [w, m] : ws.multiplicities()) {
            Rational p = dot(a, w);
            c += Rational(m) * p * p;
        }
        c /= dot(a, a);
        if (i == 1)
            f.c_ = c;
        else if (c != f.c_)
            throw std::logic_error("trace-form constant differs between simple roots");
    }
    if (f.c_.is_zero()) throw std::logic_error("degenerate trace form (trivial representation?)");
    if (rs.has_center()) {
        const int n = rs.ambient_dim();
        VecQ e(n, Rational(1));
        Rational c(0);
        for (const auto& [w, m] : ws.multiplicities()) {
            Rational p = dot(e, w);
            c += Rational(m) * p * p;
        }
        f.c_center_ = c / Rational(n);
        if (f.c_center_.is_zero())
            throw std::logic_error("degenerate central trace form");
    }
    return f;
}

TraceForm TraceForm::killing(const RootSystem& rs) {
    if (rs.family() == Family::GL)
        throw std::invalid_argument("Killing normalization requires a simple algebra");
    return for_representation(rs, rs.highest_root());
}

Rational TraceForm::pair(const VecQ& a, const VecQ& b) const {
    if (!rs_->has_center()) return dot(a, b) / c_;
    const int n = rs_->ambient_dim();
    Rational sa(0), sb(0);
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    // central parts (sa/n) e, (sb/n) e; (e,e) = n.
    Rational central = sa * sb / Rational(n);
    Rational semisimple = dot(a, b) - central;
    return semisimple / c_ + central / c_center_;
}

Rational TraceForm::casimir(const VecQ& mu) const {
    return pair(mu, mu + Rational(2) * rs_->rho());
}

}  // namespace minverma
