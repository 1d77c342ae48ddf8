#include "minverma/weight_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace minverma {

mpz_class weyl_dimension(const std::vector<VecQ>& positive, const VecQ& rho_sub,
                         const VecQ& highest) {
    Rational num(1), den(1);
    for (const auto& a : positive) {
        num *= dot(highest + rho_sub, a);
        den *= dot(rho_sub, a);
    }
    Rational d = num / den;
    if (!d.is_integer() || d.sign() <= 0)
        throw std::logic_error("Weyl dimension is not a positive integer");
    return d.num();
}

WeightSystem WeightSystem::build(const RootSystem& rs, const VecQ& highest) {
    std::vector<int> idx;
    for (int i = 1; i <= rs.rank(); ++i) idx.push_back(i);
    return build_impl(rs, std::move(idx), rs.positive_roots(), rs.rho(), highest, false);
}

WeightSystem WeightSystem::build_levi(const RootSystem& rs, const ThetaSubset& ts,
                                      const VecQ& highest) {
    std::vector<int> idx(ts.indices().begin(), ts.indices().end());
    return build_impl(rs, std::move(idx), ts.levi_positive_roots(), ts.rho_levi(), highest, true);
}

WeightSystem WeightSystem::build_impl(const RootSystem& rs, std::vector<int> simple_idx,
                                      std::vector<VecQ> positive, VecQ rho_sub,
                                      const VecQ& highest, bool levi) {
    WeightSystem ws;
    ws.rs_ = &rs;
    ws.levi_ = levi;
    ws.sub_simple_ = std::move(simple_idx);
    ws.sub_positive_ = std::move(positive);
    ws.sub_rho_ = std::move(rho_sub);
    ws.highest_ = highest;

    for (int i : ws.sub_simple_) {
        Rational p = rs.coroot_pairing(highest, i);
        if (!p.is_integer() || p.sign() < 0)
            throw std::invalid_argument("highest weight is not dominant integral (simple root " +
                                        std::to_string(i) + ")");
    }

    // Enumerate the weight set level by level through the root strings:
    // mu - alpha is a weight iff p + <mu, alpha^vee> >= 1 where p is the
    // length of the known upper part of the alpha-string through mu.
    std::map<VecQ, long> level{{highest, 0}};
    std::vector<VecQ> frontier{highest};
    long cur = 0;
    while (!frontier.empty()) {
        std::vector<VecQ> next;
        for (const auto& mu : frontier) {
            for (int i : ws.sub_simple_) {
                const VecQ& a = rs.simple_root(i);
                long p = 0;
                VecQ up = mu + a;
                while (level.count(up)) {
                    ++p;
                    up = up + a;
                }
                Rational q = Rational(p) + rs.coroot_pairing(mu, i);
                if (q >= Rational(1)) {
                    VecQ down = mu - a;
                    if (level.emplace(down, cur + 1).second) next.push_back(down);
                }
            }
        }
        frontier = std::move(next);
        ++cur;
    }

    // Canonical order: ascending level, then coordinate order.
    std::vector<std::pair<long, VecQ>> by_level;
    by_level.reserve(level.size());
    for (const auto& [w, l] : level) by_level.emplace_back(l, w);
    std::sort(by_level.begin(), by_level.end());

    auto sub_dominant = [&](const VecQ& v) {
        for (int i : ws.sub_simple_)
            if (dot(v, rs.simple_root(i)).sign() < 0) return false;
        return true;
    };
    auto sub_dominant_rep = [&](VecQ v) {
        for (;;) {
            int neg = 0;
            for (int i : ws.sub_simple_)
                if (dot(v, rs.simple_root(i)).sign() < 0) {
                    neg = i;
                    break;
                }
            if (!neg) return v;
            v = rs.simple_reflect(neg, v);
        }
    };

    // Freudenthal recursion in level order; non-dominant weights copy the
    // multiplicity of their dominant representative (already assigned).
    const Rational top_norm = dot(highest + ws.sub_rho_, highest + ws.sub_rho_);
    for (const auto& [l, mu] : by_level) {
        if (mu == highest) {
            ws.mult_[mu] = 1;
            continue;
        }
        if (!sub_dominant(mu)) {
            ws.mult_[mu] = ws.mult_.at(sub_dominant_rep(mu));
            continue;
        }
        Rational num(0);
        for (const auto& a : ws.sub_positive_) {
            VecQ up = mu + a;
            while (level.count(up)) {
                num += Rational(ws.mult_.at(up)) * dot(up, a);
                up = up + a;
            }
        }
        num *= Rational(2);
        Rational denom = top_norm - dot(mu + ws.sub_rho_, mu + ws.sub_rho_);
        Rational m = num / denom;
        if (!m.is_integer() || m.sign() <= 0)
            throw std::logic_error("Freudenthal produced a non-positive multiplicity");
        ws.mult_[mu] = m.to_long();
    }

    ws.order_.reserve(by_level.size());
    for (const auto& [l, w] : by_level) ws.order_.push_back(w);

    ws.lowest_ = ws.order_.back();
    {
        // The lowest weight is the sub-antidominant image of the highest one.
        VecQ v = highest;
        for (;;) {
            int pos = 0;
            for (int i : ws.sub_simple_)
                if (dot(v, rs.simple_root(i)).sign() > 0) {
                    pos = i;
                    break;
                }
            if (!pos) break;
            v = rs.simple_reflect(pos, v);
        }
        if (v != ws.lowest_ || ws.mult_.at(v) != 1)
            throw std::logic_error("lowest weight mismatch");
    }

    mpz_class total = 0;
    for (const auto& [w, m] : ws.mult_) total += m;
    ws.dim_ = weyl_dimension(ws.sub_positive_, ws.sub_rho_, highest);
    if (total != ws.dim_) throw std::logic_error("dimension mismatch against the Weyl formula");
    return ws;
}

bool WeightSystem::leq(const VecQ& a, const VecQ& b) const {
    if (!levi_) return rs_->in_Rplus(b - a);
    auto c = rs_->simple_coords(b - a);
    if (!c) return false;
    for (int i = 1; i <= rs_->rank(); ++i) {
        const Rational& m = (*c)[i - 1];
        bool in_theta = std::find(sub_simple_.begin(), sub_simple_.end(), i) != sub_simple_.end();
        if (!in_theta) {
            if (!m.is_zero()) return false;
        } else if (m.sign() < 0 || !m.is_integer()) {
            return false;
        }
    }
    if (rs_->has_center() && !(*c).back().is_zero()) return false;
    return true;
}

bool WeightSystem::is_multiplicity_free() const {
    for (const auto& [w, m] : mult_)
        if (m != 1) return false;
    return true;
}

bool WeightSystem::is_adjoint() const {
    return !levi_ && rs_->family() != Family::GL && highest_ == rs_->highest_root();
}

VecQ WeightSystem::dominant_minuscule_weight() const {
    const VecQ* found = nullptr;
    for (const auto& [w, m] : mult_) {
        if (!rs_->is_dominant(w)) continue;
        bool ok = true;
        for (const auto& a : rs_->positive_roots()) {
            Rational p = rs_->coroot_pairing_root(w, a);
            if (p != Rational(0) && p != Rational(1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (found) throw std::logic_error("dominant minuscule weight is not unique");
            found = &w;
        }
    }
    if (!found) throw std::logic_error("no dominant minuscule weight found");
    return *found;
}

bool WeightSystem::is_minuscule() const {
    for (const auto& a : rs_->positive_roots()) {
        Rational p = rs_->coroot_pairing_root(highest_, a);
        if (p != Rational(0) && p != Rational(1)) return false;
    }
    return true;
}

std::vector<std::pair<VecQ, int>> WeightSystem::poset_edges() const {
    std::vector<std::pair<VecQ, int>> edges;
    for (const auto& w : order_)
        for (int i : sub_simple_)
            if (mult_.count(w + rs_->simple_root(i))) edges.emplace_back(w, i);
    return edges;
}

std::vector<VecQ> WeightSystem::levi_decompose_minuscule(const ThetaSubset& ts) const {
    if (!is_minuscule()) throw std::invalid_argument("representation is not minuscule");
    std::map<VecQ, std::vector<VecQ>> fibers;
    for (const auto& w : order_) fibers[ts.restriction_key(w)].push_back(w);
    std::vector<VecQ> highs;
    for (const auto& [key, members] : fibers) {
        VecQ h = ts.theta_dominant_rep(members.front());
        for (const auto& m : members)
            if (ts.theta_dominant_rep(m) != h)
                throw std::logic_error("minuscule fiber is not a single Levi orbit");
        highs.push_back(h);
    }
    std::sort(highs.begin(), highs.end());
    return highs;
}

AdjointLeviDecomposition levi_decompose_adjoint(const RootSystem& rs, const ThetaSubset& ts) {
    if (rs.family() == Family::GL)
        throw std::invalid_argument("adjoint decomposition requires a simple algebra");
    AdjointLeviDecomposition out;
    std::map<std::vector<Rational>, std::vector<VecQ>> fibers;
    for (const auto& pos : rs.positive_roots()) {
        for (const VecQ& root : {pos, -pos}) {
            auto c = *rs.simple_coords(root);
            std::vector<Rational> m;
            bool zero = true;
            for (int j : ts.free_vars()) {
                if (j > rs.rank()) continue;  // roots carry no center part
                m.push_back(c[j - 1]);
                if (!m.back().is_zero()) zero = false;
            }
            if (!zero) fibers[m].push_back(root);
        }
    }
    for (auto& [m, roots] : fibers) {
        std::sort(roots.begin(), roots.end());
        AdjointLeviFiber fib;
        fib.m = m;
        fib.roots = roots;
        // <=-smallest root of the fiber.
        const VecQ* low = nullptr;
        for (const auto& r : roots) {
            bool minimal = true;
            for (const auto& s : roots)
                if (s != r && rs.in_Rplus(r - s)) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                if (low) throw std::logic_error("adjoint fiber has no unique lowest root");
                low = &r;
            }
        }
        fib.lowest = *low;
        out.nonzero_fibers.push_back(std::move(fib));
    }
    out.zero_components = ts.components();
    out.trivial_count = static_cast<int>(ts.free_vars().size());
    return out;
}

}  // namespace minverma
