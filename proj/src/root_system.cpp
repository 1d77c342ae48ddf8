#include "minverma/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace minverma {

namespace {

VecQ unit(int dim, int i) {
    VecQ v(dim, Rational(0));
    v[i] = Rational(1);
    return v;
}

/// Solve G x = b by Gauss-Jordan, G symmetric positive definite.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> g) {
    const size_t n = g.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && g[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("invert: singular Gram matrix");
        std::swap(g[piv], g[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = g[col][col];
        for (size_t j = 0; j < n; ++j) {
            g[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || g[row][col].is_zero()) continue;
            Rational f = g[row][col];
            for (size_t j = 0; j < n; ++j) {
                g[row][j] -= f * g[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

RootSystem RootSystem::build(const std::string& label) {
    if (label.size() >= 3 && (label.substr(0, 2) == "gl" || label.substr(0, 2) == "GL")) {
        return build(Family::GL, std::stoi(label.substr(2)));
    }
    if (label.size() < 2) throw std::invalid_argument("unsupported type label '" + label + "'");
    char f = static_cast<char>(std::toupper(label[0]));
    int n = std::stoi(label.substr(1));
    switch (f) {
        case 'A': return build(Family::A, n);
        case 'B': return build(Family::B, n);
        case 'C': return build(Family::C, n);
        case 'D': return build(Family::D, n);
        case 'E': return build(Family::E, n);
        case 'F': return build(Family::F, n);
        case 'G': return build(Family::G, n);
        default: throw std::invalid_argument("unsupported type label '" + label + "'");
    }
}

RootSystem RootSystem::build(Family f, int n) {
    RootSystem rs;
    rs.family_ = f;
    rs.n_ = n;
    auto bad = [&] {
        throw std::invalid_argument("unsupported (type, rank) pair: " + rs.label());
    };
    switch (f) {
        case Family::A: {
            if (n < 1) bad();
            rs.dim_ = n + 1;
            for (int i = 0; i < n; ++i)
                rs.simple_.push_back(unit(rs.dim_, i) - unit(rs.dim_, i + 1));
            rs.weyl_order_ = factorial(n + 1);
            break;
        }
        case Family::GL: {
            if (n < 2) bad();
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i)
                rs.simple_.push_back(unit(n, i) - unit(n, i + 1));
            rs.weyl_order_ = factorial(n);
            break;
        }
        case Family::B: {
            if (n < 2) bad();
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i)
                rs.simple_.push_back(unit(n, i) - unit(n, i + 1));
            rs.simple_.push_back(unit(n, n - 1));
            rs.weyl_order_ = factorial(n) << n;
            break;
        }
        case Family::C: {
            if (n < 2) bad();
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i)
                rs.simple_.push_back(unit(n, i) - unit(n, i + 1));
            rs.simple_.push_back(Rational(2) * unit(n, n - 1));
            rs.weyl_order_ = factorial(n) << n;
            break;
        }
        case Family::D: {
            if (n < 4) bad();
            rs.dim_ = n;
            for (int i = 0; i + 1 < n; ++i)
                rs.simple_.push_back(unit(n, i) - unit(n, i + 1));
            rs.simple_.push_back(unit(n, n - 2) + unit(n, n - 1));
            rs.weyl_order_ = factorial(n) << (n - 1);
            break;
        }
        case Family::E: {
            if (n < 6 || n > 8) bad();
            rs.dim_ = 8;
            VecQ a1(8, Rational(-1, 2));
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            rs.simple_.push_back(a1);                            // alpha_1
            rs.simple_.push_back(unit(8, 0) + unit(8, 1));       // alpha_2
            rs.simple_.push_back(unit(8, 1) - unit(8, 0));       // alpha_3
            for (int i = 4; i <= n; ++i)                         // alpha_i = e_{i-1} - e_{i-2}
                rs.simple_.push_back(unit(8, i - 2) - unit(8, i - 3));
            if (n == 6) rs.weyl_order_ = 51840;
            if (n == 7) rs.weyl_order_ = 2903040;
            if (n == 8) rs.weyl_order_ = 696729600;
            break;
        }
        case Family::F: {
            if (n != 4) bad();
            rs.dim_ = 4;
            rs.simple_.push_back(unit(4, 1) - unit(4, 2));
            rs.simple_.push_back(unit(4, 2) - unit(4, 3));
            rs.simple_.push_back(unit(4, 3));
            VecQ a4(4, Rational(-1, 2));
            a4[0] = Rational(1, 2);
            rs.simple_.push_back(a4);
            rs.weyl_order_ = 1152;
            break;
        }
        case Family::G: {
            if (n != 2) bad();
            rs.dim_ = 3;
            rs.simple_.push_back(unit(3, 0) - unit(3, 1));
            VecQ a2{Rational(-2), Rational(1), Rational(1)};
            rs.simple_.push_back(a2);
            rs.weyl_order_ = 12;
            break;
        }
    }
    rs.finish_build();
    return rs;
}

std::string RootSystem::label() const {
    switch (family_) {
        case Family::A: return "A" + std::to_string(n_);
        case Family::B: return "B" + std::to_string(n_);
        case Family::C: return "C" + std::to_string(n_);
        case Family::D: return "D" + std::to_string(n_);
        case Family::E: return "E" + std::to_string(n_);
        case Family::F: return "F" + std::to_string(n_);
        case Family::G: return "G" + std::to_string(n_);
        case Family::GL: return "gl" + std::to_string(n_);
    }
    return "?";
}

void RootSystem::finish_build() {
    // All roots = closure of the simple roots under simple reflections.
    std::deque<VecQ> queue(simple_.begin(), simple_.end());
    for (const auto& a : simple_) root_set_.insert(a);
    while (!queue.empty()) {
        VecQ v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rank(); ++i) {
            VecQ w = simple_reflect(i, v);
            if (root_set_.insert(w).second) queue.push_back(w);
        }
    }

    // Span basis for coordinate solves (simple roots, plus the center for gl).
    span_basis_ = simple_;
    if (family_ == Family::GL) span_basis_.push_back(VecQ(dim_, Rational(1)));
    std::vector<std::vector<Rational>> gram(span_basis_.size(),
                                            std::vector<Rational>(span_basis_.size()));
    for (size_t i = 0; i < span_basis_.size(); ++i)
        for (size_t j = 0; j < span_basis_.size(); ++j)
            gram[i][j] = dot(span_basis_[i], span_basis_[j]);
    gram_inv_ = invert(std::move(gram));

    for (const auto& r : root_set_) {
        auto c = simple_coords(r);
        if (!c) throw std::logic_error("root outside simple-root span");
        bool nonneg = true;
        for (int i = 0; i < rank(); ++i)
            if ((*c)[i].sign() < 0) nonneg = false;
        if (nonneg) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end());

    rho_ = VecQ(dim_, Rational(0));
    for (const auto& r : positive_) rho_ = rho_ + r;
    rho_ = Rational(1, 2) * rho_;

    // Fundamental weights: Lambda_i = sum_k c_k alpha_k with
    // <Lambda_i, alpha_j^vee> = delta_ij, solved against the simple-root Gram;
    // for gl_n take Lambda_k = e_1 + ... + e_k instead, plus the center weight.
    if (family_ == Family::GL) {
        for (int k = 1; k < n_; ++k) {
            VecQ w(dim_, Rational(0));
            for (int i = 0; i < k; ++i) w[i] = Rational(1);
            fundamental_.push_back(w);
        }
        fundamental_.push_back(VecQ(dim_, Rational(1)));
    } else {
        const int r = rank();
        for (int i = 1; i <= r; ++i) {
            // rhs_j = delta_ij * (alpha_j, alpha_j) / 2 ; then Lambda_i = sum c_k alpha_k
            std::vector<Rational> rhs(r, Rational(0));
            rhs[i - 1] = dot(simple_[i - 1], simple_[i - 1]) / Rational(2);
            VecQ w(dim_, Rational(0));
            for (int k = 0; k < r; ++k) {
                Rational ck(0);
                for (int j = 0; j < r; ++j) ck += gram_inv_[k][j] * rhs[j];
                w = w + ck * simple_[k];
            }
            fundamental_.push_back(w);
        }
    }

    // Highest root: maximal height.
    {
        Rational best(-1);
        for (const auto& r : positive_) {
            auto c = *simple_coords(r);
            Rational h(0);
            for (int i = 0; i < rank(); ++i) h += c[i];
            if (h > best) {
                best = h;
                highest_root_ = r;
            }
        }
    }

    // Longest word by descent from -rho to rho.
    {
        VecQ v = -rho_;
        while (v != rho_) {
            int found = 0;
            for (int i = 1; i <= rank(); ++i) {
                if (dot(v, simple_[i - 1]).sign() < 0) {
                    found = i;
                    break;
                }
            }
            if (!found) throw std::logic_error("longest word: stuck");
            v = simple_reflect(found, v);
            longest_word_.push_back(found);
        }
    }
}

bool RootSystem::is_positive_root(const VecQ& v) const {
    return std::binary_search(positive_.begin(), positive_.end(), v);
}

const VecQ& RootSystem::fundamental_weight(int i) const {
    if (i < 1 || i > static_cast<int>(fundamental_.size()))
        throw std::out_of_range("fundamental_weight index");
    return fundamental_[i - 1];
}

std::vector<long> RootSystem::marks() const {
    auto c = simple_coords(highest_root_);
    std::vector<long> m;
    for (int i = 0; i < rank(); ++i) m.push_back((*c)[i].to_long());
    return m;
}

std::vector<long> RootSystem::dual_marks() const {
    // Dual root system: alpha^vee = 2 alpha / (alpha, alpha); its highest
    // root expanded on the dual simple roots.
    std::vector<long> best;
    Rational best_h(-1);
    for (const auto& a : positive_) {
        auto c = *simple_coords(a);
        Rational na = dot(a, a);
        std::vector<Rational> cd(rank());
        Rational h(0);
        for (int i = 0; i < rank(); ++i) {
            cd[i] = c[i] * dot(simple_[i], simple_[i]) / na;
            h += cd[i];
        }
        if (h > best_h) {
            best_h = h;
            best.clear();
            for (int i = 0; i < rank(); ++i) best.push_back(cd[i].to_long());
        }
    }
    return best;
}

Rational RootSystem::coroot_pairing(const VecQ& v, int i) const {
    const VecQ& a = simple_root(i);
    return Rational(2) * dot(v, a) / dot(a, a);
}

Rational RootSystem::coroot_pairing_root(const VecQ& v, const VecQ& alpha) const {
    return Rational(2) * dot(v, alpha) / dot(alpha, alpha);
}

VecQ RootSystem::reflect(const VecQ& alpha, const VecQ& mu) const {
    if (!is_root(alpha)) throw std::invalid_argument("reflect: not a root");
    return mu - coroot_pairing_root(mu, alpha) * alpha;
}

VecQ RootSystem::simple_reflect(int i, const VecQ& mu) const {
    const VecQ& a = simple_root(i);
    return mu - coroot_pairing_root(mu, a) * a;
}

VecQ RootSystem::apply_word(const WeylWord& w, VecQ mu) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) mu = simple_reflect(*it, mu);
    return mu;
}

VecQ RootSystem::apply_word_inverse(const WeylWord& w, VecQ mu) const {
    for (int i : w) mu = simple_reflect(i, mu);
    return mu;
}

VecQ RootSystem::dot_action(const WeylWord& w, const VecQ& mu) const {
    return apply_word(w, mu + rho_) - rho_;
}

bool RootSystem::is_dominant(const VecQ& v) const {
    for (int i = 1; i <= rank(); ++i)
        if (dot(v, simple_[i - 1]).sign() < 0) return false;
    return true;
}

VecQ RootSystem::dominant_rep(VecQ v, WeylWord* word) const {
    if (word) word->clear();
    for (;;) {
        int neg = 0;
        for (int i = 1; i <= rank(); ++i) {
            if (dot(v, simple_[i - 1]).sign() < 0) {
                neg = i;
                break;
            }
        }
        if (!neg) break;
        v = simple_reflect(neg, v);
        if (word) word->push_back(neg);
    }
    return v;
}

bool RootSystem::same_orbit(const VecQ& a, const VecQ& b) const {
    return dominant_rep(a) == dominant_rep(b);
}

std::vector<VecQ> RootSystem::orbit(const VecQ& v) const {
    std::set<VecQ> seen{v};
    std::deque<VecQ> queue{v};
    while (!queue.empty()) {
        VecQ u = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rank(); ++i) {
            VecQ w = simple_reflect(i, u);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<std::vector<Rational>> RootSystem::simple_coords(const VecQ& v) const {
    const size_t k = span_basis_.size();
    std::vector<Rational> rhs(k);
    for (size_t i = 0; i < k; ++i) rhs[i] = dot(v, span_basis_[i]);
    std::vector<Rational> c(k, Rational(0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) c[i] += gram_inv_[i][j] * rhs[j];
    VecQ rec(dim_, Rational(0));
    for (size_t i = 0; i < k; ++i) rec = rec + c[i] * span_basis_[i];
    if (rec != v) return std::nullopt;
    return c;
}

VecQ RootSystem::weight_from_fundamental(const std::vector<Rational>& c) const {
    if (c.size() > fundamental_.size())
        throw std::invalid_argument("weight_from_fundamental: at most " +
                                    std::to_string(fundamental_.size()) + " coordinates");
    VecQ v(dim_, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) v = v + c[i] * fundamental_[i];
    return v;
}

std::vector<Rational> RootSystem::fundamental_coords(const VecQ& v) const {
    std::vector<Rational> c;
    for (int i = 1; i <= rank(); ++i) c.push_back(coroot_pairing(v, i));
    return c;
}

bool RootSystem::in_Rplus(const VecQ& v) const {
    auto c = simple_coords(v);
    if (!c) return false;
    for (int i = 0; i < rank(); ++i) {
        if ((*c)[i].sign() < 0 || !(*c)[i].is_integer()) return false;
    }
    if (family_ == Family::GL && !(*c).back().is_zero()) return false;
    return true;
}

VecQ RootSystem::dual_highest_weight(const VecQ& highest) const {
    return dominant_rep(-highest);
}

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
    const int r = rank();
    std::vector<std::vector<Rational>> pair(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) pair[i][j] = dot(simple_[i], simple_[j]);
    std::vector<std::vector<int>> result;
    std::vector<int> perm(r, 0);
    std::vector<bool> used(r, false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == r) {
            result.push_back(std::vector<int>(r + 1));
            for (int i = 0; i < r; ++i) result.back()[i + 1] = perm[i] + 1;
            return;
        }
        for (int img = 0; img < r; ++img) {
            if (used[img]) continue;
            bool ok = pair[pos][pos] == pair[img][img];
            for (int j = 0; ok && j < pos; ++j)
                if (pair[pos][j] != pair[img][perm[j]]) ok = false;
            if (!ok) continue;
            used[img] = true;
            perm[pos] = img;
            self(self, pos + 1);
            used[img] = false;
        }
    };
    rec(rec, 0);
    return result;  // each entry is 1-based: entry[i] = image of alpha_i
}

// ---------------------------------------------------------------------------

ThetaSubset::ThetaSubset(const RootSystem& rs, std::set<int> indices)
    : rs_(&rs), idx_(std::move(indices)) {
    const int r = rs.rank();
    for (int i : idx_)
        if (i < 1 || i > r) throw std::invalid_argument("Theta index out of range");
    if (static_cast<int>(idx_.size()) == r)
        throw std::invalid_argument("Theta must be a proper subset of the simple roots");

    for (int i = 1; i <= r; ++i)
        if (!idx_.count(i)) free_vars_.push_back(i);
    if (rs.has_center()) free_vars_.push_back(rs.center_var());

    for (const auto& root : rs.positive_roots()) {
        auto c = *rs.simple_coords(root);
        bool in_span = true;
        for (int i = 1; i <= r; ++i)
            if (!idx_.count(i) && !c[i - 1].is_zero()) in_span = false;
        if (in_span) {
            levi_positive_.push_back(root);
            levi_root_set_.insert(root);
            levi_root_set_.insert(-root);
        }
    }

    rho_levi_ = VecQ(rs.ambient_dim(), Rational(0));
    for (const auto& root : levi_positive_) rho_levi_ = rho_levi_ + root;
    rho_levi_ = Rational(1, 2) * rho_levi_;
    rho_parab_ = rs.rho() - rho_levi_;

    // Connected components of the sub-diagram.
    std::set<int> rest = idx_;
    while (!rest.empty()) {
        std::vector<int> comp;
        std::deque<int> queue{*rest.begin()};
        rest.erase(rest.begin());
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp.push_back(i);
            for (auto it = rest.begin(); it != rest.end();) {
                if (!dot(rs.simple_root(i), rs.simple_root(*it)).is_zero()) {
                    queue.push_back(*it);
                    it = rest.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components_.push_back(comp);
    }
    std::sort(components_.begin(), components_.end());

    for (int i : idx_) theta_basis_.push_back(rs.simple_root(i));
    if (!theta_basis_.empty()) {
        std::vector<std::vector<Rational>> g(theta_basis_.size(),
                                             std::vector<Rational>(theta_basis_.size()));
        for (size_t i = 0; i < theta_basis_.size(); ++i)
            for (size_t j = 0; j < theta_basis_.size(); ++j)
                g[i][j] = dot(theta_basis_[i], theta_basis_[j]);
        theta_gram_inv_ = invert(std::move(g));
    }
}

VecQ ThetaSubset::restriction_key(const VecQ& v) const {
    if (theta_basis_.empty()) return v;
    const size_t k = theta_basis_.size();
    std::vector<Rational> rhs(k);
    for (size_t i = 0; i < k; ++i) rhs[i] = dot(v, theta_basis_[i]);
    VecQ proj(rs_->ambient_dim(), Rational(0));
    for (size_t i = 0; i < k; ++i) {
        Rational ci(0);
        for (size_t j = 0; j < k; ++j) ci += theta_gram_inv_[i][j] * rhs[j];
        proj = proj + ci * theta_basis_[i];
    }
    return v - proj;
}

bool ThetaSubset::is_levi_root(const VecQ& v) const { return levi_root_set_.count(v) != 0; }

mpz_class ThetaSubset::weyl_subgroup_order() const {
    // Product of the component orders; component types read off the
    // sub-diagram (node count, edge multiplicities, length pattern).
    mpz_class total = 1;
    for (const auto& comp : components_) {
        const int k = static_cast<int>(comp.size());
        // Count positive roots of the component's subsystem; |W| follows from
        // the classification, but a direct formula via the component type is
        // simplest: detect by root counts and lengths.
        long pos = 0;
        std::set<Rational> lengths;
        for (const auto& root : levi_positive_) {
            auto c = *rs_->simple_coords(root);
            bool in_comp = true;
            for (int i = 1; i <= rs_->rank(); ++i)
                if (!c[i - 1].is_zero() && std::find(comp.begin(), comp.end(), i) == comp.end())
                    in_comp = false;
            if (in_comp) {
                ++pos;
                lengths.insert(dot(root, root));
            }
        }
        mpz_class order;
        const long kl = k;
        if (pos == kl * (kl + 1) / 2 && lengths.size() == 1) {
            order = factorial(k + 1);  // A_k
        } else if (pos == kl * kl && lengths.size() == 2) {
            order = factorial(k) << k;  // B_k / C_k
        } else if (pos == kl * (kl - 1) && lengths.size() == 1 && k >= 4) {
            order = factorial(k) << (k - 1);  // D_k
        } else if (k == 6 && pos == 36) {
            order = 51840;  // E6
        } else if (k == 7 && pos == 63) {
            order = 2903040;  // E7
        } else if (k == 8 && pos == 120) {
            order = 696729600;  // E8
        } else if (k == 4 && pos == 24) {
            order = 1152;  // F4
        } else if (k == 2 && pos == 6) {
            order = 12;  // G2
        } else {
            throw std::logic_error("unrecognized Levi component");
        }
        total *= order;
    }
    return total;
}

std::vector<WeylWord> ThetaSubset::enumerate_weyl_subgroup(unsigned long max_size) const {
    if (weyl_subgroup_order() > max_size)
        throw std::runtime_error("W_Theta too large to enumerate");
    // Orbit of rho(Theta) under W_Theta carries the elements bijectively
    // (rho(Theta) is Levi-regular).
    std::map<VecQ, WeylWord> seen;
    seen.emplace(rho_levi_, WeylWord{});
    std::deque<VecQ> queue{rho_levi_};
    while (!queue.empty()) {
        VecQ v = queue.front();
        queue.pop_front();
        const WeylWord base = seen.at(v);
        for (int i : idx_) {
            VecQ w = rs_->simple_reflect(i, v);
            if (!seen.count(w)) {
                WeylWord word{i};
                word.insert(word.end(), base.begin(), base.end());
                seen.emplace(w, std::move(word));
                queue.push_back(w);
            }
        }
    }
    std::vector<WeylWord> out;
    out.reserve(seen.size());
    for (auto& [v, w] : seen) out.push_back(w);
    return out;
}

std::vector<WeylWord> ThetaSubset::min_coset_reps(unsigned long max_size) const {
    mpz_class count = rs_->weyl_order() / weyl_subgroup_order();
    if (count > max_size) throw std::runtime_error("W(Theta) too large to enumerate");
    // Orbit of rho_Theta <-> W / W_Theta; the descent word from each orbit
    // point back to rho_Theta is the minimal coset representative.
    std::set<VecQ> seen{rho_parab_};
    std::deque<VecQ> queue{rho_parab_};
    while (!queue.empty()) {
        VecQ v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rs_->rank(); ++i) {
            VecQ w = rs_->simple_reflect(i, v);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    std::vector<WeylWord> reps;
    reps.reserve(seen.size());
    for (const auto& target : seen) {
        WeylWord word;
        VecQ v = target;
        while (v != rho_parab_) {
            int neg = 0;
            for (int i = 1; i <= rs_->rank(); ++i)
                if (dot(v, rs_->simple_root(i)).sign() < 0) {
                    neg = i;
                    break;
                }
            if (!neg) throw std::logic_error("coset descent stuck");
            v = rs_->simple_reflect(neg, v);
            word.push_back(neg);
        }
        reps.push_back(std::move(word));
    }
    std::sort(reps.begin(), reps.end(), [](const WeylWord& a, const WeylWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return reps;
}

bool ThetaSubset::restriction_is_zero(const VecQ& v) const {
    auto c = rs_->simple_coords(v);
    if (!c) return false;
    for (int j : free_vars_) {
        int pos = (j == rs_->rank() + 1) ? rs_->rank() : j - 1;
        if (!(*c)[pos].is_zero()) return false;
    }
    return true;
}

bool ThetaSubset::leq_theta(const VecQ& a, const VecQ& b) const {
    auto c = rs_->simple_coords(b - a);
    if (!c) return false;
    for (int j : free_vars_) {
        if (j == rs_->rank() + 1) {
            if (!(*c)[rs_->rank()].is_zero()) return false;  // center must match
        } else {
            const Rational& m = (*c)[j - 1];
            if (m.sign() < 0 || !m.is_integer()) return false;
        }
    }
    return true;
}

bool ThetaSubset::is_theta_antidominant(const VecQ& v) const {
    for (int i : idx_)
        if (dot(v, rs_->simple_root(i)).sign() > 0) return false;
    return true;
}

bool ThetaSubset::is_theta_dominant(const VecQ& v) const {
    for (int i : idx_)
        if (dot(v, rs_->simple_root(i)).sign() < 0) return false;
    return true;
}

VecQ ThetaSubset::theta_antidominant_rep(VecQ v) const {
    for (;;) {
        int pos = 0;
        for (int i : idx_)
            if (dot(v, rs_->simple_root(i)).sign() > 0) {
                pos = i;
                break;
            }
        if (!pos) return v;
        v = rs_->simple_reflect(pos, v);
    }
}

VecQ ThetaSubset::theta_dominant_rep(VecQ v) const {
    for (;;) {
        int neg = 0;
        for (int i : idx_)
            if (dot(v, rs_->simple_root(i)).sign() < 0) {
                neg = i;
                break;
            }
        if (!neg) return v;
        v = rs_->simple_reflect(neg, v);
    }
}

VecQ ThetaSubset::lambda_theta(const Assignment& lambda) const {
    VecQ v(rs_->ambient_dim(), Rational(0));
    for (int j : free_vars_) {
        auto it = lambda.find(j);
        if (it == lambda.end())
            throw std::invalid_argument("lambda assignment missing variable " + std::to_string(j));
        v = v + it->second * rs_->fundamental_weight(j);
    }
    return v;
}

}  // namespace minverma
