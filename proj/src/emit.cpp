#include "minverma/emit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace minverma {

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.num().get_str();
    std::string s;
    if (r.sign() < 0) s += "-";
    s += "\\frac{" + abs(r).num().get_str() + "}{" + r.den().get_str() + "}";
    return s;
}

namespace {

/// abs-value LaTeX with a separate sign, for "+ c" / "- c" placement.
std::pair<int, std::string> latex_signed(const Rational& r) {
    Rational a = abs(r);
    if (a.is_integer()) return {r.sign(), a.num().get_str()};
    return {r.sign(), "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}"};
}

std::string var_name(int j, const LatexOptions& opt) {
    auto it = opt.var_names.find(j);
    if (it != opt.var_names.end()) return it->second;
    if (opt.single_lambda) return "\\lambda";
    return "\\lambda_{" + std::to_string(j) + "}";
}

bool factor_before(const LinearForm& a, const LinearForm& b) {
    std::set<int> vars;
    for (const auto& [j, c] : a.coeffs()) vars.insert(j);
    for (const auto& [j, c] : b.coeffs()) vars.insert(j);
    for (int j : vars) {
        Rational ca = a.coeff(j), cb = b.coeff(j);
        if (ca != cb) return ca > cb;  // larger coefficient first
    }
    return a.constant() < b.constant();
}

/// Terms of "x - root": "(x" then the lambda terms of -root, then -constant.
std::string latex_x_minus(const LinearForm& root, const LatexOptions& opt) {
    std::string s = "(x";
    for (const auto& [j, c] : root.coeffs()) {
        auto [sign, mag] = latex_signed(-c);
        s += sign < 0 ? " - " : " + ";
        if (mag != "1") s += mag;
        s += var_name(j, opt);
    }
    if (!root.constant().is_zero()) {
        auto [sign, mag] = latex_signed(-root.constant());
        s += sign < 0 ? " - " : " + ";
        s += mag;
    }
    s += ")";
    return s;
}

std::string latex_linear(const LinearForm& f, const LatexOptions& opt) {
    std::string s;
    bool first = true;
    for (const auto& [j, c] : f.coeffs()) {
        auto [sign, mag] = latex_signed(c);
        if (first) {
            if (sign < 0) s += "-";
        } else {
            s += sign < 0 ? " - " : " + ";
        }
        if (mag != "1") s += mag;
        s += var_name(j, opt);
        first = false;
    }
    if (!f.constant().is_zero() || first) {
        auto [sign, mag] = latex_signed(f.constant());
        if (first) {
            if (sign < 0) s += "-";
        } else {
            s += sign < 0 ? " - " : " + ";
        }
        s += mag;
    }
    return s;
}

}  // namespace

std::vector<std::pair<LinearForm, unsigned>> canonical_factor_order(const FactoredPoly& p) {
    std::vector<std::pair<LinearForm, unsigned>> v(p.factors().begin(), p.factors().end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return factor_before(a.first, b.first); });
    return v;
}

std::string latex_factored(const FactoredPoly& p, const LatexOptions& opt) {
    if (p.is_one()) return "1";
    std::string s;
    for (const auto& [root, m] : canonical_factor_order(p)) {
        s += latex_x_minus(root, opt);
        if (m > 1) s += "^{" + std::to_string(m) + "}";
    }
    return s;
}

std::string latex_factor_product(const FactorProduct& p, const LatexOptions& opt) {
    if (p.identically_zero()) return "0";
    std::string s;
    if (p.scale() == Rational(-1) && !p.factors().empty())
        s += "-";
    else if (p.scale() != Rational(1) || p.factors().empty())
        s += latex_rational(p.scale());
    std::vector<std::pair<LinearForm, unsigned>> v(p.factors().begin(), p.factors().end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return factor_before(a.first, b.first); });
    for (const auto& [f, m] : v) {
        s += "(" + latex_linear(f, opt) + ")";
        if (m > 1) s += "^{" + std::to_string(m) + "}";
    }
    return s;
}

FactoredPoly substitute_vars(const FactoredPoly& p, const std::map<int, LinearForm>& subst) {
    FactoredPoly out;
    for (const auto& [root, m] : p.factors()) out.add_factor(substitute_vars(root, subst), m);
    return out;
}

FactorProduct substitute_vars(const FactorProduct& p, const std::map<int, LinearForm>& subst) {
    FactorProduct out(p.scale());
    for (const auto& [f, m] : p.factors()) out.mul_form(substitute_vars(f, subst), m);
    for (unsigned k = 0; k < p.zero_factor_count(); ++k) out.mul_form(LinearForm());
    return out;
}

nlohmann::ordered_json json_linear_form(const LinearForm& f) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [j, c] : f.coeffs()) coeffs[std::to_string(j)] = c.str();
    return {{"constant", f.constant().str()}, {"coeffs", coeffs}};
}

nlohmann::ordered_json json_factored(const FactoredPoly& p) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [root, m] : canonical_factor_order(p)) {
        nlohmann::ordered_json f = json_linear_form(root);
        f["mult"] = m;
        factors.push_back(std::move(f));
    }
    return {{"factors", factors}};
}

nlohmann::ordered_json json_factor_product(const FactorProduct& p) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [f, m] : p.factors()) {
        nlohmann::ordered_json j = json_linear_form(f);
        j["mult"] = m;
        factors.push_back(std::move(j));
    }
    return {{"scale", p.scale().str()},
            {"identically_zero", p.identically_zero()},
            {"factors", factors}};
}

namespace {

nlohmann::ordered_json json_vec(const VecQ& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

nlohmann::ordered_json json_weight_system(const WeightSystem& ws) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const auto& w : ws.weights())
        weights.push_back({{"eps", json_vec(w)}, {"mult", ws.mult(w)}});
    return {{"highest", json_vec(ws.highest())},
            {"dim", ws.dim().get_str()},
            {"weights", weights}};
}

nlohmann::ordered_json json_branching(const ThetaSubset& ts, const BranchingResult& br) {
    nlohmann::ordered_json theta = nlohmann::ordered_json::array();
    for (int i : ts.indices()) theta.push_back(i);
    nlohmann::ordered_json lowest = nlohmann::ordered_json::array();
    for (const auto& c : br.components)
        lowest.push_back({{"eps", json_vec(c.lowest)}, {"count", c.count}});
    return {{"theta", theta}, {"lowest", lowest}};
}

nlohmann::ordered_json json_certificate(const ThetaSubset& ts, const GapCertificate& cert) {
    nlohmann::ordered_json theta = nlohmann::ordered_json::array();
    for (int i : ts.indices()) theta.push_back(i);
    nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
    for (const auto& ar : cert.alpha_results) {
        nlohmann::ordered_json cands = nlohmann::ordered_json::array();
        for (const auto& c : ar.candidates) {
            nlohmann::ordered_json r_factors = nlohmann::ordered_json::array();
            for (const auto& [f, m] : c.r.factors()) {
                nlohmann::ordered_json j = json_linear_form(f);
                j["mult"] = m;
                r_factors.push_back(std::move(j));
            }
            nlohmann::ordered_json cand = {{"r_scale", c.r.scale().str()},
                                           {"r_factors", r_factors},
                                           {"identically_zero", c.identically_zero}};
            if (c.value) cand["value"] = c.value->str();
            cands.push_back(std::move(cand));
        }
        alphas.push_back({{"alpha", ar.alpha}, {"candidates", cands}});
    }
    std::string verdict = cert.verdict == GapVerdict::Certified        ? "certified"
                          : cert.verdict == GapVerdict::NotCertified   ? "not_certified"
                                                                       : "uncertifiable";
    return {{"theta", theta},
            {"alpha_results", alphas},
            {"verdict", verdict},
            {"annihilator_equality", cert.annihilator_equality}};
}

nlohmann::ordered_json json_min_poly_at(const MinPolyAt& at) {
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const auto& [v, m] : at.roots) roots.push_back({{"root", v.str()}, {"mult", m}});
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& c : at.classes) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (const auto& w : c.weights) members.push_back(json_vec(w));
        classes.push_back({{"value", c.value.str()}, {"kappa", c.kappa}, {"members", members}});
    }
    nlohmann::ordered_json ann = nlohmann::ordered_json::array();
    for (const auto& [v, k] : at.annihilator) ann.push_back({{"root", v.str()}, {"power", k}});
    return {{"roots", roots}, {"minimal", at.minimal}, {"classes", classes},
            {"annihilator", ann}};
}

std::string poset_dot(const WeightSystem& ws) {
    std::ostringstream os;
    os << "digraph weights {\n  rankdir=BT;\n";
    for (const auto& w : ws.weights()) {
        os << "  \"" << to_string(w) << "\"";
        if (ws.mult(w) > 1) os << " [label=\"" << to_string(w) << " x" << ws.mult(w) << "\"]";
        os << ";\n";
    }
    for (const auto& [lower, i] : ws.poset_edges()) {
        VecQ upper = lower + ws.root_system().simple_root(i);
        os << "  \"" << to_string(lower) << "\" -> \"" << to_string(upper) << "\" [label=\"a"
           << i << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace minverma
