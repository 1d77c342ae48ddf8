#ifndef MINVERMA_EMIT_HPP
#define MINVERMA_EMIT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "minverma/branching.hpp"
#include "minverma/factored_poly.hpp"
#include "minverma/gap.hpp"
#include "minverma/minpoly.hpp"
#include "minverma/weight_system.hpp"

namespace minverma {

struct LatexOptions {
    /// Print the single free variable as plain \lambda.
    bool single_lambda = false;
    /// Optional display names per variable id (overrides \lambda_{j}).
    std::map<int, std::string> var_names;
};

std::string latex_rational(const Rational& r);

/// Factors in canonical order: descending lambda coefficients (compared
/// variable by variable, ascending id), then ascending constant term.
std::vector<std::pair<LinearForm, unsigned>> canonical_factor_order(const FactoredPoly& p);

std::string latex_factored(const FactoredPoly& p, const LatexOptions& opt = {});
std::string latex_factor_product(const FactorProduct& p, const LatexOptions& opt = {});

/// Substitute variables in every factor.
FactoredPoly substitute_vars(const FactoredPoly& p, const std::map<int, LinearForm>& subst);
FactorProduct substitute_vars(const FactorProduct& p, const std::map<int, LinearForm>& subst);

nlohmann::ordered_json json_linear_form(const LinearForm& f);
nlohmann::ordered_json json_factored(const FactoredPoly& p);
nlohmann::ordered_json json_factor_product(const FactorProduct& p);
nlohmann::ordered_json json_weight_system(const WeightSystem& ws);
nlohmann::ordered_json json_branching(const ThetaSubset& ts, const BranchingResult& br);
nlohmann::ordered_json json_certificate(const ThetaSubset& ts, const GapCertificate& cert);
nlohmann::ordered_json json_min_poly_at(const MinPolyAt& at);

std::string poset_dot(const WeightSystem& ws);

}  // namespace minverma

#endif
