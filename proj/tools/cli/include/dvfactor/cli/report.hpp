#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "dvfactor/criteria.hpp"
#include "dvfactor/valuation.hpp"
#include "dvfactor/verify.hpp"

namespace dvfactor::cli {

using Json = nlohmann::ordered_json;

/// Everything one invocation learned about one polynomial.
struct Outcome {
    std::variant<IntPoly, BiPoly> poly;
    DiscreteValuation valuation;
    AnalysisReport analysis;
    std::optional<UnivariateVerification> univariate;
    std::optional<BivariateVerification> bivariate;

    bool validated() const;
};

Outcome run_analysis(std::variant<IntPoly, BiPoly> poly, const DiscreteValuation& valuation);

std::string display(const std::variant<IntPoly, BiPoly>& poly);

Json slope_json(const Slope& s);
Json verdict_json(const Verdict& v);
Json to_json(const Outcome& outcome);
std::string render_text(const Outcome& outcome);

}  // namespace dvfactor::cli
