#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dvfactor/criteria.hpp"
#include "dvfactor/oracle.hpp"

namespace dvfactor {

struct CriterionValidation {
    Criterion criterion;
    ValidationReport report;
};

/// Oracle cross-check of every criterion for an integer polynomial, plus the
/// kappa trace of each bipartition when theorem 1 passes with s >= 1.
struct UnivariateVerification {
    Factorization factorization;
    std::vector<FactorPair> pairs;
    std::vector<CriterionValidation> validations;
    std::optional<std::size_t> kappa_s;
    std::optional<std::size_t> kappa_d;
    std::vector<KappaCheck> kappas;
    bool validated = true;
};

UnivariateVerification verify_univariate(const IntPoly& f, const DiscreteValuation& v, const AnalysisReport& analysis,
                                         const FactorizationLimits& limits = {});

struct BivariateVerification {
    SpecializationEvidence evidence;
    std::vector<std::pair<Criterion, EvidenceStatus>> statuses;
    bool contradicted = false;
};

BivariateVerification verify_bivariate(const BiPoly& z, const AnalysisReport& analysis,
                                       const FactorizationLimits& limits = {});

}  // namespace dvfactor
