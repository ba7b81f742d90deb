#include "dvfactor/verify.hpp"

namespace dvfactor {

UnivariateVerification verify_univariate(const IntPoly& f, const DiscreteValuation& v, const AnalysisReport& analysis,
                                         const FactorizationLimits& limits) {
    UnivariateVerification out;
    out.factorization = kronecker_factor(f, limits);
    out.pairs = bipartitions(out.factorization, v);
    for (const auto& r : analysis.criteria) {
        ValidationReport vr = validate_verdict(r.verdict, out.factorization, out.pairs);
        out.validated = out.validated && vr.valid;
        out.validations.push_back({r.criterion, std::move(vr)});
    }
    const CriterionReport& t1 = analysis.report(Criterion::theorem_1);
    if (t1.passed() && t1.s && *t1.s > 0) {
        out.kappa_s = t1.s;
        out.kappa_d = t1.d_s;
        for (const auto& pair : out.pairs) {
            KappaCheck k = check_kappa(analysis.profile, pair, *t1.s, *t1.d_s);
            out.validated = out.validated && k.passed();
            out.kappas.push_back(std::move(k));
        }
    }
    return out;
}

BivariateVerification verify_bivariate(const BiPoly& z, const AnalysisReport& analysis,
                                       const FactorizationLimits& limits) {
    BivariateVerification out;
    const auto points = default_specialization_points();
    out.evidence = specialization_evidence(z, points, limits);
    for (const auto& r : analysis.criteria) {
        const EvidenceStatus status = out.evidence.judge(r.verdict);
        out.contradicted = out.contradicted || status == EvidenceStatus::inconsistent;
        out.statuses.emplace_back(r.criterion, status);
    }
    return out;
}

}  // namespace dvfactor
