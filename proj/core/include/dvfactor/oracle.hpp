#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvfactor/criteria.hpp"
#include "dvfactor/newton.hpp"
#include "dvfactor/poly.hpp"
#include "dvfactor/valuation.hpp"

namespace dvfactor {

struct FactorizationLimits {
    std::size_t max_degree = 8;
    BigInt max_abs_coefficient{1000000};
    /// Cap on divisor combinations tried for one candidate degree.
    std::size_t max_sample_divisors = 100000;
};

/// content * product(factors) == f. Factors are primitive, have positive
/// leading coefficient, are irreducible over Q, and are sorted canonically
/// (repeated factors appear with multiplicity).
struct Factorization {
    BigInt content;
    std::vector<IntPoly> factors;

    IntPoly product() const;
};

/// Kronecker's interpolation method. Throws ResourceError past any limit.
Factorization kronecker_factor(const IntPoly& f, const FactorizationLimits& limits = {});

/// A witnessed split f = g*h with k1 = deg g <= k2 = deg h and x_i = v(f_i(0)).
struct FactorPair {
    IntPoly g;
    IntPoly h;
    std::size_t k1;
    std::size_t k2;
    ValInt x1;
    ValInt x2;
};

/// Every unordered split of the irreducible-factor multiset into two nonempty
/// parts, reported once each. The content is folded into g so g*h == f.
std::vector<FactorPair> bipartitions(const Factorization& factorization, const DiscreteValuation& v);
std::vector<FactorPair> bipartitions(const IntPoly& f, const DiscreteValuation& v,
                                     const FactorizationLimits& limits = {});

/// Whether a factorization with degrees k1 <= k2 is allowed by the verdict.
bool split_satisfies(const Verdict& verdict, std::size_t k1, std::size_t k2);

struct BipartitionCheck {
    std::size_t k1;
    std::size_t k2;
    bool passed;
};

struct ValidationReport {
    Verdict verdict;
    std::size_t factor_count = 0;
    std::vector<BipartitionCheck> checks;
    bool valid = true;
};

ValidationReport validate_verdict(const Verdict& verdict, const Factorization& factorization,
                                  std::span<const FactorPair> pairs);
ValidationReport validate_verdict(const IntPoly& f, const DiscreteValuation& v, const CriterionReport& report,
                                  const FactorizationLimits& limits = {});

/// kappa = ((n-s)/d_s) * x2 - k2 * (y_s/d_s), exact. Throws ArgumentError when
/// x2 or y_s is infinite, s is out of range, or d_s fails to divide n-s or y_s.
BigInt kappa_trace(const ValuationProfile& profile, const FactorPair& pair, std::size_t s, std::size_t d_s);

struct KappaCheck {
    BigInt kappa;
    /// kappa in {0, 1}
    bool in_range;
    /// (n-s)/d_s divides k2 when kappa = 0, k1 when kappa = 1.
    bool divisibility;

    bool passed() const { return in_range && divisibility; }
};

KappaCheck check_kappa(const ValuationProfile& profile, const FactorPair& pair, std::size_t s, std::size_t d_s);

/// Factorization of Z(x0, y) at one sample point.
struct SpecializationSample {
    BigInt x0;
    IntPoly specialization;
    std::optional<Factorization> factorization;
    std::string error;
    /// Subset sums of the factor degrees strictly between 0 and deg.
    std::vector<std::size_t> achievable_degrees;

    bool irreducible() const { return factorization && factorization->factors.size() == 1; }
};

enum class EvidenceStatus { certified_irreducible, consistent, inconsistent, unavailable };
std::string evidence_status_name(EvidenceStatus status);

struct SpecializationEvidence {
    std::size_t degree_y = 0;
    std::vector<SpecializationSample> samples;
    /// Y-degrees a factor of Z could still have, given every sample.
    std::vector<std::size_t> possible_degrees;

    bool certified_irreducible() const;
    EvidenceStatus judge(const Verdict& verdict) const;
};

std::vector<long> default_specialization_points();

/// Specializes a monic-in-y Z at each point and factors the result. The
/// degree limit is raised to deg_y Z for this protocol.
SpecializationEvidence specialization_evidence(const BiPoly& z, std::span<const long> points,
                                               const FactorizationLimits& limits = {});

}  // namespace dvfactor
