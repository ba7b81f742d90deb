#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dvfactor/newton.hpp"

namespace dvfactor {

struct Irreducible {
    friend bool operator==(const Irreducible&, const Irreducible&) = default;
};
/// Every proper factorization has a factor whose degree is a multiple of m.
struct FactorDegreeMultipleOf {
    std::size_t m;
    friend bool operator==(const FactorDegreeMultipleOf&, const FactorDegreeMultipleOf&) = default;
};
struct MaxFactorDegreeAtLeast {
    std::size_t bound;
    friend bool operator==(const MaxFactorDegreeAtLeast&, const MaxFactorDegreeAtLeast&) = default;
};
struct MinFactorDegreeAtMost {
    std::size_t s;
    friend bool operator==(const MinFactorDegreeAtMost&, const MinFactorDegreeAtMost&) = default;
};
struct Inconclusive {
    std::string reason;
    friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using Verdict = std::variant<Irreducible, FactorDegreeMultipleOf, MaxFactorDegreeAtLeast, MinFactorDegreeAtMost,
                             Inconclusive>;

std::string describe(const Verdict& verdict);
inline bool is_inconclusive(const Verdict& v) { return std::holds_alternative<Inconclusive>(v); }

enum class Criterion { theorem_1, theorem_a, weintraub, theorem_2 };
std::string criterion_name(Criterion c);

struct Hypothesis {
    std::string label;
    bool passed;
    std::string detail;
};

/// Both sides of condition (b) in integer form, plus the slope form
/// -n(n-s)(m_0 - m_s) computed independently in rationals.
struct ConditionB {
    BigInt lhs;
    BigInt rhs;
    std::optional<Rational> slope_form;
};

struct CriterionReport {
    Criterion criterion;
    std::optional<std::size_t> s;
    std::optional<std::size_t> d_s;
    std::optional<ConditionB> condition_b;
    std::vector<Hypothesis> hypotheses;
    Verdict verdict;

    bool passed() const { return !is_inconclusive(verdict); }
};

CriterionReport check_theorem_1(const ValuationProfile& profile);
CriterionReport check_theorem_A(const ValuationProfile& profile);
CriterionReport check_weintraub(const ValuationProfile& profile);
CriterionReport check_theorem_2(const ValuationProfile& profile);

/// Strongest conclusion across criteria. Bounds are reported together, so
/// this may hold a MaxFactorDegreeAtLeast and a MinFactorDegreeAtMost at once.
struct StrongestVerdict {
    std::vector<Verdict> verdicts;
};

struct AnalysisReport {
    ValuationProfile profile;
    std::vector<Slope> slopes;
    Slope newton_index;
    std::optional<std::size_t> dominant_s;
    std::vector<PolygonVertex> hull;
    std::vector<CriterionReport> criteria;
    StrongestVerdict strongest;

    const CriterionReport& report(Criterion c) const;
};

StrongestVerdict strongest_verdict(const std::vector<CriterionReport>& reports);
AnalysisReport analyze(const ValuationProfile& profile);

/// gcd(k, |v|), with gcd(k, 0) = k.
std::size_t gcd_with_valuation(std::size_t k, const BigInt& v);

}  // namespace dvfactor
