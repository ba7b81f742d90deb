#include "dvfactor/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dvfactor/errors.hpp"

namespace dvfactor {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void check_leading(const ValuationProfile& p, std::vector<Hypothesis>& hs) {
    const ValInt& lead = p.vals[p.n];
    hs.push_back({"v(a_n) = 0", lead == ValInt(0), "v(a_n) = " + lead.to_string()});
}

std::optional<std::size_t> check_dominant(const ValuationProfile& p, std::vector<Hypothesis>& hs) {
    const auto s = dominant_index(p);
    const std::string label = "(a) strictly dominant slope m_s";
    if (s) {
        hs.push_back({label, true, "s = " + str(*s) + ", m_s = " + slope_at(p, *s).display()});
        return s;
    }
    const Slope top = newton_index(p);
    if (top.is_neg_infinity()) {
        hs.push_back({label, false, "every slope is -inf"});
        return std::nullopt;
    }
    std::ostringstream at;
    bool first = true;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (slope_at(p, i) != top) continue;
        at << (first ? "" : ", ") << i;
        first = false;
    }
    hs.push_back({label, false, "maximum slope " + top.display() + " attained at indices {" + at.str() + "}"});
    return std::nullopt;
}

Verdict first_failure(const std::vector<Hypothesis>& hs) {
    for (const auto& h : hs)
        if (!h.passed) return Inconclusive{h.label + " fails: " + h.detail};
    throw ArithmeticError("first_failure called with all hypotheses passing");
}

bool all_pass(const std::vector<Hypothesis>& hs) {
    return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.passed; });
}

// (n-s)*y_0 - n*y_s against the requested right-hand side; y_0 must be finite.
ConditionB integer_condition_b(const ValuationProfile& p, std::size_t s, const BigInt& rhs) {
    const BigInt n(static_cast<unsigned long>(p.n));
    const BigInt ns(static_cast<unsigned long>(p.n - s));
    ConditionB cb;
    cb.lhs = ns * p.vals[0].value() - n * p.vals[s].value();
    cb.rhs = rhs;
    const Slope m0 = slope_at(p, 0);
    const Slope ms = slope_at(p, s);
    Rational form = -Rational(n * ns) * (m0.value() - ms.value());
    form.canonicalize();
    cb.slope_form = form;
    return cb;
}

std::string condition_b_detail(const ConditionB& cb) {
    return "(n-s)*y_0 - n*y_s = " + cb.lhs.get_str() + ", required " + cb.rhs.get_str() +
           "; -n(n-s)(m_0 - m_s) = " + cb.slope_form->get_str();
}

}  // namespace

std::size_t gcd_with_valuation(std::size_t k, const BigInt& v) {
    BigInt g;
    const BigInt kk(static_cast<unsigned long>(k));
    mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), v.get_mpz_t());
    return g.get_ui();
}

std::string describe(const Verdict& verdict) {
    struct Visitor {
        std::string operator()(const Irreducible&) const { return "Irreducible"; }
        std::string operator()(const FactorDegreeMultipleOf& v) const {
            return "FactorDegreeMultipleOf(" + str(v.m) + ")";
        }
        std::string operator()(const MaxFactorDegreeAtLeast& v) const {
            return "MaxFactorDegreeAtLeast(" + str(v.bound) + ")";
        }
        std::string operator()(const MinFactorDegreeAtMost& v) const {
            return "MinFactorDegreeAtMost(" + str(v.s) + ")";
        }
        std::string operator()(const Inconclusive& v) const { return "Inconclusive(" + v.reason + ")"; }
    };
    return std::visit(Visitor{}, verdict);
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::theorem_1: return "theorem_1";
        case Criterion::theorem_a: return "theorem_A";
        case Criterion::weintraub: return "weintraub";
        case Criterion::theorem_2: return "theorem_2";
    }
    return "unknown";
}

CriterionReport check_theorem_1(const ValuationProfile& p) {
    CriterionReport r{Criterion::theorem_1, {}, {}, {}, {}, Inconclusive{}};
    check_leading(p, r.hypotheses);
    r.s = check_dominant(p, r.hypotheses);
    if (r.s) {
        const std::size_t s = *r.s;
        const std::size_t d = gcd_with_valuation(p.n - s, p.vals[s].value());
        r.d_s = d;
        if (s == 0) {
            // The s = 0 case asks only for gcd(n, v(a_0)) = 1.
            r.condition_b = ConditionB{BigInt(static_cast<unsigned long>(d)), BigInt(1), std::nullopt};
            r.hypotheses.push_back({"(b) d_0 = gcd(n, v(a_0)) = 1", d == 1,
                                    "d_0 = gcd(" + str(p.n) + ", " + p.vals[0].to_string() + ") = " + str(d)});
        } else if (p.vals[0].is_infinite()) {
            r.hypotheses.push_back({"(b) (n-s)*y_0 - n*y_s = d_s", false, "a_0 = 0, so m_0 = -inf"});
        } else {
            r.condition_b = integer_condition_b(p, s, BigInt(static_cast<unsigned long>(d)));
            r.hypotheses.push_back({"(b) (n-s)*y_0 - n*y_s = d_s", r.condition_b->lhs == r.condition_b->rhs,
                                    condition_b_detail(*r.condition_b) + ", d_s = " + str(d)});
        }
    }
    if (!all_pass(r.hypotheses)) {
        r.verdict = first_failure(r.hypotheses);
    } else if (*r.s == 0) {
        r.verdict = Irreducible{};
    } else {
        r.verdict = FactorDegreeMultipleOf{(p.n - *r.s) / *r.d_s};
    }
    return r;
}

CriterionReport check_theorem_A(const ValuationProfile& p) {
    CriterionReport r{Criterion::theorem_a, {}, {}, {}, {}, Inconclusive{}};
    check_leading(p, r.hypotheses);
    r.s = check_dominant(p, r.hypotheses);
    if (r.s) {
        const std::size_t s = *r.s;
        r.d_s = gcd_with_valuation(p.n - s, p.vals[s].value());
        if (s == 0) {
            r.hypotheses.push_back({"s != 0", false, "s=0 unsupported by Theorem A"});
        } else if (p.vals[0].is_infinite()) {
            r.hypotheses.push_back({"(b) (n-s)*y_0 - n*y_s = 1", false, "a_0 = 0, so m_0 = -inf"});
        } else {
            r.condition_b = integer_condition_b(p, s, BigInt(1));
            r.hypotheses.push_back({"(b) (n-s)*y_0 - n*y_s = 1", r.condition_b->lhs == 1,
                                    condition_b_detail(*r.condition_b)});
        }
    }
    if (!all_pass(r.hypotheses)) {
        r.verdict = first_failure(r.hypotheses);
    } else {
        r.verdict = FactorDegreeMultipleOf{p.n - *r.s};
    }
    return r;
}

CriterionReport check_weintraub(const ValuationProfile& p) {
    CriterionReport r{Criterion::weintraub, {}, {}, {}, {}, Inconclusive{}};
    check_leading(p, r.hypotheses);
    r.s = check_dominant(p, r.hypotheses);
    if (r.s) {
        const std::size_t s = *r.s;
        const std::size_t d = gcd_with_valuation(p.n - s, p.vals[s].value());
        r.d_s = d;
        r.hypotheses.push_back({"gcd(|v(a_s)|, n-s) = 1", d == 1,
                                "gcd(|" + p.vals[s].to_string() + "|, " + str(p.n - s) + ") = " + str(d)});
    }
    r.verdict = all_pass(r.hypotheses) ? Verdict{MinFactorDegreeAtMost{*r.s}} : first_failure(r.hypotheses);
    return r;
}

CriterionReport check_theorem_2(const ValuationProfile& p) {
    CriterionReport r{Criterion::theorem_2, {}, {}, {}, {}, Inconclusive{}};
    check_leading(p, r.hypotheses);
    r.s = check_dominant(p, r.hypotheses);
    if (r.s) {
        const std::size_t s = *r.s;
        const std::size_t d = gcd_with_valuation(p.n - s, p.vals[s].value());
        r.d_s = d;
        // d_s > 1 follows from degree counting alone; d_s = 1 is the coprime case.
        r.hypotheses.push_back({"d_s = gcd(n-s, |v(a_s)|)", true,
                                "d_s = " + str(d) + (d > 1 ? " > 1 (degree-counting branch)" : " (coprime branch)")});
    }
    r.verdict = all_pass(r.hypotheses) ? Verdict{MaxFactorDegreeAtLeast{(p.n - *r.s) / *r.d_s}}
                                       : first_failure(r.hypotheses);
    return r;
}

StrongestVerdict strongest_verdict(const std::vector<CriterionReport>& reports) {
    std::optional<std::size_t> modulus, max_bound, min_bound;
    for (const auto& r : reports) {
        if (std::holds_alternative<Irreducible>(r.verdict)) return {{Irreducible{}}};
        if (const auto* v = std::get_if<FactorDegreeMultipleOf>(&r.verdict))
            modulus = std::max(modulus.value_or(0), v->m);
        if (const auto* v = std::get_if<MaxFactorDegreeAtLeast>(&r.verdict))
            max_bound = std::max(max_bound.value_or(0), v->bound);
        if (const auto* v = std::get_if<MinFactorDegreeAtMost>(&r.verdict))
            min_bound = min_bound ? std::min(*min_bound, v->s) : v->s;
    }
    if (modulus) return {{FactorDegreeMultipleOf{*modulus}}};
    StrongestVerdict out;
    if (max_bound) out.verdicts.emplace_back(MaxFactorDegreeAtLeast{*max_bound});
    if (min_bound) out.verdicts.emplace_back(MinFactorDegreeAtMost{*min_bound});
    if (out.verdicts.empty()) out.verdicts.emplace_back(Inconclusive{"no criterion applies"});
    return out;
}

const CriterionReport& AnalysisReport::report(Criterion c) const {
    for (const auto& r : criteria)
        if (r.criterion == c) return r;
    throw ArgumentError("criterion " + criterion_name(c) + " missing from report");
}

AnalysisReport analyze(const ValuationProfile& profile) {
    std::vector<Slope> slopes;
    slopes.reserve(profile.n);
    for (std::size_t i = 0; i < profile.n; ++i) slopes.push_back(slope_at(profile, i));
    std::vector<CriterionReport> reports{check_theorem_1(profile), check_theorem_A(profile), check_weintraub(profile),
                                         check_theorem_2(profile)};
    StrongestVerdict strongest = strongest_verdict(reports);
    return AnalysisReport{profile,          std::move(slopes),       newton_index(profile), dominant_index(profile),
                          lower_hull(profile), std::move(reports), std::move(strongest)};
}

}  // namespace dvfactor
