#include <doctest.h>

#include <random>

#include "dvfactor/criteria.hpp"
#include "support.hpp"

using namespace dvfactor;

namespace {

const ValInt inf = ValInt::infinity();
const auto v2 = DiscreteValuation::padic(2);

ValuationProfile prof(const IntPoly& f, long p = 2) { return valuation_profile(f, DiscreteValuation::padic(p)); }

const IntPoly family_x{8, 4, 32, 0, 0, 1};             // x^5 + 32x^2 + 4x + 8
const IntPoly family_y{16, 0, 4, 64, 0, 0, 1};         // x^6 + 64x^3 + 4x^2 + 16
const IntPoly eisenstein3{-2, 0, 0, 1};                // x^3 - 2
const IntPoly constructed{4, 2, 0, 1};                 // x^3 + 2x + 4

BiPoly family_z() {
    return BiPoly({IntPoly{1, 0, 1}, IntPoly{1, 1, 1}, IntPoly{}, IntPoly{}, IntPoly{}, IntPoly{1}});
}

template <class V>
const V& as(const Verdict& v) {
    REQUIRE(std::holds_alternative<V>(v));
    return std::get<V>(v);
}

}  // namespace

TEST_CASE("theorem 1 on family X (p=2, n=5)") {
    const auto r = check_theorem_1(prof(family_x));
    CHECK(r.s == std::optional<std::size_t>(1));
    CHECK(r.d_s == std::optional<std::size_t>(2));
    REQUIRE(r.condition_b);
    CHECK(r.condition_b->lhs == 4 * 3 - 5 * 2);
    CHECK(r.condition_b->rhs == 2);
    CHECK(as<FactorDegreeMultipleOf>(r.verdict).m == 2);
}

TEST_CASE("theorem 1 on x^3 - 2 is Eisenstein") {
    const auto r = check_theorem_1(prof(eisenstein3));
    CHECK(r.s == std::optional<std::size_t>(0));
    CHECK(r.d_s == std::optional<std::size_t>(1));
    CHECK(std::holds_alternative<Irreducible>(r.verdict));
}

TEST_CASE("theorem 1 on family Y reproduces the printed-example inconsistency") {
    const auto p = prof(family_y);
    CHECK(p.vals == std::vector<ValInt>{4, inf, 2, 6, inf, inf, 0});
    const auto r = check_theorem_1(p);
    CHECK(r.s == std::optional<std::size_t>(2));
    CHECK(r.d_s == std::optional<std::size_t>(2));
    REQUIRE(r.condition_b);
    CHECK(r.condition_b->lhs == 4 * 4 - 6 * 2);
    CHECK(r.condition_b->rhs == 2);
    CHECK(is_inconclusive(r.verdict));
    const auto& reason = as<Inconclusive>(r.verdict).reason;
    CHECK(reason.find("= 4") != std::string::npos);
    CHECK(reason.find("required 2") != std::string::npos);
}

TEST_CASE("theorem 1 on family Z under the degree valuation") {
    const auto r = check_theorem_1(valuation_profile(family_z(), DiscreteValuation::degree()));
    CHECK(r.s == std::optional<std::size_t>(1));
    CHECK(r.d_s == std::optional<std::size_t>(2));
    REQUIRE(r.condition_b);
    CHECK(r.condition_b->lhs == 4 * (-2) - 5 * (-2));
    CHECK(as<FactorDegreeMultipleOf>(r.verdict).m == 2);
}

TEST_CASE("theorem 1 hypothesis failures are data") {
    // leading coefficient 2: v(a_n) = 1
    const auto r = check_theorem_1(prof(IntPoly{1, 1, 2}));
    CHECK(is_inconclusive(r.verdict));
    CHECK(r.hypotheses.front().passed == false);
    CHECK(as<Inconclusive>(r.verdict).reason.rfind("v(a_n) = 0", 0) == 0);
    // a_0 = 0 with s >= 1: x^3 + 2x
    const auto z = check_theorem_1(prof(IntPoly{0, 2, 0, 1}));
    CHECK(z.s == std::optional<std::size_t>(1));
    CHECK(is_inconclusive(z.verdict));
    CHECK_FALSE(z.condition_b.has_value());
}

TEST_CASE("theorem A examples") {
    const auto a = check_theorem_A(prof(constructed));
    CHECK(a.s == std::optional<std::size_t>(1));
    REQUIRE(a.condition_b);
    CHECK(a.condition_b->lhs == 2 * 2 - 3 * 1);
    CHECK(as<FactorDegreeMultipleOf>(a.verdict).m == 2);

    const auto x = check_theorem_A(prof(family_x));
    REQUIRE(x.condition_b);
    CHECK(x.condition_b->lhs == 2);
    CHECK(is_inconclusive(x.verdict));

    const auto e = check_theorem_A(prof(eisenstein3));
    CHECK(e.s == std::optional<std::size_t>(0));
    CHECK(as<Inconclusive>(e.verdict).reason.find("s=0 unsupported by Theorem A") != std::string::npos);
}

TEST_CASE("weintraub examples") {
    CHECK(as<MinFactorDegreeAtMost>(check_weintraub(prof(constructed)).verdict).s == 1);
    CHECK(as<MinFactorDegreeAtMost>(check_weintraub(prof(eisenstein3)).verdict).s == 0);
    const auto x = check_weintraub(prof(family_x));
    CHECK(x.d_s == std::optional<std::size_t>(2));
    CHECK(is_inconclusive(x.verdict));
}

TEST_CASE("theorem 2 examples") {
    CHECK(as<MaxFactorDegreeAtLeast>(check_theorem_2(prof(family_y)).verdict).bound == (6 - 2) / 2);
    CHECK(as<MaxFactorDegreeAtLeast>(check_theorem_2(prof(constructed)).verdict).bound == 2);
    CHECK(is_inconclusive(check_theorem_2(prof(IntPoly{1, 1, 1})).verdict));
}

TEST_CASE("analyze picks the strongest verdict") {
    CHECK(std::holds_alternative<Irreducible>(analyze(prof(eisenstein3)).strongest.verdicts.at(0)));
    const auto x = analyze(prof(family_x)).strongest.verdicts;
    REQUIRE(x.size() == 1);
    CHECK(as<FactorDegreeMultipleOf>(x[0]).m == 2);
    const auto tie = analyze(prof(IntPoly{1, 1, 1})).strongest.verdicts;
    REQUIRE(tie.size() == 1);
    CHECK(is_inconclusive(tie[0]));
    // Family Y: bounds only, reported jointly (Weintraub fails, so just the max bound).
    const auto y = analyze(prof(family_y)).strongest.verdicts;
    REQUIRE(y.size() == 1);
    CHECK(as<MaxFactorDegreeAtLeast>(y[0]).bound == 2);
}

TEST_CASE("strongest_verdict ordering and ties") {
    auto rep = [](Verdict v) { return CriterionReport{Criterion::theorem_1, {}, {}, {}, {}, std::move(v)}; };
    auto s = strongest_verdict({rep(FactorDegreeMultipleOf{2}), rep(FactorDegreeMultipleOf{3}),
                                rep(MaxFactorDegreeAtLeast{4})});
    REQUIRE(s.verdicts.size() == 1);
    CHECK(as<FactorDegreeMultipleOf>(s.verdicts[0]).m == 3);
    s = strongest_verdict({rep(MinFactorDegreeAtMost{2}), rep(MaxFactorDegreeAtLeast{4}), rep(Inconclusive{"x"})});
    REQUIRE(s.verdicts.size() == 2);
    CHECK(as<MaxFactorDegreeAtLeast>(s.verdicts[0]).bound == 4);
    CHECK(as<MinFactorDegreeAtMost>(s.verdicts[1]).s == 2);
    s = strongest_verdict({rep(FactorDegreeMultipleOf{2}), rep(Irreducible{})});
    CHECK(std::holds_alternative<Irreducible>(s.verdicts.at(0)));
}

TEST_CASE("gcd_with_valuation uses magnitudes") {
    CHECK(gcd_with_valuation(4, BigInt(-2)) == 2);
    CHECK(gcd_with_valuation(6, BigInt(0)) == 6);
    CHECK(gcd_with_valuation(5, BigInt(3)) == 1);
}

TEST_CASE("criteria invariants on random profiles") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> nd(1, 10), vd(0, 15), zero(0, 4), lead(0, 5);
    int theorem_a_passes = 0, s0_cases = 0;
    for (int t = 0; t < 5000; ++t) {
        const int n = nd(rng);
        std::vector<ValInt> vals;
        for (int i = 0; i < n; ++i) vals.push_back(zero(rng) == 0 ? inf : ValInt(vd(rng)));
        vals.push_back(lead(rng) == 0 ? ValInt(1) : ValInt(0));
        const auto p = ValuationProfile::from_values(vals);
        const bool unit_lead = vals.back() == ValInt(0);

        for (const auto& r : {check_theorem_1(p), check_theorem_A(p), check_weintraub(p), check_theorem_2(p)}) {
            bool any_fail = false;
            for (const auto& h : r.hypotheses) any_fail = any_fail || !h.passed;
            CHECK(is_inconclusive(r.verdict) == any_fail);
            if (const auto* m = std::get_if<FactorDegreeMultipleOf>(&r.verdict)) {
                CHECK(m->m >= 1);
                CHECK(m->m <= p.n);
            }
            if (const auto* b = std::get_if<MaxFactorDegreeAtLeast>(&r.verdict)) CHECK(b->bound <= p.n);
            // Integer form against -n(n-s)(m_0 - m_s) in rationals.
            if (r.condition_b && r.condition_b->slope_form && unit_lead)
                CHECK(Rational(r.condition_b->lhs) == *r.condition_b->slope_form);
        }

        const auto t1 = check_theorem_1(p);
        const auto ta = check_theorem_A(p);
        if (ta.passed()) {
            ++theorem_a_passes;
            REQUIRE(t1.passed());
            CHECK(t1.d_s == std::optional<std::size_t>(1));
            CHECK(std::get<FactorDegreeMultipleOf>(t1.verdict).m == std::get<FactorDegreeMultipleOf>(ta.verdict).m);
            CHECK(std::get<FactorDegreeMultipleOf>(ta.verdict).m == p.n - *ta.s);
        }

        // s = 0: passes iff gcd(n, v(a_0)) = 1, v(a_0) > 0 and every other slope is smaller.
        if (unit_lead && n >= 2 && vals[0].is_finite()) {
            const long y0 = vals[0].value().get_si();
            bool others_smaller = true;
            for (int i = 1; i < n; ++i) {
                if (vals[i].is_infinite()) continue;
                const testsupport::Fraction mi(-vals[i].value().get_si(), n - i), m0(-y0, n);
                others_smaller = others_smaller && mi < m0;
            }
            const bool expected = std::gcd(static_cast<long>(n), y0) == 1 && y0 > 0 && others_smaller;
            const bool got = t1.passed() && t1.s == std::optional<std::size_t>(0);
            CHECK(got == expected);
            s0_cases += expected;
        }
    }
    CHECK(theorem_a_passes > 10);
    CHECK(s0_cases > 10);
}
