#include <doctest.h>

#include <algorithm>
#include <random>

#include "dvfactor/errors.hpp"
#include "dvfactor/newton.hpp"
#include "support.hpp"

using namespace dvfactor;
using testsupport::Fraction;

namespace {

const ValInt inf = ValInt::infinity();

ValuationProfile family_x_profile() { return valuation_profile(IntPoly{8, 4, 32, 0, 0, 1}, DiscreteValuation::padic(2)); }

Slope slope(long num, long den) { return Slope(BigInt(num), BigInt(den)); }

bool same(const Slope& s, const Fraction& f) {
    return !s.is_neg_infinity() && s.numerator() == BigInt(std::to_string(f.num)) &&
           s.denominator() == BigInt(std::to_string(f.den));
}

// Brute-force hull vertices: strictly below every chord spanning them.
std::vector<std::pair<long, long>> brute_hull(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        bool vertex = true;
        for (std::size_t a = 0; a < k && vertex; ++a)
            for (std::size_t b = k + 1; b < pts.size() && vertex; ++b) {
                // chord value at x_k compared exactly: (x_b - x_a) * y_k vs interpolated
                const long lhs = (pts[b].first - pts[a].first) * pts[k].second;
                const long rhs = (pts[b].first - pts[k].first) * pts[a].second +
                                 (pts[k].first - pts[a].first) * pts[b].second;
                if (lhs >= rhs) vertex = false;
            }
        if (vertex) out.push_back(pts[k]);
    }
    return out;
}

}  // namespace

TEST_CASE("valuation_profile examples") {
    const auto px = family_x_profile();
    CHECK(px.n == 5);
    CHECK(px.vals == std::vector<ValInt>{3, 2, 5, inf, inf, 0});

    const BiPoly z({IntPoly{1, 0, 1}, IntPoly{1, 1, 1}, IntPoly{}, IntPoly{}, IntPoly{}, IntPoly{1}});
    const auto pz = valuation_profile(z, DiscreteValuation::degree());
    CHECK(pz.n == 5);
    CHECK(pz.vals == std::vector<ValInt>{-2, -2, inf, inf, inf, 0});

    const auto pe = valuation_profile(IntPoly{-2, 0, 0, 1}, DiscreteValuation::padic(2));
    CHECK(pe.vals == std::vector<ValInt>{1, inf, inf, 0});
}

TEST_CASE("valuation_profile errors") {
    CHECK_THROWS_AS(valuation_profile(IntPoly{1, 1}, DiscreteValuation::degree()), ArgumentError);
    CHECK_THROWS_AS(valuation_profile(BiPoly::y_power(2), DiscreteValuation::padic(3)), ArgumentError);
    CHECK_THROWS_AS(valuation_profile(IntPoly{}, DiscreteValuation::padic(3)), ArgumentError);
    CHECK_THROWS_AS(valuation_profile(IntPoly{7}, DiscreteValuation::padic(3)), ArgumentError);
    CHECK_THROWS_AS(ValuationProfile::from_values({ValInt(1), inf}), ArgumentError);
}

TEST_CASE("slope_at examples") {
    const auto p = family_x_profile();
    CHECK(same(slope_at(p, 0), Fraction(0 - 3, 5)));
    CHECK(same(slope_at(p, 1), Fraction(0 - 2, 4)));
    CHECK(slope_at(p, 3).is_neg_infinity());
    CHECK_THROWS_AS(slope_at(p, 5), ArgumentError);
}

TEST_CASE("newton_index examples") {
    CHECK(newton_index(family_x_profile()) == slope(-1, 2));
    const auto pe = valuation_profile(IntPoly{-2, 0, 0, 1}, DiscreteValuation::padic(2));
    CHECK(newton_index(pe) == slope(-1, 3));
    const auto mono = valuation_profile(IntPoly::monomial(1, 5), DiscreteValuation::padic(2));
    CHECK(newton_index(mono).is_neg_infinity());
}

TEST_CASE("dominant_index examples") {
    CHECK(dominant_index(family_x_profile()) == std::optional<std::size_t>(1));
    CHECK(dominant_index(valuation_profile(IntPoly{-2, 0, 0, 1}, DiscreteValuation::padic(2))) ==
          std::optional<std::size_t>(0));
    // p(1 + x) + x^2 at p = 2 has vals [1, 1, 0]: m_0 = -1/2 beats m_1 = -1, so no tie there.
    const auto p_one_x = valuation_profile(IntPoly{2, 2, 1}, DiscreteValuation::padic(2));
    CHECK(p_one_x.vals == std::vector<ValInt>{1, 1, 0});
    CHECK(Fraction(-1, 1) < Fraction(-1, 2));
    CHECK(dominant_index(p_one_x) == std::optional<std::size_t>(0));
    // vals [2, 1, 0] give m_0 = m_1 = -1.
    const auto tie = ValuationProfile::from_values({ValInt(2), ValInt(1), ValInt(0)});
    CHECK(Fraction(0 - 2, 2) == Fraction(0 - 1, 1));
    CHECK_FALSE(dominant_index(tie).has_value());
    // x^2 + x + 1 at p = 2: m_0 = m_1 = 0.
    CHECK_FALSE(dominant_index(valuation_profile(IntPoly{1, 1, 1}, DiscreteValuation::padic(2))).has_value());
    const auto mono = valuation_profile(IntPoly::monomial(1, 5), DiscreteValuation::padic(2));
    CHECK_FALSE(dominant_index(mono).has_value());
}

TEST_CASE("lower_hull examples") {
    CHECK(lower_hull(family_x_profile()) ==
          std::vector<PolygonVertex>{{0, BigInt(3)}, {1, BigInt(2)}, {5, BigInt(0)}});
    CHECK(lower_hull(valuation_profile(IntPoly{-2, 0, 0, 1}, DiscreteValuation::padic(2))) ==
          std::vector<PolygonVertex>{{0, BigInt(1)}, {3, BigInt(0)}});
    CHECK(lower_hull(valuation_profile(IntPoly::monomial(1, 5), DiscreteValuation::padic(2))) ==
          std::vector<PolygonVertex>{{5, BigInt(0)}});
}

TEST_CASE("Slope order and normalization") {
    CHECK(slope(2, -4) == slope(-1, 2));
    CHECK(slope(-1, 2).denominator() == 2);
    CHECK(Slope::neg_infinity() < slope(-1000000, 1));
    CHECK(slope(-3, 5) < slope(-1, 2));
    CHECK(slope(-1, 2).display() == "-1/2");
    CHECK(slope(4, 2).display() == "2");
    CHECK(Slope::neg_infinity().display() == "-inf");
    CHECK_THROWS_AS(Slope(BigInt(1), BigInt(0)), ArithmeticError);
}

TEST_CASE("profile properties on random valuations") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> nd(1, 9), vd(-4, 12), zero(0, 3);
    for (int t = 0; t < 2000; ++t) {
        const int n = nd(rng);
        std::vector<ValInt> vals;
        std::vector<long> raw;
        for (int i = 0; i < n; ++i) {
            const bool is_zero = zero(rng) == 0;
            raw.push_back(is_zero ? LONG_MIN : vd(rng));
            vals.push_back(is_zero ? inf : ValInt(raw.back()));
        }
        const long vn = t % 3 == 0 ? vd(rng) : 0;
        raw.push_back(vn);
        vals.push_back(ValInt(vn));
        const auto p = ValuationProfile::from_values(vals);

        // Slopes against the machine-integer oracle; denominators divide n - i.
        std::optional<Fraction> best;
        for (int i = 0; i < n; ++i) {
            const Slope m = slope_at(p, i);
            if (raw[i] == LONG_MIN) {
                CHECK(m.is_neg_infinity());
                continue;
            }
            const Fraction f(vn - raw[i], n - i);
            CHECK(same(m, f));
            CHECK((n - i) % f.den == 0);
            if (!best || *best < f) best = f;
        }
        const Slope e = newton_index(p);
        if (best) CHECK(same(e, *best));
        else CHECK(e.is_neg_infinity());

        if (auto s = dominant_index(p)) {
            CHECK(slope_at(p, *s) == e);
            for (int i = 0; i < n; ++i)
                if (static_cast<std::size_t>(i) != *s) CHECK(slope_at(p, i) < e);
            if (vn == 0) CHECK(same(e, Fraction(-raw[*s], n - static_cast<long>(*s))));
        }

        std::vector<std::pair<long, long>> pts;
        for (int i = 0; i <= n; ++i)
            if (raw[i] != LONG_MIN) pts.emplace_back(i, raw[i]);
        const auto hull = lower_hull(p);
        const auto expected = brute_hull(pts);
        REQUIRE(hull.size() == expected.size());
        for (std::size_t k = 0; k < hull.size(); ++k) {
            CHECK(static_cast<long>(hull[k].i) == expected[k].first);
            CHECK(hull[k].v == expected[k].second);
        }
        CHECK(hull.front().i == static_cast<std::size_t>(pts.front().first));
        CHECK(hull.back().i == static_cast<std::size_t>(n));
        for (std::size_t k = 2; k < hull.size(); ++k) {
            const Fraction s1(hull[k - 1].v.get_si() - hull[k - 2].v.get_si(),
                              static_cast<long>(hull[k - 1].i - hull[k - 2].i));
            const Fraction s2(hull[k].v.get_si() - hull[k - 1].v.get_si(), static_cast<long>(hull[k].i - hull[k - 1].i));
            CHECK(s1 < s2);
        }
    }
}

TEST_CASE("Newton index is multiplicative: e(fg) = max(e(f), e(g))") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> deg(1, 6), coef(-100, 100);
    int pairs = 0;
    for (long p : {2L, 3L, 5L}) {
        const auto v = DiscreteValuation::padic(p);
        auto draw = [&] {
            std::vector<BigInt> c(deg(rng) + 1);
            for (auto& x : c) x = coef(rng);
            do c.back() = coef(rng);
            while (c.back() == 0 || c.back() % p == 0);
            return IntPoly(c);
        };
        for (int t = 0; t < 200; ++t, ++pairs) {
            const IntPoly f = draw(), g = draw();
            const Slope ef = newton_index(valuation_profile(f, v));
            const Slope eg = newton_index(valuation_profile(g, v));
            CHECK(newton_index(valuation_profile(f * g, v)) == std::max(ef, eg));
        }
    }
    CHECK(pairs >= 500);
}
