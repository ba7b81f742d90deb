#include <doctest.h>

#include <random>

#include "dvfactor/errors.hpp"
#include "dvfactor/valuation.hpp"
#include "support.hpp"

using namespace dvfactor;

TEST_CASE("padic_valuation examples") {
    CHECK(padic_valuation(8, 2) == ValInt(3));
    CHECK(padic_valuation(0, 5).is_infinite());
    // 360 = 2^3 * 3^2 * 5, exponent of 3 taken from the trial-division oracle
    long long expected = 0;
    for (auto [q, e] : testsupport::trial_factor(360))
        if (q == 3) expected = e;
    REQUIRE(expected == 2);
    CHECK(padic_valuation(360, 3) == ValInt(expected));
    CHECK(padic_valuation(-12, 2) == ValInt(2));
}

TEST_CASE("padic_valuation of p^k * u is k") {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (unsigned long k = 0; k <= 64; ++k) {
            for (long u : {1L, -1L, 11L * 13L + (p == 11 ? 1 : 0), 1L + p}) {
                BigInt pk;
                mpz_pow_ui(pk.get_mpz_t(), BigInt(p).get_mpz_t(), k);
                CHECK(padic_valuation(pk * u, p) == ValInt(static_cast<long>(k)));
            }
        }
    }
}

TEST_CASE("degree_valuation examples") {
    CHECK(degree_valuation(IntPoly{1, 0, 1}) == ValInt(-2));
    CHECK(degree_valuation(IntPoly{}).is_infinite());
    CHECK(degree_valuation(IntPoly{5}) == ValInt(0));
}

TEST_CASE("ValInt arithmetic and order") {
    const ValInt inf = ValInt::infinity();
    CHECK((inf + ValInt(3)).is_infinite());
    CHECK((ValInt(-2) + ValInt(5)) == ValInt(3));
    CHECK(ValInt(1000000) < inf);
    CHECK(ValInt(-5) < ValInt(2));
    CHECK(inf == ValInt::infinity());
    CHECK_THROWS_AS(inf - inf, ArithmeticError);
    CHECK_THROWS_AS(ValInt(2) - inf, ArithmeticError);
    CHECK_THROWS_AS(-inf, ArithmeticError);
    CHECK_THROWS_AS(inf.value(), ArithmeticError);
    CHECK(inf.to_string() == "inf");
}

TEST_CASE("DiscreteValuation construction and kinds") {
    CHECK_THROWS_AS(DiscreteValuation::padic(4), ArgumentError);
    CHECK_THROWS_AS(DiscreteValuation::padic(1), ArgumentError);
    CHECK_THROWS_AS(DiscreteValuation::padic(0), ArgumentError);
    const auto v5 = DiscreteValuation::padic(5);
    CHECK(v5.prime() == 5);
    CHECK(v5(BigInt(250)) == ValInt(3));
    CHECK_THROWS_AS(v5(IntPoly{1, 1}), ArgumentError);
    const auto deg = DiscreteValuation::degree();
    CHECK_THROWS_AS(deg(BigInt(3)), ArgumentError);
    CHECK_THROWS_AS(deg.prime(), ArgumentError);
    CHECK(deg(IntPoly{0, 0, 0, 7}) == ValInt(-3));
}

TEST_CASE("is_prime agrees with a sieve") {
    std::vector<bool> composite(2000, false);
    for (int i = 2; i < 2000; ++i)
        if (!composite[i])
            for (int j = 2 * i; j < 2000; j += i) composite[j] = true;
    for (int i = 0; i < 2000; ++i) CHECK(is_prime(i) == (i >= 2 && !composite[i]));
}

TEST_CASE("p-adic valuation is multiplicative and ultrametric on samples") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (long p : {2L, 3L, 5L}) {
        const auto v = DiscreteValuation::padic(p);
        for (int t = 0; t < 1000; ++t) {
            long long a = dist(rng), b = dist(rng);
            if (a == 0) a = 1;
            if (b == 0) b = 1;
            const ValInt va = v(BigInt(std::to_string(a))), vb = v(BigInt(std::to_string(b)));
            CHECK(v(BigInt(std::to_string(a)) * BigInt(std::to_string(b))) == va + vb);
            const ValInt vs = v(BigInt(std::to_string(a)) + BigInt(std::to_string(b)));
            CHECK(vs >= min(va, vb));
            if (va != vb) CHECK(vs == min(va, vb));
        }
    }
}

TEST_CASE("degree valuation is multiplicative and ultrametric on samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9);
    auto random_poly = [&] {
        std::vector<BigInt> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        return IntPoly(c);
    };
    const auto v = DiscreteValuation::degree();
    for (int t = 0; t < 1000; ++t) {
        const IntPoly a = random_poly(), b = random_poly();
        CHECK(v(a * b) == v(a) + v(b));
        const ValInt vs = v(a + b);
        CHECK(vs >= min(v(a), v(b)));
        if (v(a) != v(b)) CHECK(vs == min(v(a), v(b)));
    }
}
