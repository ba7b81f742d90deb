#include "dvfactor/families.hpp"

#include <random>

#include "dvfactor/errors.hpp"
#include "dvfactor/format.hpp"
#include "dvfactor/valuation.hpp"

namespace dvfactor {

namespace {

BigInt pow(const BigInt& base, std::size_t e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

void require_prime(const BigInt& p) {
    if (!is_prime(p)) throw ArgumentError("p must be prime, got " + p.get_str());
}

void require_unit(const char* name, const BigInt& a, const BigInt& p) {
    if (sgn(a) <= 0) throw ArgumentError(std::string(name) + " must be positive, got " + a.get_str());
    if (padic_valuation(a, p) != ValInt(0))
        throw ArgumentError(std::string(name) + " must have v_p = 0, got " + a.get_str() + " with p = " + p.get_str());
}

using Lcg = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

}  // namespace

IntPoly family_X(const BigInt& p, std::size_t n, const XUnits& u) {
    require_prime(p);
    if (n % 2 == 0) throw ArgumentError("family X: n must be odd, got " + std::to_string(n));
    if (n < 5) throw ArgumentError("family X: n must be >= 5, got " + std::to_string(n));
    require_unit("a0", u.a0, p);
    require_unit("a1", u.a1, p);
    require_unit("a2", u.a2, p);
    require_unit("an", u.an, p);
    std::vector<BigInt> c(n + 1);
    c[0] = u.a0 * pow(p, n - 2);
    c[1] = pow(p, n - 3) * u.a1;
    c[2] = p * p * (p - 1) * u.a2 * pow(p, n - 2);
    c[n] = u.an;
    return IntPoly(std::move(c));
}

IntPoly family_Y(const BigInt& p, std::size_t n) {
    require_prime(p);
    if (n % 2 != 0) throw ArgumentError("family Y: n must be even, got " + std::to_string(n));
    if (n < 6) throw ArgumentError("family Y: n must be >= 6, got " + std::to_string(n));
    std::vector<BigInt> c(n + 1);
    c[0] = pow(p, n - 2);
    c[2] = pow(p, n - 4);
    c[3] = p * p * pow(p, n - 2);
    c[n] = 1;
    return IntPoly(std::move(c));
}

BiPoly family_Z(const IntPoly& a0, const IntPoly& a1, std::size_t n, const FactorizationLimits& limits) {
    if (n <= 2) throw ArgumentError("family Z: n must be > 2, got " + std::to_string(n));
    if (a0.degree() < 1 || a0.degree() != a1.degree())
        throw ArgumentError("family Z: a0 and a1 must share a positive degree d, got " + std::to_string(a0.degree()) +
                            " and " + std::to_string(a1.degree()));
    const auto d = static_cast<std::size_t>(a0.degree());
    if ((n - 1) % d != 0)
        throw ArgumentError("family Z: d=" + std::to_string(d) + " does not divide n-1=" + std::to_string(n - 1));
    for (const IntPoly* a : {&a0, &a1}) {
        const Factorization fac = kronecker_factor(*a, limits);
        if (fac.factors.size() != 1)
            throw ArgumentError("family Z: " + to_string(*a) + " is reducible, witness " + to_string(fac.factors.front()));
    }
    std::vector<IntPoly> coeffs(n + 1);
    coeffs[0] = a0;
    coeffs[1] = a1;
    coeffs[n] = IntPoly::constant(1);
    return BiPoly(std::move(coeffs));
}

IntPoly family_eisenstein(const BigInt& p, std::size_t n) {
    require_prime(p);
    if (n < 1) throw ArgumentError("eisenstein family: n must be >= 1");
    return IntPoly::monomial(1, n) - IntPoly::constant(p);
}

std::pair<IntPoly, IntPoly> stock_irreducible_pair(std::size_t d) {
    switch (d) {
        case 1: return {IntPoly{1, 1}, IntPoly{2, 1}};
        case 2: return {IntPoly{1, 0, 1}, IntPoly{1, 1, 1}};
        case 3: return {IntPoly{2, 0, 0, 1}, IntPoly{1, 1, 0, 1}};
        case 4: return {IntPoly{2, 0, 0, 0, 1}, IntPoly{1, 1, 0, 0, 1}};
        default: throw ArgumentError("no stock irreducible pair for d=" + std::to_string(d) + " (supported: 1..4)");
    }
}

IntPoly random_valued_poly(std::uint64_t seed, std::size_t degree_bound, std::uint64_t coefficient_bound,
                           const BigInt& p) {
    if (degree_bound == 0 || coefficient_bound == 0) throw ArgumentError("random polynomial bounds must be positive");
    Lcg lcg(seed);
    auto draw = [&lcg] { return lcg() >> 32; };
    const std::uint64_t span = 2 * coefficient_bound + 1;
    auto coefficient = [&]() -> BigInt {
        return BigInt(static_cast<long>(draw() % span)) - BigInt(static_cast<unsigned long>(coefficient_bound));
    };
    const std::size_t n = 1 + draw() % degree_bound;
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = coefficient();
    do {
        c[n] = coefficient();
    } while (sgn(c[n]) == 0 || mpz_divisible_p(c[n].get_mpz_t(), p.get_mpz_t()));
    return IntPoly(std::move(c));
}

std::variant<IntPoly, BiPoly> make_family(const FamilyParams& fp) {
    auto need_p = [&]() -> const BigInt& {
        if (!fp.p) throw ArgumentError("this family needs a prime p");
        return *fp.p;
    };
    switch (fp.family) {
        case Family::X: return family_X(need_p(), fp.n, fp.units.value_or(XUnits{}));
        case Family::Y: return family_Y(need_p(), fp.n);
        case Family::eisenstein: return family_eisenstein(need_p(), fp.n);
        case Family::random:
            return random_valued_poly(fp.seed.value_or(1), fp.n == 0 ? 6 : fp.n, 100, need_p());
        case Family::Z: {
            if (!fp.d) throw ArgumentError("family Z needs d");
            auto [a0, a1] = stock_irreducible_pair(*fp.d);
            return family_Z(a0, a1, fp.n);
        }
    }
    throw ArgumentError("unknown family");
}

}  // namespace dvfactor
