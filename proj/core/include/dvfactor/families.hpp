#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "dvfactor/oracle.hpp"
#include "dvfactor/poly.hpp"

namespace dvfactor {

/// a0, a1, a2, an of the X family; each must be positive with v_p = 0.
struct XUnits {
    BigInt a0{1};
    BigInt a1{1};
    BigInt a2{1};
    BigInt an{1};
};

/// (a0 + p^2 (p-1) a2 x^2) p^(n-2) + p^(n-3) a1 x + an x^n, n odd >= 5.
IntPoly family_X(const BigInt& p, std::size_t n, const XUnits& units = {});

/// (1 + p^2 x^3) p^(n-2) + p^(n-4) x^2 + x^n, n even >= 6.
IntPoly family_Y(const BigInt& p, std::size_t n);

/// a0(x) + a1(x) y + y^n. Both coefficients must be irreducible of the same
/// degree d with d | n-1; irreducibility is certified with the oracle.
BiPoly family_Z(const IntPoly& a0, const IntPoly& a1, std::size_t n, const FactorizationLimits& limits = {});

/// x^n - p.
IntPoly family_eisenstein(const BigInt& p, std::size_t n);

/// Fixed irreducible coefficient pairs of degree d, for d in 1..4.
std::pair<IntPoly, IntPoly> stock_irreducible_pair(std::size_t d);

/// Deterministic pseudo-random polynomial of degree 1..degree_bound with
/// coefficients in [-coefficient_bound, coefficient_bound] and a nonzero
/// leading coefficient of p-adic valuation zero.
///
/// Generator: 64-bit LCG x' = 6364136223846793005 x + 1442695040888963407
/// (mod 2^64), state initialised to the seed. Each draw advances the state
/// once and uses its high 32 bits r. The degree is 1 + r mod degree_bound;
/// coefficients a_0..a_{n-1} are r mod (2B+1) - B in increasing index order;
/// the leading coefficient is drawn the same way until nonzero and prime to p.
IntPoly random_valued_poly(std::uint64_t seed, std::size_t degree_bound, std::uint64_t coefficient_bound,
                           const BigInt& p);

enum class Family { X, Y, Z, eisenstein, random };

struct FamilyParams {
    Family family = Family::X;
    std::optional<BigInt> p;
    std::size_t n = 0;
    std::optional<XUnits> units;
    std::optional<std::size_t> d;
    std::optional<std::uint64_t> seed;
};

/// Dispatches to the constructors above; Z yields a BiPoly, the rest IntPoly.
std::variant<IntPoly, BiPoly> make_family(const FamilyParams& params);

}  // namespace dvfactor
