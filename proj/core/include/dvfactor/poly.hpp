#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dvfactor {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers; index i holds the coefficient of x^i.
///
/// Trailing zeros are always trimmed, so the zero polynomial is the empty
/// coefficient vector and equality is plain vector equality.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const BigInt> coefficients() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& scalar);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(IntPoly lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
IntPoly poly_pow(const IntPoly& f, unsigned long exponent);
BigInt poly_eval(const IntPoly& f, const BigInt& t);

/// Content carries the sign of the leading coefficient, so the primitive part
/// always has a positive leading coefficient. Throws ArgumentError on zero.
std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& f);

/// Quotient q with f = g*q over the integers, if one exists.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

/// Degree first, then coefficients from the top down.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// Polynomial in y whose coefficients are polynomials in x; index i holds a_i(x).
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<IntPoly> coefficients);
    /// Embeds a polynomial in x as a y-constant.
    static BiPoly from_x(const IntPoly& a);
    static BiPoly y_power(std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    long degree_y() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const IntPoly> coefficients() const { return coeffs_; }
    const IntPoly& coeff(std::size_t i) const;
    bool is_monic_in_y() const;
    /// Largest x-degree among the coefficients, -1 for zero.
    long degree_x() const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly operator-() const;

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend bool operator==(const BiPoly& lhs, const BiPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void trim();

    std::vector<IntPoly> coeffs_;
};

BiPoly bipoly_pow(const BiPoly& f, unsigned long exponent);

/// Evaluates every x-coefficient at x0. Z must be monic in y so the y-degree is kept.
IntPoly specialize_bivariate(const BiPoly& z, const BigInt& x0);

}  // namespace dvfactor
