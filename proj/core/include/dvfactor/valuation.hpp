#pragma once

#include <compare>
#include <string>

#include "dvfactor/poly.hpp"

namespace dvfactor {

/// A valuation value: an exact integer or +infinity (the valuation of zero).
class ValInt {
public:
    ValInt() = default;
    ValInt(long value) : value_(value) {}
    ValInt(BigInt value) : value_(std::move(value)) {}

    static ValInt infinity() {
        ValInt v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// Throws ArithmeticError when infinite.
    const BigInt& value() const;

    std::string to_string() const;

    friend ValInt operator+(const ValInt& a, const ValInt& b);
    /// Defined only when b is finite.
    friend ValInt operator-(const ValInt& a, const ValInt& b);
    ValInt operator-() const;

    friend bool operator==(const ValInt& a, const ValInt& b);
    friend std::strong_ordering operator<=>(const ValInt& a, const ValInt& b);

private:
    BigInt value_{0};
    bool infinite_ = false;
};

ValInt min(const ValInt& a, const ValInt& b);

/// Deterministic trial division.
bool is_prime(const BigInt& n);

/// Exponent of p in a; infinity iff a = 0.
ValInt padic_valuation(const BigInt& a, const BigInt& p);

/// -deg(g), infinity for the zero polynomial.
ValInt degree_valuation(const IntPoly& g);

/// Either the p-adic valuation on the integers or the negative-degree
/// valuation on integer polynomials in x.
class DiscreteValuation {
public:
    enum class Kind { padic, degree };

    /// Throws ArgumentError unless p is prime.
    static DiscreteValuation padic(const BigInt& p);
    static DiscreteValuation degree();

    Kind kind() const { return kind_; }
    /// Throws ArgumentError for the degree valuation.
    const BigInt& prime() const;
    std::string describe() const;

    /// p-adic only.
    ValInt operator()(const BigInt& a) const;
    /// Degree valuation only.
    ValInt operator()(const IntPoly& g) const;

    friend bool operator==(const DiscreteValuation&, const DiscreteValuation&) = default;

private:
    DiscreteValuation(Kind kind, BigInt p) : kind_(kind), p_(std::move(p)) {}

    Kind kind_;
    BigInt p_;
};

}  // namespace dvfactor
