#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dvfactor/poly.hpp"
#include "dvfactor/valuation.hpp"

namespace dvfactor {

/// Exact rational slope or negative infinity (the slope towards a zero coefficient).
class Slope {
public:
    Slope(Rational value) : value_(std::move(value)) { value_->canonicalize(); }
    Slope(const BigInt& num, const BigInt& den);
    static Slope neg_infinity() { return Slope(); }

    bool is_neg_infinity() const { return !value_.has_value(); }
    const Rational& value() const;
    BigInt numerator() const { return value().get_num(); }
    BigInt denominator() const { return value().get_den(); }
    /// "-1/2", "3", or "-inf".
    std::string display() const;

    friend bool operator==(const Slope& a, const Slope& b);
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    Slope() = default;

    std::optional<Rational> value_;
};

/// Degree n and v(a_i) for i = 0..n. The only input the criteria look at.
struct ValuationProfile {
    std::size_t n = 0;
    std::vector<ValInt> vals;

    /// Checks n >= 1 and that the leading valuation is finite.
    static ValuationProfile from_values(std::vector<ValInt> vals);
    const ValInt& at(std::size_t i) const { return vals.at(i); }
};

ValuationProfile valuation_profile(const IntPoly& f, const DiscreteValuation& v);
ValuationProfile valuation_profile(const BiPoly& f, const DiscreteValuation& v);

/// m_i = (v(a_n) - v(a_i)) / (n - i) for 0 <= i < n.
Slope slope_at(const ValuationProfile& profile, std::size_t i);

/// Max of m_i over 0 <= i <= n-1 (index 0 included).
Slope newton_index(const ValuationProfile& profile);

/// The unique index whose slope strictly beats every other one, if any.
std::optional<std::size_t> dominant_index(const ValuationProfile& profile);

struct PolygonVertex {
    std::size_t i;
    BigInt v;

    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

/// Lower convex hull of the finite points (i, v(a_i)); collinear points dropped.
std::vector<PolygonVertex> lower_hull(const ValuationProfile& profile);

}  // namespace dvfactor
