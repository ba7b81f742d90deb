#include "dvfactor/newton.hpp"

#include "dvfactor/errors.hpp"

namespace dvfactor {

Slope::Slope(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw ArithmeticError("slope with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    value_ = std::move(r);
}

const Rational& Slope::value() const {
    if (!value_) throw ArithmeticError("negative-infinite slope has no rational value");
    return *value_;
}

std::string Slope::display() const {
    if (!value_) return "-inf";
    return value_->get_str();
}

bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (!a.value_ && !b.value_) return std::strong_ordering::equal;
    if (!a.value_) return std::strong_ordering::less;
    if (!b.value_) return std::strong_ordering::greater;
    return cmp(*a.value_, *b.value_) <=> 0;
}

ValuationProfile ValuationProfile::from_values(std::vector<ValInt> vals) {
    if (vals.size() < 2) throw ArgumentError("valuation profile needs degree n >= 1");
    if (vals.back().is_infinite()) throw ArgumentError("leading coefficient must be nonzero");
    ValuationProfile p;
    p.n = vals.size() - 1;
    p.vals = std::move(vals);
    return p;
}

ValuationProfile valuation_profile(const IntPoly& f, const DiscreteValuation& v) {
    if (v.kind() != DiscreteValuation::Kind::padic)
        throw ArgumentError("integer coefficients need a p-adic valuation, not " + v.describe());
    if (f.is_zero()) throw ArgumentError("valuation profile of the zero polynomial");
    if (f.degree() < 1) throw ArgumentError("valuation profile needs a nonconstant polynomial");
    std::vector<ValInt> vals;
    vals.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) vals.push_back(v(a));
    return ValuationProfile::from_values(std::move(vals));
}

ValuationProfile valuation_profile(const BiPoly& f, const DiscreteValuation& v) {
    if (v.kind() != DiscreteValuation::Kind::degree)
        throw ArgumentError("coefficients in Z[x] need the degree valuation, not " + v.describe());
    if (f.is_zero()) throw ArgumentError("valuation profile of the zero polynomial");
    if (f.degree_y() < 1) throw ArgumentError("valuation profile needs y-degree >= 1");
    std::vector<ValInt> vals;
    vals.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) vals.push_back(v(a));
    return ValuationProfile::from_values(std::move(vals));
}

Slope slope_at(const ValuationProfile& profile, std::size_t i) {
    if (i >= profile.n)
        throw ArgumentError("slope index " + std::to_string(i) + " out of range 0.." + std::to_string(profile.n - 1));
    const ValInt& vi = profile.vals[i];
    if (vi.is_infinite()) return Slope::neg_infinity();
    return Slope(profile.vals[profile.n].value() - vi.value(), BigInt(static_cast<unsigned long>(profile.n - i)));
}

Slope newton_index(const ValuationProfile& profile) {
    Slope best = Slope::neg_infinity();
    for (std::size_t i = 0; i < profile.n; ++i) {
        Slope m = slope_at(profile, i);
        if (m > best) best = std::move(m);
    }
    return best;
}

std::optional<std::size_t> dominant_index(const ValuationProfile& profile) {
    std::optional<std::size_t> best;
    Slope best_slope = Slope::neg_infinity();
    bool tied = false;
    for (std::size_t i = 0; i < profile.n; ++i) {
        Slope m = slope_at(profile, i);
        if (m.is_neg_infinity()) continue;
        if (!best || m > best_slope) {
            best = i;
            best_slope = std::move(m);
            tied = false;
        } else if (m == best_slope) {
            tied = true;
        }
    }
    if (tied) return std::nullopt;
    return best;
}

std::vector<PolygonVertex> lower_hull(const ValuationProfile& profile) {
    std::vector<PolygonVertex> hull;
    for (std::size_t i = 0; i <= profile.n; ++i) {
        if (profile.vals[i].is_infinite()) continue;
        PolygonVertex pt{i, profile.vals[i].value()};
        // Pop while the last two hull points and pt fail to make a strict left turn.
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            BigInt cross = BigInt(static_cast<unsigned long>(a.i - o.i)) * (pt.v - o.v) -
                           (a.v - o.v) * BigInt(static_cast<unsigned long>(pt.i - o.i));
            if (sgn(cross) > 0) break;
            hull.pop_back();
        }
        hull.push_back(std::move(pt));
    }
    return hull;
}

}  // namespace dvfactor
