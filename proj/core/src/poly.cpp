#include "dvfactor/poly.hpp"

#include <algorithm>

#include "dvfactor/errors.hpp"

namespace dvfactor {

namespace {
const BigInt kZero{0};
const IntPoly kZeroPoly{};
}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = c;
    return IntPoly(std::move(coeffs));
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw ArgumentError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly poly_pow(const IntPoly& f, unsigned long exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = f;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

BigInt poly_eval(const IntPoly& f, const BigInt& t) {
    BigInt acc = 0;
    const auto coeffs = f.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& f) {
    if (f.is_zero()) throw ArgumentError("content of the zero polynomial is undefined");
    BigInt g = 0;
    for (const auto& c : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(f.leading()) < 0) g = -g;
    std::vector<BigInt> prim(f.coefficients().begin(), f.coefficients().end());
    for (auto& c : prim) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {g, IntPoly(std::move(prim))};
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ArgumentError("division by the zero polynomial");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;

    std::vector<BigInt> rem(f.coefficients().begin(), f.coefficients().end());
    const auto gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    std::vector<BigInt> quot(rem.size() - dg);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dg];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), gc[dg].get_mpz_t())) return std::nullopt;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), gc[dg].get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= q * gc[j];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    for (std::size_t i = ac.size(); i-- > 0;) {
        int c = cmp(ac[i], bc[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

BiPoly::BiPoly(std::vector<IntPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

BiPoly BiPoly::from_x(const IntPoly& a) { return BiPoly(std::vector<IntPoly>{a}); }

BiPoly BiPoly::y_power(std::size_t power) {
    std::vector<IntPoly> coeffs(power + 1);
    coeffs[power] = IntPoly::constant(1);
    return BiPoly(std::move(coeffs));
}

const IntPoly& BiPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZeroPoly; }

bool BiPoly::is_monic_in_y() const { return !coeffs_.empty() && coeffs_.back() == IntPoly::constant(1); }

long BiPoly::degree_x() const {
    long d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<IntPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return BiPoly(std::move(out));
}

BiPoly bipoly_pow(const BiPoly& f, unsigned long exponent) {
    BiPoly result = BiPoly::from_x(IntPoly::constant(1));
    for (unsigned long k = 0; k < exponent; ++k) result = result * f;
    return result;
}

IntPoly specialize_bivariate(const BiPoly& z, const BigInt& x0) {
    if (!z.is_monic_in_y()) throw ArgumentError("specialization requires a polynomial monic in y");
    std::vector<BigInt> out;
    out.reserve(z.coefficients().size());
    for (const auto& a : z.coefficients()) out.push_back(poly_eval(a, x0));
    return IntPoly(std::move(out));
}

}  // namespace dvfactor
