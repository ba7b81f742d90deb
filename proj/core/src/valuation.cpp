#include "dvfactor/valuation.hpp"

#include "dvfactor/errors.hpp"

namespace dvfactor {

const BigInt& ValInt::value() const {
    if (infinite_) throw ArithmeticError("infinite valuation has no finite value");
    return value_;
}

std::string ValInt::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

ValInt operator+(const ValInt& a, const ValInt& b) {
    if (a.infinite_ || b.infinite_) return ValInt::infinity();
    return ValInt(BigInt(a.value_ + b.value_));
}

ValInt operator-(const ValInt& a, const ValInt& b) {
    if (b.infinite_) throw ArithmeticError("subtracting an infinite valuation is undefined");
    if (a.infinite_) return ValInt::infinity();
    return ValInt(BigInt(a.value_ - b.value_));
}

ValInt ValInt::operator-() const {
    if (infinite_) throw ArithmeticError("negating an infinite valuation is undefined");
    return ValInt(BigInt(-value_));
}

bool operator==(const ValInt& a, const ValInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ValInt& a, const ValInt& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return cmp(a.value_, b.value_) <=> 0;
}

ValInt min(const ValInt& a, const ValInt& b) { return b < a ? b : a; }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

ValInt padic_valuation(const BigInt& a, const BigInt& p) {
    if (p < 2) throw ArgumentError("p-adic valuation needs p >= 2, got " + p.get_str());
    if (sgn(a) == 0) return ValInt::infinity();
    BigInt rest = a;
    long k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++k;
    }
    return ValInt(k);
}

ValInt degree_valuation(const IntPoly& g) {
    if (g.is_zero()) return ValInt::infinity();
    return ValInt(-g.degree());
}

DiscreteValuation DiscreteValuation::padic(const BigInt& p) {
    if (!is_prime(p)) throw ArgumentError("p-adic valuation requires a prime, got " + p.get_str());
    return DiscreteValuation(Kind::padic, p);
}

DiscreteValuation DiscreteValuation::degree() { return DiscreteValuation(Kind::degree, BigInt(0)); }

const BigInt& DiscreteValuation::prime() const {
    if (kind_ != Kind::padic) throw ArgumentError("the degree valuation has no prime");
    return p_;
}

std::string DiscreteValuation::describe() const {
    return kind_ == Kind::padic ? "p-adic (p=" + p_.get_str() + ")" : "degree (v(g) = -deg g)";
}

ValInt DiscreteValuation::operator()(const BigInt& a) const {
    if (kind_ != Kind::padic) throw ArgumentError("the degree valuation applies to polynomials in x, not integers");
    return padic_valuation(a, p_);
}

ValInt DiscreteValuation::operator()(const IntPoly& g) const {
    if (kind_ != Kind::degree) throw ArgumentError("a p-adic valuation applies to integers, not polynomials in x");
    return degree_valuation(g);
}

}  // namespace dvfactor
