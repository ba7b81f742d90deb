#include "dvfactor/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "dvfactor/errors.hpp"

namespace dvfactor {

namespace {

// Positive divisors of |m|, m != 0, in increasing order.
std::vector<BigInt> positive_divisors(const BigInt& m) {
    BigInt rest = abs(m);
    std::vector<std::pair<BigInt, unsigned>> primes;
    for (unsigned long d = 2;; ++d) {
        if (BigInt(d) * d > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++e;
        }
        primes.emplace_back(BigInt(d), e);
    }
    if (rest > 1) primes.emplace_back(rest, 1);

    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// 0, 1, -1, 2, -2, ...
long sample_point(std::size_t idx) {
    if (idx == 0) return 0;
    const long k = static_cast<long>((idx + 1) / 2);
    return idx % 2 == 1 ? k : -k;
}

class KroneckerSearch {
public:
    explicit KroneckerSearch(const FactorizationLimits& limits) : limits_(limits) {}

    // Appends the irreducible factors of a primitive g (positive leading
    // coefficient). No factor of degree below min_k exists.
    void split(const IntPoly& g, std::size_t min_k, std::vector<IntPoly>& out) {
        if (g.degree() <= 0) return;
        if (g.degree() == 1) {
            out.push_back(g);
            return;
        }
        auto [factor, k] = smallest_factor(g, min_k);
        if (!factor) {
            out.push_back(g);
            return;
        }
        auto cofactor = divide_exact(g, *factor);
        if (!cofactor) throw ArithmeticError("oracle produced a non-dividing factor");
        out.push_back(*factor);
        split(*cofactor, k, out);
    }

private:
    std::pair<std::optional<IntPoly>, std::size_t> smallest_factor(const IntPoly& g, std::size_t min_k) {
        const std::size_t n = static_cast<std::size_t>(g.degree());
        // Evaluate a pool of n + 3 points; interpolate on the k + 1 values with
        // the fewest divisors and use the remaining ones as filters.
        std::vector<Sample> pool;
        for (std::size_t idx = 0; idx < n + 3; ++idx) {
            const BigInt t(sample_point(idx));
            BigInt value = poly_eval(g, t);
            if (sgn(value) == 0) return {IntPoly(std::vector<BigInt>{-t, BigInt(1)}), 1};
            auto divs = positive_divisors(value);
            pool.push_back({t, std::move(value), std::move(divs)});
        }
        std::stable_sort(pool.begin(), pool.end(),
                         [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
        for (std::size_t k = std::max<std::size_t>(1, min_k); k <= n / 2; ++k)
            if (auto found = search_degree(g, k, pool)) return {std::move(found), k};
        return {std::nullopt, n};
    }

    struct Sample {
        BigInt t;
        BigInt value;
        std::vector<BigInt> divisors;
    };

    // Depth-first over divisor choices, slot by slot, building the Newton
    // divided-difference table as it goes. Divided differences of an integer
    // polynomial on integer nodes are integers, so a fractional entry prunes
    // the whole subtree. Each visited choice counts against the budget.
    std::optional<IntPoly> search_degree(const IntPoly& g, std::size_t k, const std::vector<Sample>& pool) {
        Search st{g, k, pool, std::vector<std::vector<BigInt>>(k + 1), positive_divisors(g.leading()), 0};
        return descend(st, 0);
    }

    struct Search {
        const IntPoly& g;
        std::size_t k;
        const std::vector<Sample>& pool;
        // table[j][i] = divided difference over nodes j-i..j
        std::vector<std::vector<BigInt>> table;
        std::vector<BigInt> lead_divisors;
        std::size_t visited;
    };

    std::optional<IntPoly> descend(Search& st, std::size_t j) {
        if (j == st.k) return close(st);
        const auto& divs = st.pool[j].divisors;
        // Slot 0 takes only positive divisors (a factor and its negation are
        // equivalent); later slots take both signs.
        const std::size_t options = divs.size() * (j == 0 ? 1 : 2);
        for (std::size_t pick = 0; pick < options; ++pick) {
            tick(st);
            BigInt y = divs[pick % divs.size()];
            if (pick >= divs.size()) y = -y;
            if (!extend(st, j, y)) continue;
            if (auto found = descend(st, j + 1)) return found;
        }
        return std::nullopt;
    }

    // Last slot: the top divided difference is the leading coefficient, so it
    // ranges over the divisors of lead(g); the value at t_k follows and must
    // divide g(t_k).
    std::optional<IntPoly> close(Search& st) {
        const std::size_t k = st.k;
        for (std::size_t pick = 0; pick < 2 * st.lead_divisors.size(); ++pick) {
            tick(st);
            BigInt c = st.lead_divisors[pick % st.lead_divisors.size()];
            if (pick >= st.lead_divisors.size()) c = -c;
            auto& row = st.table[k];
            row.assign(k + 1, BigInt(0));
            row[k] = c;
            for (std::size_t i = k; i >= 1; --i)
                row[i - 1] = row[i] * (st.pool[k].t - st.pool[k - i].t) + st.table[k - 1][i - 1];
            if (sgn(row[0]) == 0 || !mpz_divisible_p(st.pool[k].value.get_mpz_t(), row[0].get_mpz_t())) continue;
            auto poly = from_newton(st);
            if (!poly || !divides_at_filters(*poly, k, st.pool)) continue;
            if (divide_exact(st.g, *poly)) return poly;
        }
        return std::nullopt;
    }

    void tick(Search& st) const {
        if (++st.visited > limits_.max_sample_divisors)
            throw ResourceError("divisor combinations for degree " + std::to_string(st.k) +
                                " exceed max_sample_divisors = " + std::to_string(limits_.max_sample_divisors));
    }

    static bool extend(Search& st, std::size_t j, const BigInt& y) {
        auto& row = st.table[j];
        row.assign(j + 1, BigInt(0));
        row[0] = y;
        for (std::size_t i = 1; i <= j; ++i) {
            const BigInt num = row[i - 1] - st.table[j - 1][i - 1];
            const BigInt den = st.pool[j].t - st.pool[j - i].t;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
            mpz_divexact(row[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        return true;
    }

    // Expands c_0 + c_1 (x - t_0) + ... + c_k (x - t_0)...(x - t_{k-1}) and
    // applies the leading/constant coefficient filters.
    std::optional<IntPoly> from_newton(const Search& st) const {
        const std::size_t k = st.k;
        const BigInt& lead_k = st.table[k][k];
        if (sgn(lead_k) == 0) return std::nullopt;
        if (!mpz_divisible_p(st.g.leading().get_mpz_t(), lead_k.get_mpz_t())) return std::nullopt;
        std::vector<BigInt> coeffs{lead_k};
        for (std::size_t j = k; j-- > 0;) {
            // coeffs := coeffs * (x - t_j) + c_j
            std::vector<BigInt> next(coeffs.size() + 1);
            for (std::size_t e = 0; e < coeffs.size(); ++e) {
                next[e + 1] += coeffs[e];
                next[e] -= coeffs[e] * st.pool[j].t;
            }
            next[0] += st.table[j][j];
            coeffs = std::move(next);
        }
        if (sgn(coeffs[0]) == 0 || !mpz_divisible_p(st.g.coeff(0).get_mpz_t(), coeffs[0].get_mpz_t()))
            return std::nullopt;
        if (sgn(coeffs[k]) < 0)
            for (auto& c : coeffs) c = -c;
        return IntPoly(std::move(coeffs));
    }

    static bool divides_at_filters(const IntPoly& cand, std::size_t k, const std::vector<Sample>& pool) {
        for (std::size_t j = k + 1; j < pool.size(); ++j) {
            const BigInt at = poly_eval(cand, pool[j].t);
            if (sgn(at) == 0 || !mpz_divisible_p(pool[j].value.get_mpz_t(), at.get_mpz_t())) return false;
        }
        return true;
    }

    FactorizationLimits limits_;
};

IntPoly product_of(const std::vector<IntPoly>& distinct, const std::vector<std::size_t>& counts) {
    IntPoly out = IntPoly::constant(1);
    for (std::size_t i = 0; i < distinct.size(); ++i) out = out * poly_pow(distinct[i], counts[i]);
    return out;
}

}  // namespace

IntPoly Factorization::product() const {
    IntPoly out = IntPoly::constant(content);
    for (const auto& f : factors) out = out * f;
    return out;
}

Factorization kronecker_factor(const IntPoly& f, const FactorizationLimits& limits) {
    if (f.is_zero()) throw ArgumentError("cannot factor the zero polynomial");
    if (f.degree() > static_cast<long>(limits.max_degree))
        throw ResourceError("degree " + std::to_string(f.degree()) + " exceeds max_degree = " +
                            std::to_string(limits.max_degree));
    for (const auto& c : f.coefficients())
        if (abs(c) > limits.max_abs_coefficient)
            throw ResourceError("coefficient " + c.get_str() + " exceeds max_abs_coefficient = " +
                                limits.max_abs_coefficient.get_str());

    auto [content, primitive] = content_and_primitive(f);
    Factorization out{content, {}};
    KroneckerSearch(limits).split(primitive, 1, out.factors);
    std::sort(out.factors.begin(), out.factors.end(), canonical_less);
    if (out.product() != f) throw ArithmeticError("oracle reconstruction mismatch");
    return out;
}

std::vector<FactorPair> bipartitions(const Factorization& factorization, const DiscreteValuation& v) {
    std::vector<IntPoly> distinct;
    std::vector<std::size_t> mult;
    for (const auto& f : factorization.factors) {
        if (!distinct.empty() && distinct.back() == f) {
            ++mult.back();
        } else {
            distinct.push_back(f);
            mult.push_back(1);
        }
    }

    struct Key {
        IntPoly g, h;
        bool operator<(const Key& o) const {
            if (g.degree() != o.g.degree()) return g.degree() < o.g.degree();
            if (g != o.g) return canonical_less(g, o.g);
            return canonical_less(h, o.h);
        }
    };
    std::set<Key> seen;
    std::vector<std::size_t> counts(distinct.size(), 0);
    std::vector<std::size_t> rest(distinct.size());
    while (true) {
        std::size_t i = 0;
        for (; i < counts.size(); ++i) {
            if (++counts[i] <= mult[i]) break;
            counts[i] = 0;
        }
        if (i == counts.size()) break;
        if (counts == mult) continue;
        for (std::size_t j = 0; j < mult.size(); ++j) rest[j] = mult[j] - counts[j];
        IntPoly g = product_of(distinct, counts);
        IntPoly h = product_of(distinct, rest);
        if (h.degree() < g.degree() || (h.degree() == g.degree() && canonical_less(h, g))) std::swap(g, h);
        seen.insert(Key{std::move(g), std::move(h)});
    }

    std::vector<FactorPair> out;
    out.reserve(seen.size());
    for (const auto& key : seen) {
        IntPoly g = key.g * factorization.content;
        const IntPoly& h = key.h;
        ValInt x1 = v(g.coeff(0));
        ValInt x2 = v(h.coeff(0));
        out.push_back(FactorPair{std::move(g), h, static_cast<std::size_t>(key.g.degree()),
                                 static_cast<std::size_t>(h.degree()), std::move(x1), std::move(x2)});
    }
    return out;
}

std::vector<FactorPair> bipartitions(const IntPoly& f, const DiscreteValuation& v, const FactorizationLimits& limits) {
    return bipartitions(kronecker_factor(f, limits), v);
}

bool split_satisfies(const Verdict& verdict, std::size_t k1, std::size_t k2) {
    if (k1 > k2) std::swap(k1, k2);
    if (std::holds_alternative<Irreducible>(verdict)) return false;
    if (const auto* v = std::get_if<FactorDegreeMultipleOf>(&verdict)) return k1 % v->m == 0 || k2 % v->m == 0;
    if (const auto* v = std::get_if<MaxFactorDegreeAtLeast>(&verdict)) return k2 >= v->bound;
    if (const auto* v = std::get_if<MinFactorDegreeAtMost>(&verdict)) return k1 <= v->s;
    return true;
}

ValidationReport validate_verdict(const Verdict& verdict, const Factorization& factorization,
                                  std::span<const FactorPair> pairs) {
    ValidationReport r{verdict, factorization.factors.size(), {}, true};
    for (const auto& pair : pairs) {
        const bool ok = split_satisfies(verdict, pair.k1, pair.k2);
        r.checks.push_back({pair.k1, pair.k2, ok});
        r.valid = r.valid && ok;
    }
    if (std::holds_alternative<Irreducible>(verdict) && factorization.factors.size() != 1) r.valid = false;
    return r;
}

ValidationReport validate_verdict(const IntPoly& f, const DiscreteValuation& v, const CriterionReport& report,
                                  const FactorizationLimits& limits) {
    const Factorization fac = kronecker_factor(f, limits);
    const auto pairs = bipartitions(fac, v);
    return validate_verdict(report.verdict, fac, pairs);
}

BigInt kappa_trace(const ValuationProfile& profile, const FactorPair& pair, std::size_t s, std::size_t d_s) {
    if (s >= profile.n) throw ArgumentError("kappa_trace: s out of range");
    if (d_s == 0) throw ArgumentError("kappa_trace: d_s must be positive");
    if (pair.k1 + pair.k2 != profile.n) throw ArgumentError("kappa_trace: factor degrees do not add up to n");
    if (pair.x2.is_infinite()) throw ArgumentError("kappa_trace: x2 = v(h(0)) is infinite");
    if (profile.vals[s].is_infinite()) throw ArgumentError("kappa_trace: y_s is infinite");
    const BigInt& ys = profile.vals[s].value();
    const BigInt d(static_cast<unsigned long>(d_s));
    if ((profile.n - s) % d_s != 0 || !mpz_divisible_p(ys.get_mpz_t(), d.get_mpz_t()))
        throw ArgumentError("kappa_trace: d_s must divide both n-s and y_s");
    const BigInt m(static_cast<unsigned long>((profile.n - s) / d_s));
    BigInt ys_over_d;
    mpz_divexact(ys_over_d.get_mpz_t(), ys.get_mpz_t(), d.get_mpz_t());
    return m * pair.x2.value() - BigInt(static_cast<unsigned long>(pair.k2)) * ys_over_d;
}

KappaCheck check_kappa(const ValuationProfile& profile, const FactorPair& pair, std::size_t s, std::size_t d_s) {
    KappaCheck c{kappa_trace(profile, pair, s, d_s), false, false};
    const std::size_t m = (profile.n - s) / d_s;
    if (c.kappa == 0) {
        c.in_range = true;
        c.divisibility = pair.k2 % m == 0;
    } else if (c.kappa == 1) {
        c.in_range = true;
        c.divisibility = pair.k1 % m == 0;
    }
    return c;
}

std::string evidence_status_name(EvidenceStatus status) {
    switch (status) {
        case EvidenceStatus::certified_irreducible: return "certified_irreducible";
        case EvidenceStatus::consistent: return "consistent";
        case EvidenceStatus::inconsistent: return "inconsistent";
        case EvidenceStatus::unavailable: return "unavailable";
    }
    return "unknown";
}

bool SpecializationEvidence::certified_irreducible() const {
    return std::any_of(samples.begin(), samples.end(), [](const auto& s) { return s.irreducible(); });
}

EvidenceStatus SpecializationEvidence::judge(const Verdict& verdict) const {
    if (certified_irreducible()) return EvidenceStatus::certified_irreducible;
    if (std::none_of(samples.begin(), samples.end(), [](const auto& s) { return s.factorization.has_value(); }))
        return EvidenceStatus::unavailable;
    for (std::size_t k : possible_degrees)
        if (!split_satisfies(verdict, k, degree_y - k)) return EvidenceStatus::inconsistent;
    return EvidenceStatus::consistent;
}

std::vector<long> default_specialization_points() { return {0, 1, -1, 2, -2, 3, -3}; }

SpecializationEvidence specialization_evidence(const BiPoly& z, std::span<const long> points,
                                               const FactorizationLimits& limits) {
    if (!z.is_monic_in_y()) throw ArgumentError("specialization evidence requires a polynomial monic in y");
    SpecializationEvidence ev;
    ev.degree_y = static_cast<std::size_t>(z.degree_y());
    FactorizationLimits lim = limits;
    lim.max_degree = std::max(lim.max_degree, ev.degree_y);

    std::set<std::size_t> possible;
    for (std::size_t k = 1; k < ev.degree_y; ++k) possible.insert(k);
    for (long x0 : points) {
        SpecializationSample sample{BigInt(x0), specialize_bivariate(z, BigInt(x0)), std::nullopt, {}, {}};
        try {
            sample.factorization = kronecker_factor(sample.specialization, lim);
        } catch (const ResourceError& e) {
            sample.error = e.what();
            ev.samples.push_back(std::move(sample));
            continue;
        }
        std::set<std::size_t> sums{0};
        for (const auto& f : sample.factorization->factors) {
            std::set<std::size_t> next = sums;
            for (std::size_t s : sums) next.insert(s + static_cast<std::size_t>(f.degree()));
            sums = std::move(next);
        }
        for (std::size_t s : sums)
            if (s > 0 && s < ev.degree_y) sample.achievable_degrees.push_back(s);
        std::set<std::size_t> kept;
        for (std::size_t k : possible)
            if (sums.count(k)) kept.insert(k);
        possible = std::move(kept);
        ev.samples.push_back(std::move(sample));
    }
    ev.possible_degrees.assign(possible.begin(), possible.end());
    return ev;
}

}  // namespace dvfactor
