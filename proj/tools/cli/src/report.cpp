#include "dvfactor/cli/report.hpp"

#include <sstream>

#include "dvfactor/format.hpp"

namespace dvfactor::cli {

namespace {

// Valuations are small in practice; fall back to a string past 64 bits.
Json valint_json(const ValInt& v) {
    if (v.is_infinite()) return "inf";
    if (v.value().fits_slong_p()) return v.value().get_si();
    return v.value().get_str();
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json criterion_json(const CriterionReport& r) {
    Json j;
    j["name"] = criterion_name(r.criterion);
    j["s"] = optional_index(r.s);
    j["d_s"] = optional_index(r.d_s);
    Json hs = Json::array();
    for (const auto& h : r.hypotheses) hs.push_back(Json{{"label", h.label}, {"passed", h.passed}, {"detail", h.detail}});
    j["hypotheses"] = std::move(hs);
    if (r.condition_b) {
        Json cb{{"lhs", r.condition_b->lhs.get_str()}, {"rhs", r.condition_b->rhs.get_str()},
                {"holds", r.condition_b->lhs == r.condition_b->rhs}};
        if (r.condition_b->slope_form) cb["slope_form"] = r.condition_b->slope_form->get_str();
        j["condition_b"] = std::move(cb);
    }
    j["verdict"] = verdict_json(r.verdict);
    return j;
}

Json pair_json(const FactorPair& p) {
    return Json{{"g", to_string(p.g)},           {"h", to_string(p.h)},           {"k1", p.k1},
                {"k2", p.k2},                    {"x1", valint_json(p.x1)},       {"x2", valint_json(p.x2)}};
}

Json factors_json(const Factorization& f, char var) {
    Json out = Json::array();
    for (const auto& g : f.factors) out.push_back(to_string(g, var));
    return out;
}

Json univariate_json(const UnivariateVerification& u) {
    Json j;
    j["mode"] = "factorization";
    j["content"] = u.factorization.content.get_str();
    j["factors"] = factors_json(u.factorization, 'x');
    Json pairs = Json::array();
    for (const auto& p : u.pairs) pairs.push_back(pair_json(p));
    j["bipartitions"] = std::move(pairs);
    Json vals = Json::array();
    for (const auto& v : u.validations) {
        Json checks = Json::array();
        for (const auto& c : v.report.checks) checks.push_back(Json{{"k1", c.k1}, {"k2", c.k2}, {"passed", c.passed}});
        vals.push_back(Json{{"criterion", criterion_name(v.criterion)},
                            {"verdict", verdict_json(v.report.verdict)},
                            {"valid", v.report.valid},
                            {"checks", std::move(checks)}});
    }
    j["validations"] = std::move(vals);
    Json kappas = Json::array();
    for (std::size_t i = 0; i < u.kappas.size(); ++i) {
        const auto& k = u.kappas[i];
        kappas.push_back(Json{{"pair", i},
                              {"kappa", k.kappa.get_str()},
                              {"in_range", k.in_range},
                              {"divisibility", k.divisibility}});
    }
    j["kappa_traces"] = std::move(kappas);
    j["validated"] = u.validated;
    return j;
}

Json bivariate_json(const BivariateVerification& b) {
    Json j;
    j["mode"] = "specialization_evidence";
    j["banner"] = "evidence only: bivariate factorizations are not certified";
    Json samples = Json::array();
    for (const auto& s : b.evidence.samples) {
        Json sj;
        sj["x0"] = s.x0.get_str();
        sj["specialization"] = to_string(s.specialization, 'y');
        if (s.factorization) {
            sj["factors"] = factors_json(*s.factorization, 'y');
            sj["irreducible"] = s.irreducible();
            sj["achievable_degrees"] = s.achievable_degrees;
        } else {
            sj["error"] = s.error;
        }
        samples.push_back(std::move(sj));
    }
    j["samples"] = std::move(samples);
    j["possible_degrees"] = b.evidence.possible_degrees;
    Json statuses = Json::array();
    for (const auto& [c, st] : b.statuses)
        statuses.push_back(Json{{"criterion", criterion_name(c)}, {"status", evidence_status_name(st)}});
    j["statuses"] = std::move(statuses);
    j["validated"] = !b.contradicted;
    return j;
}

}  // namespace

bool Outcome::validated() const {
    if (univariate) return univariate->validated;
    if (bivariate) return !bivariate->contradicted;
    return true;
}

Outcome run_analysis(std::variant<IntPoly, BiPoly> poly, const DiscreteValuation& valuation) {
    const ValuationProfile profile =
        std::visit([&](const auto& f) { return valuation_profile(f, valuation); }, poly);
    return Outcome{std::move(poly), valuation, analyze(profile), std::nullopt, std::nullopt};
}

std::string display(const std::variant<IntPoly, BiPoly>& poly) {
    return std::visit([](const auto& f) { return to_string(f); }, poly);
}

Json slope_json(const Slope& s) {
    if (s.is_neg_infinity()) return Json{{"neg_infinity", true}};
    return Json{{"num", s.numerator().get_str()}, {"den", s.denominator().get_str()}, {"display", s.display()}};
}

Json verdict_json(const Verdict& v) {
    struct Visitor {
        Json operator()(const Irreducible&) const { return Json{{"kind", "irreducible"}}; }
        Json operator()(const FactorDegreeMultipleOf& x) const {
            return Json{{"kind", "factor_degree_multiple_of"}, {"m", x.m}};
        }
        Json operator()(const MaxFactorDegreeAtLeast& x) const {
            return Json{{"kind", "max_factor_degree_at_least"}, {"b", x.bound}};
        }
        Json operator()(const MinFactorDegreeAtMost& x) const {
            return Json{{"kind", "min_factor_degree_at_most"}, {"s", x.s}};
        }
        Json operator()(const Inconclusive& x) const { return Json{{"kind", "inconclusive"}, {"reason", x.reason}}; }
    };
    return std::visit(Visitor{}, v);
}

Json to_json(const Outcome& o) {
    const AnalysisReport& a = o.analysis;
    Json j;
    j["polynomial"] = display(o.poly);
    j["degree"] = a.profile.n;
    Json val{{"kind", o.valuation.kind() == DiscreteValuation::Kind::padic ? "p-adic" : "degree"}};
    if (o.valuation.kind() == DiscreteValuation::Kind::padic) val["p"] = o.valuation.prime().get_str();
    j["valuation"] = std::move(val);

    if (const auto* f = std::get_if<IntPoly>(&o.poly)) {
        Json coeffs = Json::array();
        for (const auto& c : f->coefficients()) coeffs.push_back(c.get_str());
        j["coefficients"] = std::move(coeffs);
    } else {
        Json coeffs = Json::array();
        for (const auto& c : std::get<BiPoly>(o.poly).coefficients()) coeffs.push_back(to_string(c));
        j["coefficients"] = std::move(coeffs);
    }

    Json profile = Json::array();
    for (std::size_t i = 0; i <= a.profile.n; ++i)
        profile.push_back(Json{{"i", i}, {"v", valint_json(a.profile.vals[i])}});
    j["profile"] = std::move(profile);

    Json slopes = Json::array();
    for (std::size_t i = 0; i < a.slopes.size(); ++i) {
        Json s{{"i", i}};
        s.update(slope_json(a.slopes[i]));
        slopes.push_back(std::move(s));
    }
    j["slopes"] = std::move(slopes);
    j["newton_index"] = slope_json(a.newton_index);
    j["dominant_s"] = optional_index(a.dominant_s);
    j["d_s"] = optional_index(a.report(Criterion::theorem_1).d_s);

    Json hull = Json::array();
    for (const auto& v : a.hull) hull.push_back(Json{{"i", v.i}, {"v", valint_json(ValInt(v.v))}});
    j["hull"] = std::move(hull);

    Json criteria = Json::array();
    for (const auto& r : a.criteria) criteria.push_back(criterion_json(r));
    j["criteria"] = std::move(criteria);

    Json strongest = Json::array();
    for (const auto& v : a.strongest.verdicts) strongest.push_back(verdict_json(v));
    j["strongest_verdict"] = std::move(strongest);

    if (o.univariate) j["oracle"] = univariate_json(*o.univariate);
    if (o.bivariate) j["oracle"] = bivariate_json(*o.bivariate);
    return j;
}

std::string render_text(const Outcome& o) {
    const AnalysisReport& a = o.analysis;
    std::ostringstream out;
    out << "polynomial: " << display(o.poly) << "\n";
    out << "valuation:  " << o.valuation.describe() << "\n";
    out << "degree n:   " << a.profile.n << "\n";
    out << "profile:   ";
    for (std::size_t i = 0; i <= a.profile.n; ++i) out << " v(a_" << i << ")=" << a.profile.vals[i].to_string();
    out << "\nslopes:    ";
    for (std::size_t i = 0; i < a.slopes.size(); ++i) out << " m_" << i << "=" << a.slopes[i].display();
    out << "\nnewton index e(f): " << a.newton_index.display() << "\n";
    out << "dominant s: " << (a.dominant_s ? std::to_string(*a.dominant_s) : "none") << "\n";
    out << "lower hull:";
    for (const auto& v : a.hull) out << " (" << v.i << "," << v.v.get_str() << ")";
    out << "\n";
    for (const auto& r : a.criteria) {
        out << "\n[" << criterion_name(r.criterion) << "]\n";
        for (const auto& h : r.hypotheses)
            out << "  " << (h.passed ? "pass" : "FAIL") << "  " << h.label << ": " << h.detail << "\n";
        if (r.condition_b)
            out << "  condition (b): lhs = " << r.condition_b->lhs.get_str()
                << ", rhs = " << r.condition_b->rhs.get_str() << "\n";
        out << "  verdict: " << describe(r.verdict) << "\n";
    }
    out << "\nstrongest verdict:";
    for (const auto& v : a.strongest.verdicts) out << " " << describe(v);
    out << "\n";

    if (o.univariate) {
        const auto& u = *o.univariate;
        out << "\noracle factorization: content " << u.factorization.content.get_str();
        for (const auto& f : u.factorization.factors) out << " * (" << to_string(f) << ")";
        out << "\nbipartitions: " << u.pairs.size() << "\n";
        for (std::size_t i = 0; i < u.pairs.size(); ++i) {
            const auto& p = u.pairs[i];
            out << "  #" << i << " (" << to_string(p.g) << ") * (" << to_string(p.h) << ")  degrees " << p.k1 << "+"
                << p.k2 << "\n";
        }
        for (const auto& v : u.validations) {
            out << "  " << criterion_name(v.criterion) << ": " << (v.report.valid ? "valid" : "VIOLATED");
            for (const auto& c : v.report.checks)
                out << " [" << c.k1 << "+" << c.k2 << " " << (c.passed ? "ok" : "fail") << "]";
            out << "\n";
        }
        for (std::size_t i = 0; i < u.kappas.size(); ++i)
            out << "  kappa #" << i << " = " << u.kappas[i].kappa.get_str()
                << (u.kappas[i].passed() ? " ok" : " VIOLATION") << "\n";
        out << "validated: " << (u.validated ? "yes" : "no") << "\n";
    }
    if (o.bivariate) {
        const auto& b = *o.bivariate;
        out << "\nEVIDENCE ONLY: bivariate factorizations are not certified\n";
        for (const auto& s : b.evidence.samples) {
            out << "  x0=" << s.x0.get_str() << ": " << to_string(s.specialization, 'y');
            if (s.factorization) {
                out << (s.irreducible() ? "  irreducible" : "  factors");
                if (!s.irreducible())
                    for (const auto& f : s.factorization->factors) out << " (" << to_string(f, 'y') << ")";
            } else {
                out << "  skipped: " << s.error;
            }
            out << "\n";
        }
        for (const auto& [c, st] : b.statuses) out << "  " << criterion_name(c) << ": " << evidence_status_name(st) << "\n";
        out << "contradiction: " << (b.contradicted ? "yes" : "no") << "\n";
    }
    return out.str();
}

}  // namespace dvfactor::cli
