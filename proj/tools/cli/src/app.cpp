#include "dvfactor/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dvfactor/cli/parser.hpp"
#include "dvfactor/cli/polygon.hpp"
#include "dvfactor/cli/report.hpp"
#include "dvfactor/errors.hpp"
#include "dvfactor/families.hpp"
#include "dvfactor/format.hpp"

namespace dvfactor::cli {

namespace {

struct Options {
    std::string expression;
    std::string prime;
    bool degree_valuation = false;
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> d;
    std::string units;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    std::string polygon;
    bool verify = false;
    std::size_t max_degree = 8;
    std::string input;
    bool timestamps = false;
};

void add_options(CLI::App* cmd, Options& o) {
    cmd->add_option("expression", o.expression, "Polynomial, e.g. \"x^5 + 32*x^2 + 4*x + 8\"");
    auto* prime = cmd->add_option("--prime,--p", o.prime, "Use the p-adic valuation for this prime");
    auto* deg = cmd->add_flag("--degree-valuation", o.degree_valuation,
                              "Use v(g) = -deg g on coefficients in Z[x] (input is a polynomial in y)");
    prime->excludes(deg);
    cmd->add_option("--family", o.family, "Built-in family instead of an expression")
        ->check(CLI::IsMember({"X", "Y", "Z", "eisenstein", "random"}));
    cmd->add_option("--n", o.n, "Family degree (degree bound for random)");
    cmd->add_option("--d", o.d, "Family Z coefficient degree (1..4)");
    cmd->add_option("--units", o.units, "Family X units a0,a1,a2,an");
    cmd->add_option("--seed", o.seed, "Seed for the random family");
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--polygon", o.polygon, "Emit the Newton polygon instead of a report")
        ->check(CLI::IsMember({"svg", "tsv"}));
    cmd->add_flag("--verify", o.verify, "Cross-check verdicts against the factorization oracle");
    cmd->add_option("--max-degree", o.max_degree, "Oracle degree limit")->check(CLI::PositiveNumber);
    cmd->add_option("--input", o.input, "File with one polynomial per line ('#' starts a comment)");
    cmd->add_flag("--timestamps", o.timestamps, "Add a generation timestamp to JSON output");
}

struct UsageError : Error {
    using Error::Error;
};

struct Entry {
    std::string origin;  // "FILE:LINE" for batch input
    std::variant<IntPoly, BiPoly> poly;
};

DiscreteValuation select_valuation(const Options& o) {
    if (!o.prime.empty()) {
        BigInt p;
        if (p.set_str(o.prime, 10) != 0) throw UsageError("--prime expects an integer, got '" + o.prime + "'");
        return DiscreteValuation::padic(p);
    }
    if (o.degree_valuation || o.family == "Z") return DiscreteValuation::degree();
    throw UsageError("exactly one of --prime P or --degree-valuation is required");
}

XUnits parse_units(const std::string& text) {
    std::vector<BigInt> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        BigInt v;
        if (v.set_str(item, 10) != 0) throw UsageError("--units expects integers, got '" + item + "'");
        vals.push_back(v);
    }
    if (vals.size() != 4) throw UsageError("--units expects four values a0,a1,a2,an");
    return XUnits{vals[0], vals[1], vals[2], vals[3]};
}

std::variant<IntPoly, BiPoly> parse_for(const std::string& text, const DiscreteValuation& v) {
    auto expr = parse_expression(text);
    if (v.kind() == DiscreteValuation::Kind::degree) return to_bi_poly(*expr);
    return to_int_poly(*expr);
}

std::vector<Entry> collect_entries(const Options& o, const DiscreteValuation& v) {
    const int sources = !o.expression.empty() + !o.family.empty() + !o.input.empty();
    if (sources != 1) throw UsageError("give exactly one of an expression, --family, or --input");

    if (!o.family.empty()) {
        static const std::map<std::string, Family> names{
            {"X", Family::X}, {"Y", Family::Y}, {"Z", Family::Z}, {"eisenstein", Family::eisenstein},
            {"random", Family::random}};
        FamilyParams fp;
        fp.family = names.at(o.family);
        if (v.kind() == DiscreteValuation::Kind::padic) fp.p = v.prime();
        if (fp.family == Family::Z && v.kind() != DiscreteValuation::Kind::degree)
            throw ArgumentError("family Z needs the degree valuation");
        if (fp.family != Family::Z && v.kind() != DiscreteValuation::Kind::padic)
            throw ArgumentError("family " + o.family + " needs --prime");
        if (o.n == 0 && fp.family != Family::random) throw UsageError("--family needs --n");
        fp.n = o.n;
        fp.d = o.d;
        fp.seed = o.seed;
        if (!o.units.empty()) fp.units = parse_units(o.units);
        return {Entry{"family " + o.family, make_family(fp)}};
    }
    if (!o.expression.empty()) return {Entry{"argument", parse_for(o.expression, v)}};

    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open --input file '" + o.input + "'");
    std::vector<Entry> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto hash = line.find('#');
        const std::string body = line.substr(0, hash);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string origin = o.input + ":" + std::to_string(lineno);
        try {
            out.push_back(Entry{origin, parse_for(body, v)});
        } catch (const ParseError& e) {
            throw UsageError(origin + ": " + e.what());
        }
    }
    return out;
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int execute(Options o, const std::string& mode, std::ostream& out, std::ostream& err) {
    if (mode == "verify") o.verify = true;
    if (mode == "polygon" && o.polygon.empty()) o.polygon = "tsv";

    const DiscreteValuation v = select_valuation(o);
    const std::vector<Entry> entries = collect_entries(o, v);
    const bool batch = !o.input.empty();

    FactorizationLimits limits;
    limits.max_degree = o.max_degree;

    int status = exit_code::ok;
    std::vector<Outcome> outcomes;
    for (const auto& e : entries) {
        Outcome oc = run_analysis(e.poly, v);
        if (o.verify) {
            try {
                if (const auto* f = std::get_if<IntPoly>(&e.poly))
                    oc.univariate = verify_univariate(*f, v, oc.analysis, limits);
                else
                    oc.bivariate = verify_bivariate(std::get<BiPoly>(e.poly), oc.analysis, limits);
            } catch (const ResourceError& re) {
                err << "error: " << e.origin << ": oracle limit: " << re.what() << "\n";
                status = exit_code::resource;
                continue;
            }
            if (!oc.validated()) status = std::max(status, exit_code::validation_failed);
        }
        outcomes.push_back(std::move(oc));
    }

    if (!o.polygon.empty()) {
        for (const auto& oc : outcomes)
            out << (o.polygon == "svg" ? polygon_svg(oc.analysis.profile,
                                                     "Newton polygon of " + display(oc.poly) + ", " +
                                                         oc.valuation.describe())
                                       : polygon_tsv(oc.analysis.profile));
        return status;
    }
    if (o.format == "json") {
        Json doc = Json::array();
        for (const auto& oc : outcomes) {
            Json j = to_json(oc);
            if (o.timestamps) j["generated_at"] = timestamp();
            doc.push_back(std::move(j));
        }
        if (!batch && doc.size() == 1) doc = doc[0];
        if (!batch && doc.empty()) return status;
        out << doc.dump(2) << "\n";
        return status;
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (i > 0) out << "\n----\n\n";
        out << render_text(outcomes[i]);
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Irreducibility and factor-degree criteria from Newton slopes over discrete valuations"};
    app.name("dvfactor");
    app.require_subcommand(1);
    Options opts;
    std::map<std::string, CLI::App*> commands;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"analyze", "Evaluate every criterion and report the strongest verdict"},
             {"polygon", "Emit the valuation points and lower Newton polygon (TSV or SVG)"},
             {"verify", "Analyze, then validate each verdict against the brute-force oracle"}}) {
        commands[name] = app.add_subcommand(name, help);
        add_options(commands[name], opts);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_code::ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    std::string mode;
    for (const auto& [name, cmd] : commands)
        if (cmd->parsed()) mode = name;
    try {
        return execute(opts, mode, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const ResourceError& e) {
        err << "error: oracle limit: " << e.what() << "\n";
        return exit_code::resource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_code::usage;
}

}  // namespace dvfactor::cli
