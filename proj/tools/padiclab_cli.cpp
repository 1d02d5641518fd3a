// padiclab command-line driver
//
//   padiclab verify [--seed N] [--identities a,b] [--tol T] [--json] [--output path]
//   padiclab eval <op> [--prime p] [--depth-N n] [--wprime a+bi] [...]
//   padiclab sweep <op> --grid "name=lo:hi:count" [--grid ...] [--json] [--output path]
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/config error.
// A key-value config file can mirror any flag (--config path); explicit
// flags take precedence over file values.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/archimedean.hpp"
#include "padiclab/characters.hpp"
#include "padiclab/exponents.hpp"
#include "padiclab/local_factors.hpp"
#include "padiclab/local_field.hpp"
#include "padiclab/perron.hpp"
#include "padiclab/suite.hpp"
#include "padiclab/whittaker.hpp"

namespace {

using namespace padiclab;

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(text.substr(0, slash));
        long long d = std::stoll(text.substr(slash + 1));
        return Rational::of(n, d);
    }
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    // decimal literal -> exact rational over a power of ten
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational::of(std::stoll(digits), den);
}

struct EvalResult {
    enum class Kind { Complex, Real, Exact, Integer } kind;
    cplx zvalue{0.0, 0.0};
    std::string text; // for Exact / Integer

    static EvalResult complex_value(cplx z) { return {Kind::Complex, z, ""}; }
    static EvalResult real_value(double v) { return {Kind::Real, cplx(v, 0.0), ""}; }
    static EvalResult exact_value(const Rational& r) { return {Kind::Exact, cplx(r.to_double(), 0.0), r.str()}; }
    static EvalResult integer_value(long long v) {
        return {Kind::Integer, cplx(static_cast<double>(v), 0.0), std::to_string(v)};
    }

    std::string str() const {
        switch (kind) {
            case Kind::Complex: return format_complex(zvalue);
            case Kind::Real: return format_double(zvalue.real());
            default: return text;
        }
    }
};

// parameter bag shared by eval and sweep
struct OpParams {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) > 0; }
    std::string str(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw CLI::ValidationError("missing parameter --" + key);
        return it->second;
    }
    double real(const std::string& key) const { return std::stod(str(key)); }
    long long integer(const std::string& key) const { return std::stoll(str(key)); }
    cplx cval(const std::string& key) const { return parse_complex(str(key)); }
    Rational rational(const std::string& key) const { return parse_rational(str(key)); }
    std::pair<cplx, cplx> satake(const std::string& key) const {
        return parse_complex_pair(str(key));
    }
    long long integer_or(const std::string& key, long long dflt) const {
        return has(key) ? integer(key) : dflt;
    }
    cplx cval_or(const std::string& key, cplx dflt) const { return has(key) ? cval(key) : dflt; }
};

ToyDirichletSeries parse_series(const OpParams& p) {
    // --coeffs "1=1.0,3=0.5"
    ToyDirichletSeries Z;
    Z.q = p.integer_or("prime", 2);
    std::string spec = p.str("coeffs");
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string entry = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("bad --coeffs entry: " + entry);
        Z.coefficients[std::stoi(entry.substr(0, eq))] = std::stod(entry.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Z;
}

MultCharacter select_character(const OpParams& p) {
    long long prime = p.integer("prime");
    int N = static_cast<int>(p.integer("depth-N"));
    auto chars = enumerate_characters(prime, N, true);
    if (chars.empty())
        throw CLI::ValidationError("no primitive characters for p=" + std::to_string(prime) +
                                   ", N=" + std::to_string(N));
    std::size_t idx = static_cast<std::size_t>(p.integer_or("chi", 0));
    if (idx >= chars.size()) throw CLI::ValidationError("--chi index out of range");
    MultCharacter chi = chars[idx];
    if (p.has("z")) chi.set_z(p.cval("z"));
    return chi;
}

EvalResult evaluate_op(const std::string& op, const OpParams& p) {
    if (op == "theta") return EvalResult::exact_value(theta(p.rational("delta0")));
    if (op == "convexity") return EvalResult::exact_value(convexity_exponent(static_cast<int>(p.integer("d"))));
    if (op == "subconvex")
        return EvalResult::exact_value(
            subconvex_exponent(static_cast<int>(p.integer("d")), p.rational("delta0")));
    if (op == "beta-prime")
        return EvalResult::exact_value(
            beta_prime_choice(static_cast<int>(p.integer("d")), p.rational("epsilon")));
    if (op == "optimal-h") return EvalResult::real_value(optimal_H(p.real("x"), p.rational("delta0")));

    if (op == "shell-psi")
        return EvalResult::exact_value(shell_psi_exact(p.integer("prime"),
                                                       static_cast<int>(p.integer("ell"))));
    if (op == "shell-measure") {
        MeasureConvention conv = MeasureConvention::UnitAdditive;
        if (p.has("convention") && p.str("convention") == "paper-3.1.3")
            conv = MeasureConvention::Paper313;
        LocalFieldModel field(p.integer("prime"), 2, conv);
        MeasureMode mode = (p.has("mode") && p.str("mode") == "multiplicative")
                               ? MeasureMode::Multiplicative
                               : MeasureMode::Additive;
        return EvalResult::exact_value(field.shell_measure(static_cast<int>(p.integer("n")), mode));
    }
    if (op == "gauss-sum") return EvalResult::complex_value(gauss_sum(select_character(p)));
    if (op == "shell-vanishing")
        return EvalResult::complex_value(shellwise_vanishing(select_character(p),
                                                             static_cast<int>(p.integer("x-ord")),
                                                             static_cast<int>(p.integer("y-ord"))));

    if (op == "whittaker") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(whittaker_value(SatakeParams{a, b}, p.integer("n")));
    }
    if (op == "local-l") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(
            local_L(SatakeParams{a, b}, static_cast<double>(p.integer("prime")), p.cval("s")));
    }
    if (op == "mellin-whittaker") {
        auto [a, b] = p.satake("satake");
        auto sv = mellin_whittaker(SatakeParams{a, b}, static_cast<double>(p.integer("prime")),
                                   p.cval("s"), p.integer_or("truncation", 200));
        return EvalResult::complex_value(sv.value);
    }

    if (op == "k-v1-closed") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(k_v1_closed(SatakeParams{a, b},
                                                     static_cast<double>(p.integer("prime")),
                                                     static_cast<int>(p.integer("depth-N")),
                                                     p.cval("wprime")));
    }
    if (op == "k-v1-series") {
        auto [a, b] = p.satake("satake");
        auto sv = k_v1_series(SatakeParams{a, b}, static_cast<double>(p.integer("prime")),
                              static_cast<int>(p.integer("depth-N")), p.cval("wprime"),
                              p.integer_or("truncation", 200));
        return EvalResult::complex_value(sv.value);
    }
    if (op == "unipotent")
        return EvalResult::complex_value(
            unipotent_closed(static_cast<double>(p.integer("prime")), p.cval("wprime")));
    if (op == "cuspidal") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(cuspidal_closed(SatakeParams{a, b},
                                                         static_cast<double>(p.integer("prime")),
                                                         p.cval("sprime"), p.cval("wprime")));
    }
    if (op == "continuous") {
        ContinuousVariant variant = ContinuousVariant::Corrected;
        if (p.has("variant")) {
            std::string v = p.str("variant");
            if (v == "printed-plus") variant = ContinuousVariant::PrintedPlus;
            else if (v == "printed-minus") variant = ContinuousVariant::PrintedMinus;
            else if (v != "corrected") throw CLI::ValidationError("unknown --variant " + v);
        }
        ParamPoint pt{p.cval_or("s", cplx(0.5, 0.0)), p.cval("sprime"), p.cval("wprime")};
        return EvalResult::complex_value(continuous_closed(
            static_cast<double>(p.integer("prime")), p.cval_or("z", cplx(1.0, 0.0)), pt, variant));
    }
    if (op == "m1") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(
            m1_term(SatakeParams{a, b}, static_cast<double>(p.integer("prime")), p.cval("wprime")));
    }
    if (op == "m2")
        return EvalResult::complex_value(m2_bracket(static_cast<double>(p.integer("prime")),
                                                    p.cval("s"), p.cval("wprime")));
    if (op == "c-prime") {
        auto [a, b] = p.satake("satake");
        return EvalResult::complex_value(c_prime_constant(
            SatakeParams{a, b}, static_cast<double>(p.integer("prime")), p.cval("wprime")));
    }

    if (op == "gamma-ratio-a")
        return EvalResult::complex_value(gamma_ratio_A(p.cval("sprime"), p.cval("w"),
                                                       p.cval_or("mu1", cplx(0, 0)),
                                                       p.cval_or("mu2", cplx(0, 0))));
    if (op == "gamma-ratio-g") {
        PlaceKind kind = (p.has("place") && p.str("place") == "real") ? PlaceKind::Real
                                                                      : PlaceKind::Complex;
        return EvalResult::complex_value(gamma_ratio_G(kind, p.cval("s"), p.cval("sprime"),
                                                       p.cval("w")));
    }
    if (op == "k-inf-leading") {
        ArchPlaceParams place;
        place.kind = (p.has("place") && p.str("place") == "real") ? PlaceKind::Real
                                                                  : PlaceKind::Complex;
        if (place.kind == PlaceKind::Real)
            throw CLI::ValidationError("k-inf-leading: the real-place B ratio is user-supplied; "
                                       "only complex places are exposed on the CLI");
        place.t = p.has("t") ? p.real("t") : 0.0;
        place.t_v = p.has("tv") ? p.real("tv") : 0.0;
        place.ell_v = p.integer_or("ellv", 0);
        place.mu1 = p.cval_or("mu1", cplx(0, 0));
        place.mu2 = p.cval_or("mu2", cplx(0, 0));
        place.w = p.cval("w");
        return EvalResult::complex_value(k_inf_leading(place, p.cval_or("sprime", cplx(0, 0))));
    }
    if (op == "analytic-conductor") {
        ArchPlaceParams place;
        place.kind = (p.has("place") && p.str("place") == "real") ? PlaceKind::Real
                                                                  : PlaceKind::Complex;
        place.t_v = p.has("tv") ? p.real("tv") : 0.0;
        place.ell_v = p.integer_or("ellv", 0);
        return EvalResult::real_value(
            analytic_conductor({place}, p.has("t") ? p.real("t") : 0.0));
    }

    if (op == "perron-indicator")
        return EvalResult::complex_value(
            perron_indicator(p.real("x"), p.real("beta-prime"), p.real("S")));
    if (op == "perron-partial-sum")
        return EvalResult::real_value(
            perron_partial_sum(parse_series(p), p.real("x"), p.real("beta-prime"), p.real("S")));
    if (op == "e-of-x")
        return EvalResult::real_value(
            e_of_x(parse_series(p), p.real("x"), p.real("delta0"), p.real("S")).value);
    if (op == "window-count")
        return EvalResult::integer_value(
            window_set_count(p.real("x"), p.real("S"), p.integer("prime")).count);

    throw CLI::ValidationError("unknown op: " + op);
}

// grid spec: "name=lo:hi:count" (evenly spaced) or "name=a..b" (integer range)
struct GridAxis {
    std::string name;
    std::vector<std::string> values;
};

GridAxis parse_grid_axis(const std::string& spec) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("bad --grid spec: " + spec);
    GridAxis axis;
    axis.name = spec.substr(0, eq);
    std::string range = spec.substr(eq + 1);
    std::size_t dots = range.find("..");
    if (dots != std::string::npos) {
        long long lo = std::stoll(range.substr(0, dots));
        long long hi = std::stoll(range.substr(dots + 2));
        for (long long v = lo; v <= hi; ++v) axis.values.push_back(std::to_string(v));
        return axis;
    }
    std::size_t c1 = range.find(':');
    if (c1 == std::string::npos) {
        axis.values.push_back(range); // single value
        return axis;
    }
    std::size_t c2 = range.find(':', c1 + 1);
    if (c2 == std::string::npos) throw CLI::ValidationError("bad --grid range: " + range);
    double lo = std::stod(range.substr(0, c1));
    double hi = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    long long count = std::stoll(range.substr(c2 + 1));
    if (count < 0) throw CLI::ValidationError("--grid count must be >= 0");
    for (long long i = 0; i < count; ++i) {
        double v = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
        axis.values.push_back(format_double(v));
    }
    return axis;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw CLI::ValidationError("cannot open output file: " + path);
    os << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for p-adic local integrals, Gauss sums, "
                 "Whittaker/Mellin identities, Perron machinery and exponent arithmetic"};
    app.require_subcommand(1);
    app.set_config("--config");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    SuiteConfig cfg;
    std::string identities_csv, output_path;
    bool json_mode = false;
    double tol_override = -1.0;
    verify->add_option("--seed", cfg.seed, "RNG seed (fixed seed => byte-identical report)");
    verify->add_option("--samples", cfg.satake_samples, "Satake sample count");
    verify->add_option("--truncation", cfg.truncation, "base series truncation");
    verify->add_option("--tol", tol_override, "override every tolerance class");
    verify->add_option("--identities", identities_csv, "comma list of identity ids (default all)");
    verify->add_flag("--json", json_mode, "emit the JSON report");
    verify->add_option("--output", output_path, "write the report to a file");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a single operation");
    std::string eval_op;
    eval->add_option("op", eval_op, "operation name")->required();
    std::map<std::string, std::string> eval_params;
    const std::vector<std::string> param_flags = {
        "prime", "depth-N", "wprime", "sprime", "s", "satake", "truncation", "tol",
        "samples", "seed", "delta0", "epsilon", "d", "ell", "n", "x", "S", "beta-prime",
        "z", "chi", "variant", "mode", "convention", "coeffs", "w", "mu1", "mu2",
        "place", "t", "tv", "ellv", "x-ord", "y-ord",
    };
    auto add_param_flags = [&](CLI::App* sub, std::map<std::string, std::string>& bag) {
        for (const auto& name : param_flags) {
            std::string flag = "--" + name;
            if (name == "depth-N") flag += ",--N"; // common shorthand
            sub->add_option_function<std::string>(
                flag, [&bag, name](const std::string& v) { bag[name] = v; });
        }
    };
    add_param_flags(eval, eval_params);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "evaluate an op over a Cartesian grid");
    std::string sweep_op, sweep_output;
    bool sweep_json = false;
    std::vector<std::string> grid_specs;
    std::map<std::string, std::string> sweep_params;
    sweep->add_option("op", sweep_op, "operation name")->required();
    sweep->add_option("--grid", grid_specs, "axis spec name=lo:hi:count or name=a..b");
    sweep->add_flag("--json", sweep_json, "emit JSON rows instead of CSV");
    sweep->add_option("--output", sweep_output, "write table to a file");
    add_param_flags(sweep, sweep_params);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (tol_override >= 0.0) cfg.tol_override = tol_override;
            if (!identities_csv.empty()) {
                std::size_t pos = 0;
                while (pos <= identities_csv.size()) {
                    std::size_t comma = identities_csv.find(',', pos);
                    std::string id = identities_csv.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos);
                    if (!id.empty()) cfg.identities.push_back(id);
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            SuiteResult result = run_suite(cfg);
            std::string report = json_mode ? report_json(cfg, result) : report_text(cfg, result);
            write_out(output_path, report);
            if (!output_path.empty())
                std::cout << "passed " << result.passed << ", failed " << result.failed
                          << ", warnings " << result.warnings << "\n";
            return result.failed == 0 ? 0 : 1;
        }

        if (eval->parsed()) {
            OpParams params{eval_params};
            std::cout << evaluate_op(eval_op, params).str() << "\n";
            return 0;
        }

        if (sweep->parsed()) {
            std::vector<GridAxis> axes;
            for (const auto& spec : grid_specs) axes.push_back(parse_grid_axis(spec));
            bool empty_grid = false;
            for (const auto& axis : axes) empty_grid = empty_grid || axis.values.empty();
            std::vector<std::size_t> idx(axes.size(), 0);
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream csv;
            for (std::size_t a = 0; a < axes.size(); ++a) csv << axes[a].name << ",";
            csv << "value\n";
            bool done = axes.empty() || empty_grid;
            bool first = !empty_grid;
            while (!done || first) {
                first = false;
                OpParams params{sweep_params};
                nlohmann::json row = nlohmann::json::object();
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    params.values[axes[a].name] = axes[a].values[idx[a]];
                    row[axes[a].name] = axes[a].values[idx[a]];
                    csv << axes[a].values[idx[a]] << ",";
                }
                std::string value = evaluate_op(sweep_op, params).str();
                row["value"] = value;
                rows.push_back(row);
                csv << "\"" << value << "\"\n";
                // advance the Cartesian counter
                done = true;
                for (std::size_t a = axes.size(); a-- > 0;) {
                    if (++idx[a] < axes[a].values.size()) {
                        done = false;
                        break;
                    }
                    idx[a] = 0;
                }
                if (axes.empty()) break;
            }
            std::string content = sweep_json ? rows.dump(2) + "\n" : csv.str();
            write_out(sweep_output, content);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
