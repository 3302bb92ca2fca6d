// hhb: command-line front end for the trapezoid-bound toolkit.
//
//   hhb verify            [--tol X] [--out summary.json]
//   hhb sweep             [--config cfg.json] [--out rows.csv] [--tol X] ...
//   hhb tightness         [--config cfg.json] [--out table.csv] ...
//   hhb check-convexity   --function ID --alpha A --m M --q Q [--b-star B] ...
//
// Exit status: 0 all checks pass, 1 an inequality/identity failure,
// 2 configuration or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhb/corpus.hpp"
#include "hhb/errors.hpp"
#include "hhb/sweep.hpp"
#include "hhb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct SweepFlags {
    std::string config_path;
    std::string out;
    std::optional<double> tol;
    std::string format;
    std::optional<std::size_t> grid_n;
    std::optional<double> convexity_tol;
    std::vector<std::string> functions;
    std::vector<std::string> intervals;
    std::vector<double> alphas;
    std::vector<double> ms;
    std::vector<double> qs;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON sweep configuration");
    cmd->add_option("--out", f.out, "output path (overrides output_path)");
    cmd->add_option("--tol", f.tol, "quadrature tolerance (overrides quad_tol)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--grid-n", f.grid_n, "convexity grid points per axis");
    cmd->add_option("--convexity-tol", f.convexity_tol, "convexity violation tolerance");
    cmd->add_option("--functions", f.functions, "corpus ids")->delimiter(',');
    cmd->add_option("--intervals", f.intervals, "intervals as a:b")->delimiter(',');
    cmd->add_option("--alphas", f.alphas, "alpha values")->delimiter(',');
    cmd->add_option("--ms", f.ms, "m values")->delimiter(',');
    cmd->add_option("--qs", f.qs, "q values")->delimiter(',');
}

hhb::SweepConfig build_config(const SweepFlags& f) {
    hhb::SweepConfig c;
    if (!f.config_path.empty()) c = hhb::load_config(f.config_path);
    if (!f.out.empty()) c.output_path = f.out;
    if (f.tol) c.quad_tol = *f.tol;
    if (f.format == "csv") c.format = hhb::OutputFormat::csv;
    if (f.format == "json") c.format = hhb::OutputFormat::json;
    if (f.grid_n) c.grid_n = *f.grid_n;
    if (f.convexity_tol) c.convexity_tol = *f.convexity_tol;
    if (!f.functions.empty()) c.function_ids = f.functions;
    if (!f.intervals.empty()) {
        c.intervals.clear();
        for (const auto& s : f.intervals) {
            const auto colon = s.find(':');
            double a = 0.0, b = 0.0;
            try {
                if (colon == std::string::npos) throw std::invalid_argument(s);
                a = std::stod(s.substr(0, colon));
                b = std::stod(s.substr(colon + 1));
            } catch (const std::exception&) {
                throw hhb::ConfigError("interval '" + s + "' is not of the form a:b", {"intervals"});
            }
            c.intervals.emplace_back(a, b);
        }
    }
    if (!f.alphas.empty()) c.alphas = f.alphas;
    if (!f.ms.empty()) c.ms = f.ms;
    if (!f.qs.empty()) c.qs = f.qs;
    c.validate();
    return c;
}

int cmd_verify(double tol, const std::string& out) {
    const auto summary = hhb::verify_identities(tol);
    for (const auto& c : summary.checks) {
        std::printf("%-4s %-36s residual=%-12.4g threshold=%-10.3g cases=%zu%s%s\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.worst_residual, c.threshold,
                    c.cases, c.detail.empty() ? "" : "  ", c.detail.c_str());
    }
    if (!out.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : summary.checks) {
            arr.push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"worst_residual", c.worst_residual},
                           {"threshold", c.threshold},
                           {"cases", c.cases},
                           {"detail", c.detail}});
        }
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        if (!f) throw hhb::IoError("cannot open output", out);
        f << arr.dump(2) << "\n";
        if (!f) throw hhb::IoError("write failed", out);
    }
    return summary.all_passed() ? kExitOk : kExitFailure;
}

int cmd_sweep(const SweepFlags& flags) {
    const auto config = build_config(flags);
    const auto result = hhb::run_sweep(config);
    if (config.output_path.empty()) {
        if (config.format == hhb::OutputFormat::csv) hhb::write_csv(std::cout, result.rows);
        else hhb::write_json(std::cout, result.rows);
    }
    std::fprintf(stderr, "rows: %zu evaluated, %zu skipped, %zu total; gate violations: %zu\n",
                 result.rows_in, result.rows_skipped, config.total_configurations(),
                 result.gate_violations);
    for (const auto& r : result.rows) {
        if (r.gate_violation()) {
            std::fprintf(stderr, "VIOLATION %s a=%g b=%g alpha=%g m=%g q=%g slack_min=%.17g\n",
                         r.function_id.c_str(), r.a, r.b, r.alpha, r.m, r.q, *r.slack_min);
        }
    }
    return (result.gate_violations == 0 && result.row_errors == 0) ? kExitOk : kExitFailure;
}

int cmd_tightness(const SweepFlags& flags) {
    auto config = build_config(flags);
    const std::string out = config.output_path;
    config.output_path.clear();
    const auto result = hhb::compute_sweep(config);
    const auto table = hhb::tightness_from_rows(config, result.rows);
    if (out.empty()) {
        hhb::write_tightness_csv(std::cout, table);
    } else {
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        if (!f) throw hhb::IoError("cannot open output", out);
        hhb::write_tightness_csv(f, table);
        if (!f) throw hhb::IoError("write failed", out);
    }
    return (result.gate_violations == 0 && result.row_errors == 0) ? kExitOk : kExitFailure;
}

struct ConvexityFlags {
    std::string function_id;
    double alpha = 1.0;
    double m = 1.0;
    double q = 1.0;
    std::optional<double> b_star;
    std::size_t grid_n = hhb::kDefaultGridN;
    double tol = hhb::kDefaultConvexityTol;
    std::string out;
};

int cmd_check_convexity(const ConvexityFlags& f) {
    const auto fspec = hhb::find_function(f.function_id);
    if (!fspec) throw hhb::ConfigError("unknown function id '" + f.function_id + "'", {"function"});
    const double b_star = f.b_star.value_or(fspec->b_star);
    const hhb::AMParams params{f.alpha, f.m, f.q};
    const auto v = hhb::check_abs_f2_q(*fspec, params, b_star, f.grid_n, f.tol);

    nlohmann::ordered_json j;
    j["function_id"] = fspec->id;
    j["alpha"] = f.alpha;
    j["m"] = f.m;
    j["q"] = f.q;
    j["b_star"] = b_star;
    j["grid_n"] = f.grid_n;
    j["class"] = std::string(hhb::to_string(hhb::classify(f.alpha, f.m)));
    j["holds"] = v.holds;
    j["margin"] = v.margin;
    if (v.witness) {
        j["witness"] = {{"x", v.witness->x}, {"y", v.witness->y}, {"t", v.witness->t}};
    } else {
        j["witness"] = nullptr;
    }
    const std::string text = j.dump(2) + "\n";
    if (f.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(f.out, std::ios::binary | std::ios::trunc);
        if (!o) throw hhb::IoError("cannot open output", f.out);
        o << text;
    }
    return v.holds ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-Hadamard trapezoid bounds for (alpha,m)-convex |f''|^q"};
    app.require_subcommand(1);

    double verify_tol = hhb::kDefaultVerifyTol;
    std::string verify_out;
    std::string verify_config;
    auto* verify = app.add_subcommand("verify", "run the identity and inequality checks");
    verify->add_option("--tol", verify_tol, "residual tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "write a JSON summary here");
    verify->add_option("--config", verify_config, "accepted for symmetry; unused");

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "evaluate every bound over a parameter grid");
    add_sweep_flags(sweep, sweep_flags);

    SweepFlags tight_flags;
    auto* tightness = app.add_subcommand("tightness", "count which bound is tightest per (alpha,m,q)");
    add_sweep_flags(tightness, tight_flags);

    ConvexityFlags conv;
    auto* convexity = app.add_subcommand("check-convexity", "sampled (alpha,m)-convexity check of |f''|^q");
    convexity->add_option("--function", conv.function_id, "corpus id")->required();
    convexity->add_option("--alpha", conv.alpha, "alpha in [0,1]");
    convexity->add_option("--m", conv.m, "m in [0,1]");
    convexity->add_option("--q", conv.q, "q >= 1");
    convexity->add_option("--b-star", conv.b_star, "domain bound (default: function's b_star)");
    convexity->add_option("--grid-n", conv.grid_n, "grid points per axis");
    convexity->add_option("--tol", conv.tol, "violation tolerance");
    convexity->add_option("--out", conv.out, "write the verdict JSON here");
    convexity->add_option("--config", verify_config, "accepted for symmetry; unused");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*verify) return cmd_verify(verify_tol, verify_out);
        if (*sweep) return cmd_sweep(sweep_flags);
        if (*tightness) return cmd_tightness(tight_flags);
        if (*convexity) return cmd_check_convexity(conv);
    } catch (const hhb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hhb::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hhb::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitConfig;
}
