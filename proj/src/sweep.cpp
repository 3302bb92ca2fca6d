#include "hhb/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "hhb/corpus.hpp"
#include "hhb/errors.hpp"

namespace hhb {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
std::vector<T> read_list(const Json& j, const char* key, std::vector<std::string>& bad) {
    if (!j.contains(key)) {
        bad.emplace_back(key);
        return {};
    }
    try {
        return j.at(key).get<std::vector<T>>();
    } catch (const nlohmann::json::exception&) {
        bad.emplace_back(key);
        return {};
    }
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

Json optional_json(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string optional_csv(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
}

std::string skip_reason(const FunctionSpec& fspec, double a, double b, double m) {
    if (!(a >= 0.0)) return "a < 0";
    if (b > fspec.b_star) return "b > b_star";
    if (!(a < m * b)) return "a ≥ m·b";
    return {};
}

} // namespace

void SweepConfig::validate() const {
    std::vector<std::string> bad;
    if (function_ids.empty()) {
        bad.emplace_back("function_ids");
    } else {
        for (const auto& id : function_ids) {
            if (!find_function(id)) {
                bad.push_back("function_ids (unknown id '" + id + "')");
                break;
            }
        }
    }
    if (intervals.empty()) {
        bad.emplace_back("intervals");
    } else {
        for (const auto& [a, b] : intervals) {
            if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
                bad.emplace_back("intervals (each needs finite a < b)");
                break;
            }
        }
    }
    auto check_list = [&](const std::vector<double>& xs, const char* name, auto ok) {
        if (xs.empty()) {
            bad.emplace_back(name);
            return;
        }
        for (double x : xs) {
            if (!ok(x)) {
                bad.emplace_back(name);
                return;
            }
        }
    };
    check_list(alphas, "alphas", [](double x) { return x >= 0.0 && x <= 1.0; });
    check_list(ms, "ms", [](double x) { return x > 0.0 && x <= 1.0; });
    check_list(qs, "qs", [](double x) { return std::isfinite(x) && x >= 1.0; });
    if (!(quad_tol > 0.0) || !std::isfinite(quad_tol)) bad.emplace_back("quad_tol");
    if (grid_n < 3) bad.emplace_back("grid_n");
    if (!(convexity_tol > 0.0) || !std::isfinite(convexity_tol)) bad.emplace_back("convexity_tol");
    if (!bad.empty()) {
        throw ConfigError("invalid sweep configuration: " + join(bad), bad);
    }
}

std::size_t SweepConfig::total_configurations() const {
    return function_ids.size() * intervals.size() * alphas.size() * ms.size() * qs.size();
}

SweepConfig config_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what(), {"<document>"});
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object", {"<document>"});

    std::vector<std::string> bad;
    SweepConfig c;
    c.function_ids = read_list<std::string>(j, "function_ids", bad);
    for (const auto& pair : read_list<std::vector<double>>(j, "intervals", bad)) {
        if (pair.size() != 2) {
            bad.emplace_back("intervals");
            break;
        }
        c.intervals.emplace_back(pair[0], pair[1]);
    }
    c.alphas = read_list<double>(j, "alphas", bad);
    c.ms = read_list<double>(j, "ms", bad);
    c.qs = read_list<double>(j, "qs", bad);
    try {
        if (j.contains("quad_tol")) c.quad_tol = j.at("quad_tol").get<double>();
    } catch (const nlohmann::json::exception&) { bad.emplace_back("quad_tol"); }
    try {
        if (j.contains("grid_n")) c.grid_n = j.at("grid_n").get<std::size_t>();
    } catch (const nlohmann::json::exception&) { bad.emplace_back("grid_n"); }
    try {
        if (j.contains("convexity_tol")) c.convexity_tol = j.at("convexity_tol").get<double>();
    } catch (const nlohmann::json::exception&) { bad.emplace_back("convexity_tol"); }
    try {
        if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    } catch (const nlohmann::json::exception&) { bad.emplace_back("output_path"); }
    if (j.contains("format")) {
        const Json& f = j.at("format");
        if (f == "csv") c.format = OutputFormat::csv;
        else if (f == "json") c.format = OutputFormat::json;
        else bad.emplace_back("format");
    }
    if (!bad.empty()) throw ConfigError("invalid sweep configuration: " + join(bad), bad);
    return c;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config", path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(text);
}

bool ReportRow::gate_violation() const {
    return convexity_holds.value_or(false) && slack_min && *slack_min < -kSlackTolerance;
}

SweepResult compute_sweep(const SweepConfig& config) {
    config.validate();

    std::vector<FunctionSpec> functions;
    for (const auto& id : config.function_ids) functions.push_back(*find_function(id));

    // Gate verdicts keyed by (function, alpha, m, q) indices.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, ConvexityVerdict> gates;

    SweepResult result;
    result.rows.reserve(config.total_configurations());
    for (std::size_t fi = 0; fi < functions.size(); ++fi) {
        const FunctionSpec& fspec = functions[fi];
        for (const auto& [a, b] : config.intervals) {
            for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
                for (std::size_t mi = 0; mi < config.ms.size(); ++mi) {
                    for (std::size_t qi = 0; qi < config.qs.size(); ++qi) {
                        ReportRow row;
                        row.function_id = fspec.id;
                        row.a = a;
                        row.b = b;
                        row.alpha = config.alphas[ai];
                        row.m = config.ms[mi];
                        row.q = config.qs[qi];
                        row.skipped_reason = skip_reason(fspec, a, b, row.m);
                        if (row.skipped()) {
                            ++result.rows_skipped;
                            result.rows.push_back(std::move(row));
                            continue;
                        }
                        const AMParams params{row.alpha, row.m, row.q};
                        try {
                            const auto key = std::make_tuple(fi, ai, mi, qi);
                            auto it = gates.find(key);
                            if (it == gates.end()) {
                                it = gates.emplace(key, check_abs_f2_q(fspec, params, fspec.b_star,
                                                                       config.grid_n,
                                                                       config.convexity_tol))
                                         .first;
                            }
                            const BoundReport rep =
                                evaluate_all(fspec, a, b, params, config.quad_tol, it->second);
                            row.lhs = rep.lhs;
                            row.rhs_thm21 = rep.rhs(BoundLabel::thm21);
                            row.rhs_thm22_tight = rep.rhs(BoundLabel::thm22_tight);
                            row.rhs_thm22 = rep.rhs(BoundLabel::thm22);
                            row.rhs_thm23_tight = rep.rhs(BoundLabel::thm23_tight);
                            row.rhs_thm23 = rep.rhs(BoundLabel::thm23);
                            row.rhs_thm24 = rep.rhs(BoundLabel::thm24);
                            row.min_rhs = rep.min_rhs();
                            row.min_rhs_label = std::string(to_string(rep.tightest));
                            row.slack_min = rep.min_slack();
                            row.convexity_holds = rep.convexity_gate.holds;
                        } catch (const std::exception& e) {
                            ReportRow failed;
                            failed.function_id = fspec.id;
                            failed.a = a;
                            failed.b = b;
                            failed.alpha = row.alpha;
                            failed.m = row.m;
                            failed.q = row.q;
                            row = std::move(failed);
                            row.skipped_reason = std::string("error: ") + e.what();
                            ++result.row_errors;
                            ++result.rows_skipped;
                            result.rows.push_back(std::move(row));
                            continue;
                        }
                        ++result.rows_in;
                        if (row.gate_violation()) ++result.gate_violations;
                        result.rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return result;
}

SweepResult run_sweep(const SweepConfig& config) {
    SweepResult result = compute_sweep(config);
    if (!config.output_path.empty()) write_rows(config.output_path, config.format, result.rows);
    return result;
}

const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> columns = {
        "function_id", "a", "b", "alpha", "m", "q", "lhs",
        "rhs_thm21", "rhs_thm22_tight", "rhs_thm22", "rhs_thm23_tight", "rhs_thm23", "rhs_thm24",
        "min_rhs", "min_rhs_label", "slack_min", "convexity_holds", "skipped_reason",
    };
    return columns;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    const auto& cols = report_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\r\n";
    for (const auto& r : rows) {
        const std::vector<std::string> fields = {
            csv_escape(r.function_id), format_real(r.a), format_real(r.b), format_real(r.alpha),
            format_real(r.m), format_real(r.q), optional_csv(r.lhs), optional_csv(r.rhs_thm21),
            optional_csv(r.rhs_thm22_tight), optional_csv(r.rhs_thm22),
            optional_csv(r.rhs_thm23_tight), optional_csv(r.rhs_thm23), optional_csv(r.rhs_thm24),
            optional_csv(r.min_rhs), csv_escape(r.min_rhs_label), optional_csv(r.slack_min),
            r.convexity_holds ? (*r.convexity_holds ? "true" : "false") : "",
            csv_escape(r.skipped_reason),
        };
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
        out << "\r\n";
    }
}

void write_json(std::ostream& out, const std::vector<ReportRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json o;
        o["function_id"] = r.function_id;
        o["a"] = r.a;
        o["b"] = r.b;
        o["alpha"] = r.alpha;
        o["m"] = r.m;
        o["q"] = r.q;
        o["lhs"] = optional_json(r.lhs);
        o["rhs_thm21"] = optional_json(r.rhs_thm21);
        o["rhs_thm22_tight"] = optional_json(r.rhs_thm22_tight);
        o["rhs_thm22"] = optional_json(r.rhs_thm22);
        o["rhs_thm23_tight"] = optional_json(r.rhs_thm23_tight);
        o["rhs_thm23"] = optional_json(r.rhs_thm23);
        o["rhs_thm24"] = optional_json(r.rhs_thm24);
        o["min_rhs"] = optional_json(r.min_rhs);
        o["min_rhs_label"] = r.min_rhs_label.empty() ? Json(nullptr) : Json(r.min_rhs_label);
        o["slack_min"] = optional_json(r.slack_min);
        o["convexity_holds"] = r.convexity_holds ? Json(*r.convexity_holds) : Json(nullptr);
        o["skipped_reason"] = r.skipped_reason.empty() ? Json(nullptr) : Json(r.skipped_reason);
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
}

void write_rows(const std::string& path, OutputFormat format, const std::vector<ReportRow>& rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output", path);
    if (format == OutputFormat::csv) write_csv(out, rows);
    else write_json(out, rows);
    out.flush();
    if (!out) throw IoError("write failed", path);
}

TightnessTable tightness_from_rows(const SweepConfig& config, const std::vector<ReportRow>& rows) {
    TightnessTable table;
    std::map<std::tuple<double, double, double>, std::size_t> index;
    for (double alpha : config.alphas) {
        for (double m : config.ms) {
            for (double q : config.qs) {
                const auto key = std::make_tuple(alpha, m, q);
                if (index.count(key)) continue;
                index.emplace(key, table.cells.size());
                TightnessCell cell;
                cell.alpha = alpha;
                cell.m = m;
                cell.q = q;
                table.cells.push_back(cell);
            }
        }
    }
    for (const auto& r : rows) {
        if (r.skipped()) continue;
        const auto it = index.find(std::make_tuple(r.alpha, r.m, r.q));
        if (it == index.end()) continue;
        TightnessCell& cell = table.cells[it->second];
        ++cell.rows;
        if (r.convexity_holds.value_or(false)) ++cell.gated_rows;
        for (std::size_t k = 0; k < kBoundLabels.size(); ++k) {
            if (r.min_rhs_label == to_string(kBoundLabels[k])) ++cell.wins[k];
        }
    }
    return table;
}

TightnessTable tightness_table(const SweepConfig& config) {
    return tightness_from_rows(config, compute_sweep(config).rows);
}

void write_tightness_csv(std::ostream& out, const TightnessTable& table) {
    out << "alpha,m,q,rows,gated_rows";
    for (BoundLabel label : kBoundLabels) out << "," << to_string(label);
    out << "\r\n";
    for (const auto& c : table.cells) {
        out << format_real(c.alpha) << "," << format_real(c.m) << "," << format_real(c.q) << ","
            << c.rows << "," << c.gated_rows;
        for (std::size_t w : c.wins) out << "," << w;
        out << "\r\n";
    }
}

} // namespace hhb
