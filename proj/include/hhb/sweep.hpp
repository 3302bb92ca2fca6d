#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhb/bounds.hpp"

namespace hhb {

enum class OutputFormat { csv, json };

/// Declarative description of a parameter sweep. Loaded from a JSON object
/// with the same field names; intervals are [[a, b], ...].
struct SweepConfig {
    std::vector<std::string> function_ids;
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> alphas;
    std::vector<double> ms;
    std::vector<double> qs;
    double quad_tol = kDefaultQuadTol;
    std::size_t grid_n = kDefaultGridN;
    double convexity_tol = kDefaultConvexityTol;
    std::string output_path;  ///< empty: no file is written
    OutputFormat format = OutputFormat::csv;

    /// Throws ConfigError listing every offending field.
    void validate() const;
    std::size_t total_configurations() const;
};

SweepConfig config_from_json_text(const std::string& text);
/// Throws IoError if the file cannot be read, ConfigError on bad content.
SweepConfig load_config(const std::string& path);

/// Slack below this under a passed convexity gate counts as a violation.
inline constexpr double kSlackTolerance = 1e-9;

/// One sweep configuration. Every optional is empty on skipped rows; the
/// thm22/thm23 columns are also empty at q = 1.
struct ReportRow {
    std::string function_id;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    double m = 0.0;
    double q = 0.0;
    std::optional<double> lhs;
    std::optional<double> rhs_thm21;
    std::optional<double> rhs_thm22_tight;
    std::optional<double> rhs_thm22;
    std::optional<double> rhs_thm23_tight;
    std::optional<double> rhs_thm23;
    std::optional<double> rhs_thm24;
    std::optional<double> min_rhs;
    std::string min_rhs_label;
    std::optional<double> slack_min;
    std::optional<bool> convexity_holds;
    std::string skipped_reason;

    bool skipped() const { return !skipped_reason.empty(); }
    /// Passed gate with slack_min < -kSlackTolerance.
    bool gate_violation() const;
};

struct SweepResult {
    std::vector<ReportRow> rows;  ///< configuration-index order
    std::size_t rows_in = 0;
    std::size_t rows_skipped = 0;
    std::size_t gate_violations = 0;
    std::size_t row_errors = 0;  ///< rows whose evaluation threw; recorded as skipped
};

/// Evaluates every (function, interval, α, m, q) combination in that nesting
/// order. The convexity gate runs once per (function, α, m, q).
SweepResult compute_sweep(const SweepConfig& config);

/// compute_sweep, then writes config.output_path (if set) in config.format.
SweepResult run_sweep(const SweepConfig& config);

/// Column order of the CSV report.
const std::vector<std::string>& report_columns();

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_json(std::ostream& out, const std::vector<ReportRow>& rows);
void write_rows(const std::string& path, OutputFormat format, const std::vector<ReportRow>& rows);

/// %.17g, the round-trip representation used in every report.
std::string format_real(double x);
/// RFC 4180 quoting: fields with comma, quote or line break are quoted.
std::string csv_escape(const std::string& field);

struct TightnessCell {
    double alpha = 0.0;
    double m = 0.0;
    double q = 0.0;
    std::size_t rows = 0;        ///< evaluated (non-skipped) rows
    std::size_t gated_rows = 0;  ///< rows whose convexity gate passed
    std::array<std::size_t, kBoundLabels.size()> wins{};  ///< indexed like kBoundLabels
};

struct TightnessTable {
    std::vector<TightnessCell> cells;  ///< (α, m, q) in config order
};

TightnessTable tightness_from_rows(const SweepConfig& config, const std::vector<ReportRow>& rows);
TightnessTable tightness_table(const SweepConfig& config);
void write_tightness_csv(std::ostream& out, const TightnessTable& table);

} // namespace hhb
