#include "hhb/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hhb/errors.hpp"
#include "hhb/specfun.hpp"

namespace hhb {
namespace {

void require_len(const BoundInputs& in, double interval_len) {
    in.params.validate_for_bounds();
    if (!std::isfinite(interval_len) || !(interval_len > 0.0)) {
        throw ParameterError("interval length m*b - a must be finite and > 0");
    }
    const double expected = in.interval_len();
    if (std::abs(interval_len - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "interval_len " << interval_len << " does not match m*b - a = " << expected;
        throw ParameterError(msg.str());
    }
    if (!(in.abs_f2_a >= 0.0) || !(in.abs_f2_b >= 0.0) || !std::isfinite(in.abs_f2_a) ||
        !std::isfinite(in.abs_f2_b)) {
        throw ParameterError("|f''(a)| and |f''(b)| must be finite and >= 0");
    }
}

void require_holder(const BoundInputs& in, const char* who) {
    if (!(in.params.q > 1.0)) {
        throw ParameterError(std::string(who) + ": requires q > 1 (p = q/(q-1) undefined at q = 1)");
    }
}

// coef_a·|f″(a)|^q + m·coef_b·|f″(b)|^q, raised to 1/q. Coefficients are
// integrals of non-negative weights; round-off below zero is clipped.
double q_bracket(const BoundInputs& in, double coef_a, double coef_b) {
    const double q = in.params.q;
    const double bracket = std::max(coef_a, 0.0) * abs_pow(in.abs_f2_a, q) +
                           in.params.m * std::max(coef_b, 0.0) * abs_pow(in.abs_f2_b, q);
    return std::pow(bracket, 1.0 / q);
}

double mean_value(const FunctionSpec& fspec, double lo, double hi, double tol) {
    return integrate(fspec.f, lo, hi, tol).value / (hi - lo);
}

} // namespace

double abs_pow(double x, double q) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    if (q == 1.0) return ax;
    return std::pow(ax, q);
}

double BoundInputs::p() const {
    if (params.q == 1.0) return std::numeric_limits<double>::infinity();
    return params.q / (params.q - 1.0);
}

BoundInputs BoundInputs::from(const FunctionSpec& fspec, double a, double b, const AMParams& params) {
    BoundInputs in;
    in.a = a;
    in.b = b;
    in.params = params;
    in.abs_f2_a = std::abs(fspec.f2(a));
    in.abs_f2_b = std::abs(fspec.f2(b));
    return in;
}

void require_admissible(const FunctionSpec& fspec, double a, double b, double m) {
    if (!(m > 0.0 && m <= 1.0)) throw ParameterError("m must lie in (0, 1]");
    if (!std::isfinite(a) || !std::isfinite(b)) throw ParameterError("a and b must be finite");
    if (!(a >= 0.0)) throw ParameterError("a must be >= 0");
    if (!(a < m * b)) throw ParameterError("a >= m*b");
    if (!(b <= fspec.b_star)) throw ParameterError("b exceeds b_star");
}

double signed_trapezoid_gap(const FunctionSpec& fspec, double a, double b, double m, double tol) {
    require_admissible(fspec, a, b, m);
    const double mb = m * b;
    return 0.5 * (fspec.f(a) + fspec.f(mb)) - mean_value(fspec, a, mb, tol);
}

double lhs_trapezoid(const FunctionSpec& fspec, double a, double b, double m, double tol) {
    return std::abs(signed_trapezoid_gap(fspec, a, b, m, tol));
}

double rhs_lemma_integral(const FunctionSpec& fspec, double a, double b, double m, double tol) {
    require_admissible(fspec, a, b, m);
    const double len = m * b - a;
    return 0.5 * len * len * integrate_kernel(fspec.f2, a, b, m, tol).value;
}

double bound_thm21(const BoundInputs& in, double interval_len) {
    require_len(in, interval_len);
    const double alpha = in.params.alpha;
    const double q = in.params.q;
    const double w = 1.0 / ((alpha + 2.0) * (alpha + 3.0));
    const double outer = q == 1.0 ? 1.0 : std::pow(1.0 / 6.0, 1.0 - 1.0 / q);
    return 0.5 * interval_len * interval_len * outer * q_bracket(in, w, 1.0 / 6.0 - w);
}

double bound_thm22(const BoundInputs& in, double interval_len, Variant variant) {
    require_len(in, interval_len);
    require_holder(in, "bound_thm22");
    const double alpha = in.params.alpha;
    const double p = in.p();
    const double bracket = q_bracket(in, 1.0 / (alpha + 1.0), alpha / (alpha + 1.0));
    const double ratio = gamma_ratio_power(p);
    const double len2 = interval_len * interval_len;
    if (variant == Variant::stated) {
        return len2 / 8.0 * ratio * bracket;
    }
    // (β(p+1,p+1))^(1/p) = (√π)^(1/p) / (2^(1/p)·4) · ratio
    const double constant = std::pow(std::numbers::pi, 0.5 / p) / (std::pow(2.0, 1.0 / p) * 4.0);
    return 0.5 * len2 * constant * ratio * bracket;
}

double bound_thm23(const BoundInputs& in, double interval_len, Variant variant) {
    require_len(in, interval_len);
    require_holder(in, "bound_thm23");
    const double alpha = in.params.alpha;
    const double q = in.params.q;
    const double w = beta(alpha + 1.0, q + 1.0);
    const double stated = 0.5 * interval_len * interval_len * q_bracket(in, w, 1.0 / (q + 1.0) - w);
    if (variant == Variant::stated) return stated;
    const double p = in.p();
    return stated * std::pow(1.0 / (p + 1.0), 1.0 / p);
}

double bound_thm24(const BoundInputs& in, double interval_len) {
    require_len(in, interval_len);
    const double alpha = in.params.alpha;
    const double q = in.params.q;
    const double w = beta(alpha + 2.0, q + 1.0);
    const double outer = q == 1.0 ? 1.0 : std::pow(0.5, 1.0 - 1.0 / q);
    return 0.5 * interval_len * interval_len * outer *
           q_bracket(in, w, 1.0 / ((q + 1.0) * (q + 2.0)) - w);
}

double bound_eq0(double abs_f2_a, double abs_f2_b, double a, double b) {
    if (!(a < b)) throw ParameterError("bound_eq0: require a < b");
    const double len = b - a;
    return len * len / 12.0 * (0.5 * (abs_f2_a + abs_f2_b));
}

double bound_thm11(double abs_f2_a, double abs_f2_b_over_m, double a, double b, double m, double q) {
    if (!(a < b)) throw ParameterError("bound_thm11: require a < b");
    if (!(m > 0.0 && m <= 1.0)) throw ParameterError("bound_thm11: m must lie in (0, 1]");
    if (!(q > 1.0) || !std::isfinite(q)) throw ParameterError("bound_thm11: requires finite q > 1");
    const double p = q / (q - 1.0);
    const double len = b - a;
    const double mean = 0.5 * (abs_pow(abs_f2_a, q) + m * abs_pow(abs_f2_b_over_m, q));
    return len * len / 8.0 * gamma_ratio_power(p) * std::pow(mean, 1.0 / q);
}

double bound_cor11(double k, double a, double b, double m, double q) {
    if (!(a < b)) throw ParameterError("bound_cor11: require a < b");
    if (!(m > 0.0 && m <= 1.0)) throw ParameterError("bound_cor11: m must lie in (0, 1]");
    if (!(q > 1.0) || !std::isfinite(q)) throw ParameterError("bound_cor11: requires finite q > 1");
    const double p = q / (q - 1.0);
    const double len = b - a;
    return k * len * len / 8.0 * std::pow(0.5 * (1.0 + m), 1.0 / q) * gamma_ratio_power(p);
}

double thm12_lower_branch(double lambda, double abs_f2_a, double abs_f2_b, double a, double b) {
    if (!(a < b)) throw ParameterError("thm12: require a < b");
    const double l = lambda;
    const double l3 = l * l * l;
    const double l4 = l3 * l;
    const double c_a = l4 + (1.0 + l) * (1.0 - l) * (1.0 - l) * (1.0 - l) + (5.0 * l - 3.0) / 4.0;
    const double c_b = l4 + (2.0 - l) * l3 + (1.0 - 3.0 * l) / 4.0;
    const double len = b - a;
    return len * len / 12.0 * (c_a * abs_f2_a + c_b * abs_f2_b);
}

double thm12_upper_branch(double lambda, double abs_f2_a, double abs_f2_b, double a, double b) {
    if (!(a < b)) throw ParameterError("thm12: require a < b");
    const double len = b - a;
    return len * len * (3.0 * lambda - 1.0) / 48.0 * (abs_f2_a + abs_f2_b);
}

Thm12Result bound_thm12(double lambda, const FunctionSpec& fspec, double a, double b, double tol) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("thm12: lambda must lie in [0, 1]");
    if (!(a < b)) throw ParameterError("thm12: require a < b");
    const double fa = fspec.f(a);
    const double fb = fspec.f(b);
    const double fmid = fspec.f(0.5 * (a + b));
    Thm12Result out;
    out.lhs = std::abs((lambda - 1.0) * fmid - lambda * 0.5 * (fa + fb) + mean_value(fspec, a, b, tol));
    const double abs_a = std::abs(fspec.f2(a));
    const double abs_b = std::abs(fspec.f2(b));
    out.rhs = lambda < 0.5 ? thm12_lower_branch(lambda, abs_a, abs_b, a, b)
                           : thm12_upper_branch(lambda, abs_a, abs_b, a, b);
    return out;
}

std::string_view to_string(BoundLabel label) {
    switch (label) {
    case BoundLabel::thm21: return "thm21";
    case BoundLabel::thm22_tight: return "thm22_tight";
    case BoundLabel::thm22: return "thm22";
    case BoundLabel::thm23_tight: return "thm23_tight";
    case BoundLabel::thm23: return "thm23";
    case BoundLabel::thm24: return "thm24";
    }
    return "unknown";
}

std::optional<double> BoundReport::rhs(BoundLabel label) const {
    const auto it = rhs_by_theorem.find(label);
    if (it == rhs_by_theorem.end()) return std::nullopt;
    return it->second;
}

BoundReport evaluate_all(const FunctionSpec& fspec, double a, double b, const AMParams& params,
                         double tol, const ConvexityVerdict& gate) {
    params.validate_for_bounds();
    require_admissible(fspec, a, b, params.m);

    BoundReport report;
    report.convexity_gate = gate;
    report.lhs = lhs_trapezoid(fspec, a, b, params.m, tol);

    const BoundInputs in = BoundInputs::from(fspec, a, b, params);
    const double len = in.interval_len();
    auto& rhs = report.rhs_by_theorem;
    rhs[BoundLabel::thm21] = bound_thm21(in, len);
    if (params.q > 1.0) {
        rhs[BoundLabel::thm22_tight] = bound_thm22(in, len, Variant::tight);
        rhs[BoundLabel::thm22] = bound_thm22(in, len, Variant::stated);
        rhs[BoundLabel::thm23_tight] = bound_thm23(in, len, Variant::tight);
        rhs[BoundLabel::thm23] = bound_thm23(in, len, Variant::stated);
    }
    rhs[BoundLabel::thm24] = bound_thm24(in, len);

    bool first = true;
    double best = 0.0;
    for (BoundLabel label : kBoundLabels) {
        const auto it = rhs.find(label);
        if (it == rhs.end()) continue;
        report.slack_by_theorem[label] = it->second - report.lhs;
        if (first || it->second < best) {
            best = it->second;
            report.tightest = label;
            first = false;
        }
    }
    return report;
}

BoundReport evaluate_all(const FunctionSpec& fspec, double a, double b, const AMParams& params,
                         double tol, std::size_t grid_n, double convexity_tol) {
    params.validate_for_bounds();
    const ConvexityVerdict gate = check_abs_f2_q(fspec, params, fspec.b_star, grid_n, convexity_tol);
    return evaluate_all(fspec, a, b, params, tol, gate);
}

} // namespace hhb
