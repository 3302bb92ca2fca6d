#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hhb/convexity.hpp"
#include "hhb/quad.hpp"

namespace hhb {

/// A test function with its analytic second derivative on [0, b_star].
struct FunctionSpec {
    std::string id;
    RealFn f;
    RealFn f2;
    double b_star = 2.0;
};

/// |x|^q with 0^q = 0.
double abs_pow(double x, double q);

/// Everything the closed-form right-hand sides need about one configuration.
struct BoundInputs {
    double a = 0.0;
    double b = 1.0;
    AMParams params;
    double abs_f2_a = 0.0;  ///< |f″(a)|
    double abs_f2_b = 0.0;  ///< |f″(b)|

    /// Hölder conjugate q/(q-1); +inf at q = 1.
    double p() const;
    /// m·b - a
    double interval_len() const { return params.m * b - a; }

    static BoundInputs from(const FunctionSpec& fspec, double a, double b, const AMParams& params);
};

enum class Variant { stated, tight };

/// Throws ParameterError unless 0 <= a < m·b <= b_star and m ∈ (0, 1].
void require_admissible(const FunctionSpec& fspec, double a, double b, double m);

/// (f(a) + f(mb))/2 - (1/(mb-a)) ∫ₐ^{mb} f, signed.
double signed_trapezoid_gap(const FunctionSpec& fspec, double a, double b, double m,
                            double tol = kDefaultQuadTol);

/// |signed_trapezoid_gap|, the quantity every theorem bounds.
double lhs_trapezoid(const FunctionSpec& fspec, double a, double b, double m,
                     double tol = kDefaultQuadTol);

/// ((mb-a)²/2) ∫₀¹ (t-t²) f″(ta + m(1-t)b) dt, signed. Equal to
/// signed_trapezoid_gap by integration by parts.
double rhs_lemma_integral(const FunctionSpec& fspec, double a, double b, double m,
                          double tol = kDefaultQuadTol);

// Right-hand sides. interval_len must equal inputs.interval_len() and be > 0.

/// Power-mean bound with weight t - t²; valid for q >= 1.
double bound_thm21(const BoundInputs& inputs, double interval_len);

/// Hölder bound with ((t-t²)^p)^(1/p); requires q > 1. `tight` keeps the
/// (√π/2)^(1/p) factor the stated form drops.
double bound_thm22(const BoundInputs& inputs, double interval_len, Variant variant);

/// Hölder bound splitting t and (1-t)^q; requires q > 1. `tight` keeps the
/// (1/(p+1))^(1/p) factor.
double bound_thm23(const BoundInputs& inputs, double interval_len, Variant variant);

/// Power-mean bound with weight t; valid for q >= 1.
double bound_thm24(const BoundInputs& inputs, double interval_len);

/// ((b-a)²/12)·(|f″(a)| + |f″(b)|)/2, the λ = 1 trapezoid bound for convex |f″|.
double bound_eq0(double abs_f2_a, double abs_f2_b, double a, double b);

/// m-convex Hölder bound. abs_f2_b_over_m is |f″(b/m)|, not |f″(b)|.
double bound_thm11(double abs_f2_a, double abs_f2_b_over_m, double a, double b, double m, double q);

/// Bound for |f″| <= K under m-convexity of |f″|^q (q > 1).
double bound_cor11(double k, double a, double b, double m, double q);

// λ-family (midpoint/trapezoid blend) for convex |f″| on [a, b].

/// (b-a)²/12 · [c_a(λ)|f″(a)| + c_b(λ)|f″(b)|], the 0 <= λ <= 1/2 branch.
double thm12_lower_branch(double lambda, double abs_f2_a, double abs_f2_b, double a, double b);
/// (b-a)²(3λ-1)/48 · (|f″(a)| + |f″(b)|), the 1/2 <= λ <= 1 branch.
double thm12_upper_branch(double lambda, double abs_f2_a, double abs_f2_b, double a, double b);

struct Thm12Result {
    double lhs = 0.0;  ///< |(λ-1) f((a+b)/2) - λ (f(a)+f(b))/2 + mean of f|
    double rhs = 0.0;
};

/// Both sides of the λ-family inequality. At λ = 1/2 the upper branch is
/// reported (the two branches coincide there).
Thm12Result bound_thm12(double lambda, const FunctionSpec& fspec, double a, double b,
                        double tol = kDefaultQuadTol);

enum class BoundLabel { thm21, thm22_tight, thm22, thm23_tight, thm23, thm24 };

/// Fixed label order; also the tie-break order for the tightest bound.
inline constexpr std::array<BoundLabel, 6> kBoundLabels = {
    BoundLabel::thm21, BoundLabel::thm22_tight, BoundLabel::thm22,
    BoundLabel::thm23_tight, BoundLabel::thm23, BoundLabel::thm24,
};

std::string_view to_string(BoundLabel label);

struct BoundReport {
    double lhs = 0.0;
    std::map<BoundLabel, double> rhs_by_theorem;    ///< only applicable bounds
    std::map<BoundLabel, double> slack_by_theorem;  ///< rhs - lhs
    BoundLabel tightest = BoundLabel::thm21;
    ConvexityVerdict convexity_gate;

    std::optional<double> rhs(BoundLabel label) const;
    double min_rhs() const { return rhs_by_theorem.at(tightest); }
    double min_slack() const { return slack_by_theorem.at(tightest); }
};

/// LHS and every applicable RHS (thm22/thm23 only when q > 1) with a
/// caller-supplied convexity verdict for |f″|^q.
BoundReport evaluate_all(const FunctionSpec& fspec, double a, double b, const AMParams& params,
                         double tol, const ConvexityVerdict& gate);

/// As above, running check_abs_f2_q on [0, b_star] for the gate.
BoundReport evaluate_all(const FunctionSpec& fspec, double a, double b, const AMParams& params,
                         double tol = kDefaultQuadTol, std::size_t grid_n = kDefaultGridN,
                         double convexity_tol = kDefaultConvexityTol);

} // namespace hhb
