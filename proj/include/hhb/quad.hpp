#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace hhb {

using RealFn = std::function<double(double)>;

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  ///< >= 0; Richardson estimate plus a round-off floor
    std::size_t subdivisions = 1;  ///< accepted leaf intervals
};

/// Raised when the recursion depth limit is hit before the tolerance is met.
/// best() is the estimate assembled from every leaf, converged or not.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best) {}

    const QuadResult& best() const noexcept { return best_; }

private:
    QuadResult best_;
};

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kMaxQuadDepth = 50;

/// Adaptive Simpson quadrature of f over [lo, hi] (lo < hi) to absolute
/// tolerance tol. Subintervals are refined left before right, so results are
/// bit-reproducible for a given (f, lo, hi, tol).
///
/// Throws ParameterError for lo >= hi or tol <= 0, EvaluationError if f is
/// non-finite at any sampled abscissa, ConvergenceError on depth exhaustion.
QuadResult integrate(const RealFn& f, double lo, double hi, double tol = kDefaultQuadTol);

/// ∫₀¹ (t - t²) g(t·a + m(1-t)·b) dt, the kernel integral of the trapezoid
/// identity. Requires 0 < m <= 1 and a < m·b.
QuadResult integrate_kernel(const RealFn& g, double a, double b, double m,
                            double tol = kDefaultQuadTol);

} // namespace hhb
