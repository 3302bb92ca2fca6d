#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hhb/quad.hpp"

namespace hhb {

struct FunctionSpec;

/// The (α, m, q) triple: convexity class of |f″|^q and the Hölder exponent.
struct AMParams {
    double alpha = 1.0;  ///< [0, 1]
    double m = 1.0;      ///< [0, 1]; (0, 1] when evaluating bounds
    double q = 1.0;      ///< >= 1

    /// Throws ParameterError unless alpha, m ∈ [0,1] and q >= 1.
    void validate() const;
    /// As validate(), additionally requiring m > 0.
    void validate_for_bounds() const;
};

struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
};

/// Outcome of a sampled search for violations of
///   g(tx + m(1-t)y) <= t^α g(x) + m(1 - t^α) g(y).
/// `holds` means "not falsified at this resolution", never a proof.
struct ConvexityVerdict {
    bool holds = true;
    std::optional<Witness> witness;  ///< present iff !holds; worst sampled triple
    double margin = 0.0;             ///< max over the grid of lhs - rhs
};

inline constexpr std::size_t kDefaultGridN = 50;
inline constexpr double kDefaultConvexityTol = 1e-9;

/// Signed violation lhs - rhs of the (α, m) definition at one triple.
/// t^α uses 0^0 = 1.
double am_violation(const RealFn& g, double alpha, double m, double x, double y, double t);

/// Evaluates the definition on the uniform grid {x_i} × {y_j} × {t_k} over
/// [0, b_star]² × [0, 1], grid_n points per axis with both endpoints included.
/// Ties for the worst violation resolve to the first triple in (i, j, k) order.
ConvexityVerdict check_am_convex(const RealFn& g, const AMParams& params, double b_star,
                                 std::size_t grid_n = kDefaultGridN,
                                 double tol = kDefaultConvexityTol);

/// check_am_convex applied to g(x) = |f″(x)|^q.
ConvexityVerdict check_abs_f2_q(const FunctionSpec& fspec, const AMParams& params, double b_star,
                                std::size_t grid_n = kDefaultGridN,
                                double tol = kDefaultConvexityTol);

enum class ConvexClass {
    increasing,
    alpha_starshaped,
    starshaped,
    m_convex,
    convex,
    alpha_convex,
    general,
};

/// Named degenerate class for (α, m): (0,0) increasing, (α,0) α-starshaped,
/// (1,0) starshaped, (1,m) m-convex, (1,1) convex, (α,1) α-convex.
ConvexClass classify(double alpha, double m);

std::string_view to_string(ConvexClass c);

} // namespace hhb
