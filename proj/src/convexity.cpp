#include "hhb/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "hhb/bounds.hpp"
#include "hhb/errors.hpp"

namespace hhb {
namespace {

double t_pow(double t, double alpha) {
    // 0^0 = 1, matching the increasing class at (α, m) = (0, 0).
    if (alpha == 0.0) return 1.0;
    return std::pow(t, alpha);
}

double checked(const RealFn& g, double x) {
    const double y = g(x);
    if (!std::isfinite(y)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "convexity check: g is not finite at x = " << x;
        throw EvaluationError(msg.str(), x);
    }
    return y;
}

struct Worst {
    double margin = -HUGE_VAL;
    std::size_t i = 0, j = 0, k = 0;
};

} // namespace

void AMParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in [0, 1]");
    if (!(m >= 0.0 && m <= 1.0)) throw ParameterError("m must lie in [0, 1]");
    if (!(q >= 1.0) || !std::isfinite(q)) throw ParameterError("q must be finite and >= 1");
}

void AMParams::validate_for_bounds() const {
    validate();
    if (!(m > 0.0)) throw ParameterError("m must lie in (0, 1] for bound evaluation");
}

double am_violation(const RealFn& g, double alpha, double m, double x, double y, double t) {
    const double ta = t_pow(t, alpha);
    return checked(g, t * x + m * (1.0 - t) * y) - (ta * checked(g, x) + m * (1.0 - ta) * checked(g, y));
}

ConvexityVerdict check_am_convex(const RealFn& g, const AMParams& params, double b_star,
                                 std::size_t grid_n, double tol) {
    params.validate();
    if (!(b_star > 0.0) || !std::isfinite(b_star)) throw ParameterError("b_star must be > 0");
    if (grid_n < 3) throw ParameterError("grid_n must be >= 3");
    if (!(tol >= 0.0)) throw ParameterError("tol must be >= 0");

    const std::size_t n = grid_n;
    std::vector<double> xs(n), ts(n), gx(n), ta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(n - 1);
        xs[i] = u * b_star;
        ts[i] = u;
        gx[i] = checked(g, xs[i]);
        ta[i] = t_pow(u, params.alpha);
    }
    const double m = params.m;

    // Partition the x axis across threads; each slice keeps its own first-worst
    // triple and slices are merged in index order, so the verdict is independent
    // of the thread count.
    auto scan = [&](std::size_t i_begin, std::size_t i_end) {
        Worst w;
        for (std::size_t i = i_begin; i < i_end; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double t = ts[k];
                    const double lhs = checked(g, t * xs[i] + m * (1.0 - t) * xs[j]);
                    const double rhs = ta[k] * gx[i] + m * (1.0 - ta[k]) * gx[j];
                    const double v = lhs - rhs;
                    if (v > w.margin) w = {v, i, j, k};
                }
            }
        }
        return w;
    };

    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t slices = std::min<std::size_t>(n, std::min<std::size_t>(hw, 8));
    std::vector<Worst> partial(slices);
    if (slices == 1) {
        partial[0] = scan(0, n);
    } else {
        std::vector<std::exception_ptr> errors(slices);
        std::vector<std::thread> pool;
        pool.reserve(slices);
        for (std::size_t s = 0; s < slices; ++s) {
            const std::size_t lo = n * s / slices;
            const std::size_t hi = n * (s + 1) / slices;
            pool.emplace_back([&, s, lo, hi] {
                try {
                    partial[s] = scan(lo, hi);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    Worst worst = partial[0];
    for (std::size_t s = 1; s < slices; ++s) {
        if (partial[s].margin > worst.margin) worst = partial[s];
    }

    ConvexityVerdict verdict;
    verdict.margin = worst.margin;
    verdict.holds = !(worst.margin > tol);
    if (!verdict.holds) {
        verdict.witness = Witness{xs[worst.i], xs[worst.j], ts[worst.k]};
    }
    return verdict;
}

ConvexityVerdict check_abs_f2_q(const FunctionSpec& fspec, const AMParams& params, double b_star,
                                std::size_t grid_n, double tol) {
    const double q = params.q;
    const RealFn f2 = fspec.f2;
    const RealFn g = [&f2, q](double x) { return abs_pow(f2(x), q); };
    return check_am_convex(g, params, b_star, grid_n, tol);
}

ConvexClass classify(double alpha, double m) {
    if (alpha == 0.0 && m == 0.0) return ConvexClass::increasing;
    if (alpha == 1.0 && m == 1.0) return ConvexClass::convex;
    if (alpha == 1.0 && m == 0.0) return ConvexClass::starshaped;
    if (m == 0.0) return ConvexClass::alpha_starshaped;
    if (alpha == 1.0) return ConvexClass::m_convex;
    if (m == 1.0) return ConvexClass::alpha_convex;
    return ConvexClass::general;
}

std::string_view to_string(ConvexClass c) {
    switch (c) {
    case ConvexClass::increasing: return "increasing";
    case ConvexClass::alpha_starshaped: return "alpha-starshaped";
    case ConvexClass::starshaped: return "starshaped";
    case ConvexClass::m_convex: return "m-convex";
    case ConvexClass::convex: return "convex";
    case ConvexClass::alpha_convex: return "alpha-convex";
    case ConvexClass::general: return "general-(alpha,m)-convex";
    }
    return "unknown";
}

} // namespace hhb
