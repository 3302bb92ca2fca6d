#include "hhb/quad.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hhb/errors.hpp"

namespace hhb {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Always split the first levels so a rule that happens to vanish on the
// initial five nodes cannot terminate the recursion early.
constexpr int kMinDepth = 2;

class AdaptiveSimpson {
public:
    AdaptiveSimpson(const RealFn& f) : f_(f) {}

    double eval(double x) const {
        const double y = f_(x);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrand is not finite at x = " << x;
            throw EvaluationError(msg.str(), x);
        }
        return y;
    }

    // Simpson estimate on [lo, hi] is `whole`; fl, fm, fh are f at lo, mid, hi.
    void refine(double lo, double hi, double fl, double fm, double fh, double whole,
                double tol, int depth) {
        const double mid = 0.5 * (lo + hi);
        const double lmid = 0.5 * (lo + mid);
        const double rmid = 0.5 * (mid + hi);
        const double flm = eval(lmid);
        const double frm = eval(rmid);
        const double left = (mid - lo) / 6.0 * (fl + 4.0 * flm + fm);
        const double right = (hi - mid) / 6.0 * (fm + 4.0 * frm + fh);
        const double delta = left + right - whole;

        const bool degenerate = !(lo < lmid && lmid < mid && mid < rmid && rmid < hi);
        if (depth >= kMinDepth && (std::abs(delta) <= 15.0 * tol || degenerate)) {
            accept(left, right, delta);
            return;
        }
        if (depth >= kMaxQuadDepth) {
            unconverged_ = true;
            accept(left, right, delta);
            return;
        }
        refine(lo, mid, fl, flm, fm, left, 0.5 * tol, depth + 1);
        refine(mid, hi, fm, frm, fh, right, 0.5 * tol, depth + 1);
    }

    QuadResult result() const { return {sum_, err_, leaves_}; }
    bool unconverged() const { return unconverged_; }

private:
    void accept(double left, double right, double delta) {
        sum_ += left + right + delta / 15.0;
        err_ += std::abs(delta) / 15.0 + 4.0 * kEps * (std::abs(left) + std::abs(right));
        ++leaves_;
    }

    const RealFn& f_;
    double sum_ = 0.0;
    double err_ = 0.0;
    std::size_t leaves_ = 0;
    bool unconverged_ = false;
};

} // namespace

QuadResult integrate(const RealFn& f, double lo, double hi, double tol) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw ParameterError("integrate: require finite lo < hi");
    }
    if (!std::isfinite(tol) || !(tol > 0.0)) {
        throw ParameterError("integrate: tol must be finite and > 0");
    }
    AdaptiveSimpson rule(f);
    const double fl = rule.eval(lo);
    const double fm = rule.eval(0.5 * (lo + hi));
    const double fh = rule.eval(hi);
    const double whole = (hi - lo) / 6.0 * (fl + 4.0 * fm + fh);
    rule.refine(lo, hi, fl, fm, fh, whole, tol, 0);

    const QuadResult out = rule.result();
    if (rule.unconverged()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrate: depth limit " << kMaxQuadDepth << " reached on [" << lo << ", " << hi
            << "] before tol " << tol << "; best estimate " << out.value;
        throw ConvergenceError(msg.str(), out);
    }
    return out;
}

QuadResult integrate_kernel(const RealFn& g, double a, double b, double m, double tol) {
    if (!(m > 0.0 && m <= 1.0)) {
        throw ParameterError("integrate_kernel: m must lie in (0, 1]");
    }
    if (!(a < m * b)) {
        throw ParameterError("integrate_kernel: require a < m*b");
    }
    const RealFn kernel = [&](double t) { return (t - t * t) * g(t * a + m * (1.0 - t) * b); };
    return integrate(kernel, 0.0, 1.0, tol);
}

} // namespace hhb
