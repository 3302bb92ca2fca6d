#include "hhb/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hhb/errors.hpp"

namespace hhb {
namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey). The series form is
//   Γ(x) = sqrt(2π) (x + g + 1/2)^(x + 1/2) e^-(x + g + 1/2) S(x) / x
// with S(x) = c0 + Σ_k c_k / (x + k). Relative error below 1e-15 for x > 0.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5,
};
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;

void require_positive(double x, const char* who) {
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError(std::string(who) + ": argument must be finite and > 0, got " +
                          std::to_string(x));
    }
}

double ln_gamma_unchecked(double x) {
    double series = kLanczosC0;
    double denom = x;
    for (double c : kLanczosCoef) {
        denom += 1.0;
        series += c / denom;
    }
    const double t = x + kLanczosG + 0.5;
    // (x + 1/2) ln t - t, rearranged so the large terms do not cancel.
    return (x + 0.5) * (std::log(t) - 1.0) - kLanczosG + std::log(kSqrtTwoPi * series / x);
}

} // namespace

double ln_gamma(double x) {
    require_positive(x, "ln_gamma");
    return ln_gamma_unchecked(x);
}

double gamma(double x) {
    require_positive(x, "gamma");
    const double value = std::exp(ln_gamma_unchecked(x));
    if (!std::isfinite(value)) {
        throw OverflowError("gamma: result not representable for x = " + std::to_string(x));
    }
    return value;
}

double beta(double x, double y) {
    require_positive(x, "beta");
    require_positive(y, "beta");
    return std::exp(ln_gamma_unchecked(x) + ln_gamma_unchecked(y) - ln_gamma_unchecked(x + y));
}

double gamma_ratio_power(double p) {
    require_positive(p, "gamma_ratio_power");
    return std::exp((ln_gamma_unchecked(1.0 + p) - ln_gamma_unchecked(1.5 + p)) / p);
}

} // namespace hhb
