#pragma once

// Real-argument Gamma, log-Gamma and Beta functions.
//
// All routines are pure and thread-safe. Arguments must be finite and
// strictly positive; anything else raises hhb::DomainError.

namespace hhb {

/// ln Γ(x) for x > 0 via a Lanczos approximation (g = 607/128, 15 terms).
double ln_gamma(double x);

/// Γ(x) = exp(ln Γ(x)); throws OverflowError once Γ(x) exceeds DBL_MAX.
double gamma(double x);

/// β(x, y) = Γ(x)Γ(y)/Γ(x+y), evaluated through log-Gamma differences.
double beta(double x, double y);

/// (Γ(1+p) / Γ(3/2+p))^(1/p), always in (0, 1) for p > 0.
double gamma_ratio_power(double p);

} // namespace hhb
