#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hhb/bounds.hpp"

namespace hhb {

/// Built-in test functions, all on [0, 2]:
///   quadratic x², cubic x³, quartic x⁴, exp eˣ,
///   power_2.25 / power_2.5 / power_2.75 (x^(α+2), f″ = (α+2)(α+1)x^α),
///   linear x (f″ ≡ 0).
std::vector<FunctionSpec> builtin_corpus();

std::optional<FunctionSpec> find_function(std::string_view id);

struct DerivativeCheck {
    bool ok = true;
    double worst_ratio = 0.0;  ///< max |f2 - fd| / (1e-5·(1 + |f2|)); ok iff <= 1
    double worst_x = 0.0;
};

/// Compares f2 with the central second difference of f (step h) at the
/// `points` interior nodes b_star·i/(points+1), i = 1..points. Endpoints are
/// excluded: the power family has an unbounded f‴ at 0.
DerivativeCheck validate_derivative(const FunctionSpec& fspec, std::size_t points = 41,
                                    double h = 1e-5);

} // namespace hhb
