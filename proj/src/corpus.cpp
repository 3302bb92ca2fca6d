#include "hhb/corpus.hpp"

#include <cmath>
#include <string>

namespace hhb {
namespace {

FunctionSpec power_family(double alpha, std::string id) {
    const double e = alpha + 2.0;
    const double c = (alpha + 2.0) * (alpha + 1.0);
    return {std::move(id), [e](double x) { return std::pow(x, e); },
            [c, alpha](double x) { return c * std::pow(x, alpha); }, 2.0};
}

} // namespace

std::vector<FunctionSpec> builtin_corpus() {
    std::vector<FunctionSpec> corpus;
    corpus.push_back({"quadratic", [](double x) { return x * x; }, [](double) { return 2.0; }, 2.0});
    corpus.push_back({"cubic", [](double x) { return x * x * x; }, [](double x) { return 6.0 * x; }, 2.0});
    corpus.push_back({"quartic", [](double x) { return x * x * x * x; },
                      [](double x) { return 12.0 * x * x; }, 2.0});
    corpus.push_back({"exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, 2.0});
    corpus.push_back(power_family(0.25, "power_2.25"));
    corpus.push_back(power_family(0.5, "power_2.5"));
    corpus.push_back(power_family(0.75, "power_2.75"));
    corpus.push_back({"linear", [](double x) { return x; }, [](double) { return 0.0; }, 2.0});
    return corpus;
}

std::optional<FunctionSpec> find_function(std::string_view id) {
    for (auto& spec : builtin_corpus()) {
        if (spec.id == id) return spec;
    }
    return std::nullopt;
}

DerivativeCheck validate_derivative(const FunctionSpec& fspec, std::size_t points, double h) {
    DerivativeCheck out;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = fspec.b_star * static_cast<double>(i + 1) / static_cast<double>(points + 1);
        // Step adjusted so x ± step is exact; only f's own rounding remains.
        const double step = (x + h) - x;
        const double fd = (fspec.f(x + step) - 2.0 * fspec.f(x) + fspec.f(x - step)) / (step * step);
        const double exact = fspec.f2(x);
        double ratio = std::abs(exact - fd) / (1e-5 * (1.0 + std::abs(exact)));
        if (std::isnan(ratio)) ratio = HUGE_VAL;
        if (i == 0 || ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.worst_x = x;
        }
    }
    out.ok = out.worst_ratio <= 1.0;
    return out;
}

} // namespace hhb
