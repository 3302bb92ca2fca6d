#include "hhb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>

#include "hhb/bounds.hpp"
#include "hhb/corpus.hpp"
#include "hhb/quad.hpp"
#include "hhb/specfun.hpp"

namespace hhb {
namespace {

constexpr double kIdentityQuadTol = 1e-12;
constexpr std::uint64_t kSeed = 20240917;

// Accumulates the worst residual of one check.
class Check {
public:
    Check(std::string name, double threshold) {
        result_.name = std::move(name);
        result_.threshold = threshold;
    }

    void observe(double residual, const std::string& where = {}) {
        ++result_.cases;
        if (std::isnan(residual)) residual = HUGE_VAL;
        if (result_.cases == 1 || residual > result_.worst_residual) {
            result_.worst_residual = residual;
            worst_where_ = where;
        }
    }

    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

    void fail(const std::string& why) {
        errored_ = true;
        note(why);
    }

    CheckResult finish() {
        result_.passed = !errored_ && result_.cases > 0 && result_.worst_residual <= result_.threshold;
        std::string detail = notes_;
        if (!worst_where_.empty()) detail += (detail.empty() ? "" : "; ") + ("worst at " + worst_where_);
        result_.detail = detail;
        return result_;
    }

private:
    CheckResult result_;
    std::string worst_where_;
    std::string notes_;
    bool errored_ = false;
};

std::string describe(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream s;
    s.precision(6);
    bool first = true;
    for (const auto& [k, v] : kv) {
        s << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return s.str();
}

template <typename Body>
CheckResult run_check(std::string name, double threshold, Body body) {
    Check check(std::move(name), threshold);
    try {
        body(check);
    } catch (const std::exception& e) {
        check.fail(std::string("exception: ") + e.what());
    }
    return check.finish();
}

double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

struct RandomTuple {
    double abs_a, abs_b, a, b;
};

std::vector<RandomTuple> random_tuples(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> deriv(0.0, 10.0);
    std::uniform_real_distribution<double> left(0.0, 1.5);
    std::uniform_real_distribution<double> width(0.05, 2.0);
    std::vector<RandomTuple> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RandomTuple t;
        t.abs_a = deriv(rng);
        t.abs_b = deriv(rng);
        t.a = left(rng);
        t.b = t.a + width(rng);
        out.push_back(t);
    }
    return out;
}

BoundInputs make_inputs(const RandomTuple& t, double alpha, double m, double q) {
    BoundInputs in;
    in.a = t.a;
    in.b = t.b;
    in.params = {alpha, m, q};
    in.abs_f2_a = t.abs_a;
    in.abs_f2_b = t.abs_b;
    return in;
}

} // namespace

bool VerifySummary::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifySummary::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::vector<std::tuple<double, double, double>> identity_configs() {
    std::vector<std::tuple<double, double, double>> out;
    for (double m : {0.4, 0.7, 1.0}) {
        for (double b : {0.5, 1.0, 1.5, 2.0}) {
            for (double a : {0.0, 0.1, 0.3, 0.6}) {
                if (a < m * b) out.emplace_back(a, b, m);
            }
        }
    }
    return out;
}

VerifySummary verify_identities(double tol) {
    VerifySummary summary;
    auto& checks = summary.checks;
    const auto corpus = builtin_corpus();
    auto cap = [tol](double own) { return std::min(own, tol); };

    checks.push_back(run_check("gamma_half_sqrt_pi", cap(1e-13), [](Check& c) {
        c.observe(std::abs(gamma(0.5) - std::sqrt(std::numbers::pi)));
    }));

    checks.push_back(run_check("ln_gamma_factorials", cap(1e-13), [](Check& c) {
        long double log_fact = 0.0L;  // ln((n-1)!)
        for (int n = 1; n <= 50; ++n) {
            if (n > 1) log_fact += std::log(static_cast<long double>(n - 1));
            c.observe(std::abs(ln_gamma(n) - static_cast<double>(log_fact)), describe({{"n", double(n)}}));
        }
    }));

    checks.push_back(run_check("gamma_recurrence", cap(1e-12), [](Check& c) {
        for (double x = 0.5; x <= 20.0; x += 0.125) {
            c.observe(rel(x * gamma(x), gamma(x + 1.0)), describe({{"x", x}}));
        }
    }));

    checks.push_back(run_check("beta_symmetry", 0.0, [](Check& c) {
        for (double x : {0.5, 1.0, 1.7, 2.5, 4.0, 9.25}) {
            for (double y : {0.3, 1.0, 2.0, 3.5, 7.0}) {
                c.observe(std::abs(beta(x, y) - beta(y, x)), describe({{"x", x}, {"y", y}}));
            }
        }
    }));

    checks.push_back(run_check("beta_duplication", cap(1e-12), [](Check& c) {
        for (double x : {1.0, 1.5, 2.0, 3.0, 5.0, 11.0}) {
            const double lhs = beta(x, x);
            c.observe(std::abs(lhs - std::pow(2.0, 1.0 - 2.0 * x) * beta(0.5, x)) / lhs,
                      describe({{"x", x}}));
        }
    }));

    checks.push_back(run_check("beta_kernel_integral", cap(1e-9), [](Check& c) {
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const auto r = integrate([p](double t) { return std::pow(t - t * t, p); }, 0.0, 1.0,
                                     kIdentityQuadTol);
            c.observe(std::abs(beta(p + 1.0, p + 1.0) - r.value), describe({{"p", p}}));
        }
    }));

    checks.push_back(run_check("derivative_validation", 1.0, [&](Check& c) {
        for (const auto& f : corpus) {
            const auto d = validate_derivative(f);
            c.observe(d.worst_ratio, f.id + " " + describe({{"x", d.worst_x}}));
        }
        c.note("residual is |f2 - fd| / (1e-5 (1 + |f2|))");
    }));

    checks.push_back(run_check("trapezoid_identity", cap(1e-9), [&](Check& c) {
        const auto configs = identity_configs();
        for (const auto& f : corpus) {
            for (const auto& [a, b, m] : configs) {
                const double lhs = signed_trapezoid_gap(f, a, b, m, kIdentityQuadTol);
                const double rhs = rhs_lemma_integral(f, a, b, m, kIdentityQuadTol);
                c.observe(std::abs(lhs - rhs), f.id + " " + describe({{"a", a}, {"b", b}, {"m", m}}));
            }
        }
    }));

    checks.push_back(run_check("equality_case_quadratic", cap(1e-10), [&](Check& c) {
        const FunctionSpec f = corpus.front();
        const AMParams unit{1.0, 1.0, 1.0};
        const auto in = BoundInputs::from(f, 0.0, 1.0, unit);
        c.observe(std::abs(lhs_trapezoid(f, 0.0, 1.0, 1.0, kIdentityQuadTol) - 1.0 / 6.0), "lhs");
        c.observe(std::abs(bound_thm21(in, 1.0) - 1.0 / 6.0), "thm21");
        c.observe(std::abs(bound_thm24(in, 1.0) - 1.0 / 6.0), "thm24");
    }));

    const auto tuples = random_tuples(100, kSeed);

    checks.push_back(run_check("thm21_reduces_to_eq0", cap(1e-12), [&](Check& c) {
        for (const auto& t : tuples) {
            const auto in = make_inputs(t, 1.0, 1.0, 1.0);
            c.observe(std::abs(bound_thm21(in, t.b - t.a) - bound_eq0(t.abs_a, t.abs_b, t.a, t.b)));
        }
    }));

    checks.push_back(run_check("thm22_reduces_to_thm11", cap(1e-12), [&](Check& c) {
        std::mt19937_64 rng(kSeed + 1);
        std::uniform_real_distribution<double> qdist(1.0, 10.0);
        for (const auto& t : tuples) {
            double q = qdist(rng);
            if (q == 1.0) q = 10.0;
            const auto in = make_inputs(t, 1.0, 1.0, q);
            c.observe(std::abs(bound_thm22(in, t.b - t.a, Variant::stated) -
                               bound_thm11(t.abs_a, t.abs_b, t.a, t.b, 1.0, q)),
                      describe({{"q", q}}));
        }
    }));

    checks.push_back(run_check("thm22_constant_bound_matches_cor11", cap(1e-12), [&](Check& c) {
        for (const auto& t : tuples) {
            for (double q : {1.5, 2.0, 4.0}) {
                RandomTuple flat = t;
                flat.abs_b = t.abs_a;
                const auto in = make_inputs(flat, 1.0, 1.0, q);
                c.observe(std::abs(bound_thm22(in, t.b - t.a, Variant::stated) -
                                   bound_cor11(t.abs_a, t.a, t.b, 1.0, q)));
            }
        }
    }));

    checks.push_back(run_check("cor11_dominates_thm11", cap(1e-12), [&](Check& c) {
        std::mt19937_64 rng(kSeed + 2);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (const auto& t : tuples) {
            const double k = std::max(t.abs_a, t.abs_b);
            const double m = 0.05 + 0.95 * unit(rng);
            const double q = 1.0 + 1e-3 + 5.0 * unit(rng);
            c.observe(std::max(0.0, bound_thm11(t.abs_a, t.abs_b, t.a, t.b, m, q) -
                                        bound_cor11(k, t.a, t.b, m, q)));
        }
    }));

    checks.push_back(run_check("thm12_branch_continuity", cap(1e-12), [&](Check& c) {
        for (const auto& t : tuples) {
            const double lo = thm12_lower_branch(0.5, t.abs_a, t.abs_b, t.a, t.b);
            const double hi = thm12_upper_branch(0.5, t.abs_a, t.abs_b, t.a, t.b);
            const double len = t.b - t.a;
            c.observe(std::abs(lo - hi));
            c.observe(std::abs(hi - len * len / 96.0 * (t.abs_a + t.abs_b)));
        }
    }));

    checks.push_back(run_check("thm12_lambda1_is_eq0", cap(1e-12), [&](Check& c) {
        for (const auto& t : tuples) {
            c.observe(std::abs(thm12_upper_branch(1.0, t.abs_a, t.abs_b, t.a, t.b) -
                               bound_eq0(t.abs_a, t.abs_b, t.a, t.b)));
        }
    }));

    checks.push_back(run_check("thm12_dominance", cap(1e-9), [&](Check& c) {
        std::size_t gated_out = 0;
        for (const auto& f : corpus) {
            const auto gate = check_abs_f2_q(f, AMParams{1.0, 1.0, 1.0}, f.b_star);
            if (!gate.holds) {
                ++gated_out;
                continue;
            }
            for (const auto& [a, b] : {std::pair{0.0, 1.0}, {0.2, 1.7}, {0.5, 2.0}, {1.0, 1.25}}) {
                for (int i = 0; i <= 10; ++i) {
                    const double lambda = i / 10.0;
                    const auto r = bound_thm12(lambda, f, a, b, kIdentityQuadTol);
                    c.observe(std::max(0.0, r.lhs - r.rhs),
                              f.id + " " + describe({{"lambda", lambda}, {"a", a}, {"b", b}}));
                }
            }
        }
        c.note(std::to_string(gated_out) + " functions without convex |f''| skipped");
    }));

    checks.push_back(run_check("thm11_dominance", cap(1e-9), [&](Check& c) {
        std::size_t skipped_domain = 0;
        std::size_t gated_out = 0;
        for (const auto& f : corpus) {
            for (double m : {0.5, 0.8, 1.0}) {
                for (double q : {1.5, 2.0, 3.0}) {
                    const auto gate = check_abs_f2_q(f, AMParams{1.0, m, q}, f.b_star);
                    if (!gate.holds) {
                        ++gated_out;
                        continue;
                    }
                    for (const auto& [a, b] : {std::pair{0.0, 1.0}, {0.2, 0.9}, {0.5, 1.5}, {1.0, 2.0}}) {
                        if (b / m > f.b_star) {
                            ++skipped_domain;
                            continue;
                        }
                        const double lhs = lhs_trapezoid(f, a, b, 1.0, kIdentityQuadTol);
                        const double rhs =
                            bound_thm11(std::abs(f.f2(a)), std::abs(f.f2(b / m)), a, b, m, q);
                        c.observe(std::max(0.0, lhs - rhs),
                                  f.id + " " + describe({{"m", m}, {"q", q}, {"a", a}, {"b", b}}));
                    }
                }
            }
        }
        c.note(std::to_string(skipped_domain) + " configurations skipped (b/m > b_star)");
        c.note(std::to_string(gated_out) + " (function, m, q) cells not m-convex");
    }));

    checks.push_back(run_check("loosening_order", 0.0, [&](Check& c) {
        std::mt19937_64 rng(kSeed + 3);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (const auto& t : tuples) {
            const double alpha = unit(rng);
            const double m = 0.05 + 0.95 * unit(rng);
            const double q = 1.0 + 1e-3 + 9.0 * unit(rng);
            RandomTuple s = t;
            s.b = std::max(t.b, (t.a + 0.05) / m);
            const auto in = make_inputs(s, alpha, m, q);
            const double len = in.interval_len();
            c.observe(std::max(0.0, bound_thm22(in, len, Variant::tight) -
                                        bound_thm22(in, len, Variant::stated)));
            c.observe(std::max(0.0, bound_thm23(in, len, Variant::tight) -
                                        bound_thm23(in, len, Variant::stated)));
        }
    }));

    checks.push_back(run_check("bracket_homogeneity", cap(1e-12), [&](Check& c) {
        std::mt19937_64 rng(kSeed + 4);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (const auto& t : tuples) {
            const double alpha = unit(rng);
            const double q = unit(rng) < 0.25 ? 1.0 : 1.0 + 1e-3 + 4.0 * unit(rng);
            const double scale = 0.1 + 9.9 * unit(rng);
            const auto in = make_inputs(t, alpha, 1.0, q);
            RandomTuple scaled = t;
            scaled.abs_a *= scale;
            scaled.abs_b *= scale;
            const auto sin = make_inputs(scaled, alpha, 1.0, q);
            const double len = in.interval_len();
            auto compare = [&](double base, double grown) {
                c.observe(rel(grown, scale * base), describe({{"q", q}, {"c", scale}}));
            };
            compare(bound_thm21(in, len), bound_thm21(sin, len));
            compare(bound_thm24(in, len), bound_thm24(sin, len));
            if (q > 1.0) {
                for (Variant v : {Variant::stated, Variant::tight}) {
                    compare(bound_thm22(in, len, v), bound_thm22(sin, len, v));
                    compare(bound_thm23(in, len, v), bound_thm23(sin, len, v));
                }
            }
        }
    }));

    return summary;
}

} // namespace hhb
