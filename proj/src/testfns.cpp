#include "ebband/testfns.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace ebband {
namespace {

struct BetaTerm {
    double weight;
    double a;
    double b;
};

constexpr std::array<BetaTerm, 3> kCase1Terms{{{1.0, 10.0, 5.0}, {1.0, 7.0, 7.0}, {1.0, 5.0, 10.0}}};
constexpr std::array<BetaTerm, 2> kCase2Terms{{{3.0, 30.0, 17.0}, {2.0, 3.0, 11.0}}};
constexpr std::array<BetaTerm, 1> kCase3Terms{{{7.0, 15.0, 30.0}}};

void check_case(int case_id) {
    if (case_id < 1 || case_id > kNumTestCases) {
        throw std::domain_error("test function case must be in 1..5, got " +
                                std::to_string(case_id));
    }
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_mixture(std::span<const BetaTerm> terms, double t) {
    double sum = 0.0;
    for (const auto& term : terms) {
        sum += term.weight * beta_density(term.a, term.b, t);
    }
    return sum;
}

// Integral over [0,1] of (sum_k w_k B_k)^2, using
// int B(a,b) B(c,d) = Beta(a+c-1, b+d-1) / (Beta(a,b) Beta(c,d)).
double beta_mixture_sq_norm(std::span<const BetaTerm> terms) {
    double total = 0.0;
    for (const auto& p : terms) {
        for (const auto& q : terms) {
            const double log_cross =
                log_beta(p.a + q.a - 1.0, p.b + q.b - 1.0) - log_beta(p.a, p.b) - log_beta(q.a, q.b);
            total += p.weight * q.weight * std::exp(log_cross);
        }
    }
    return total;
}

// Composite Simpson on 2^20 panels.
template <class F>
double simpson_unit_interval(F&& g) {
    constexpr std::size_t panels = std::size_t{1} << 20;
    const double h = 1.0 / static_cast<double>(panels);
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t k = 1; k < panels; ++k) {
        const double v = g(static_cast<double>(k) * h);
        (k % 2 == 1 ? odd : even) += v;
    }
    return h / 3.0 * (g(0.0) + 4.0 * odd + 2.0 * even + g(1.0));
}

double raw_squared_norm(int case_id) {
    switch (case_id) {
        case 1:
            return beta_mixture_sq_norm(kCase1Terms);
        case 2:
            return beta_mixture_sq_norm(kCase2Terms);
        case 3:
            return simpson_unit_interval([](double t) {
                const double v = raw_test_function(3, t);
                return v * v;
            });
        case 4:
            // two triangles of half-width 1/6: 2 * (1/6)^3 / 3
            return 1.0 / 324.0;
        case 5:
            // 0.9 from the flat part plus 2 * int_0^0.05 (1 + 8u)^2 du
            return 0.9 + 2.0 * (1.4 * 1.4 * 1.4 - 1.0) / 24.0;
        default:
            check_case(case_id);
            return 0.0;
    }
}

const std::array<double, kNumTestCases>& constants() {
    static const std::array<double, kNumTestCases> table = [] {
        std::array<double, kNumTestCases> c{};
        for (int k = 1; k <= kNumTestCases; ++k) {
            c[k - 1] = 1.0 / std::sqrt(raw_squared_norm(k));
        }
        return c;
    }();
    return table;
}

}  // namespace

double beta_density(double a, double b, double t) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("beta_density: shape parameters must be positive");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("beta_density: t must lie in [0, 1]");
    }
    // (a - 1) log t is 0 * -inf at t = 0 when a = 1; treat the factor as 1.
    const double left = a == 1.0 ? 0.0 : (a - 1.0) * std::log(t);
    const double right = b == 1.0 ? 0.0 : (b - 1.0) * std::log1p(-t);
    return std::exp(left + right - log_beta(a, b));
}

double raw_test_function(int case_id, double t) {
    check_case(case_id);
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("test function argument must lie in [0, 1]");
    }
    using std::numbers::pi;
    switch (case_id) {
        case 1:
            return beta_mixture(kCase1Terms, t);
        case 2:
            return beta_mixture(kCase2Terms, t);
        case 3:
            return beta_mixture(kCase3Terms, t) + 2.0 * std::sin(32.0 * pi * t - 2.0 * pi / 3.0) -
                   3.0 * std::cos(16.0 * pi * t) - std::cos(64.0 * pi * t);
        case 4: {
            // Written as a function of |t - 1/2| so the triangle is exactly symmetric.
            const double d = std::abs(t - 0.5);
            if (t >= 1.0 / 3.0 && t <= 2.0 / 3.0 && d <= 1.0 / 6.0) {
                return 1.0 / 6.0 - d;
            }
            return 0.0;
        }
        default:  // case 5
            if (t >= 0.45 && t <= 0.5) {
                return 1.0 + 8.0 * (t - 0.45);
            }
            if (t > 0.5 && t <= 0.55) {
                return 1.0 + 8.0 * (0.55 - t);
            }
            return 1.0;
    }
}

double normalization_constant(int case_id) {
    check_case(case_id);
    return constants()[static_cast<std::size_t>(case_id - 1)];
}

double eval_test_function(int case_id, double t) {
    return normalization_constant(case_id) * raw_test_function(case_id, t);
}

TestFunction::TestFunction(int case_id)
    : case_id_(case_id), scale_(ebband::normalization_constant(case_id)) {}

double TestFunction::operator()(double t) const {
    return scale_ * raw_test_function(case_id_, t);
}

std::vector<double> TestFunction::sample(std::size_t n) const {
    std::vector<double> values(n);
    for (std::size_t i = 1; i <= n; ++i) {
        values[i - 1] = (*this)(static_cast<double>(i) / static_cast<double>(n));
    }
    return values;
}

}  // namespace ebband
