#include "ebband/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <stdexcept>
#include <string>

#include "ebband/testfns.hpp"

namespace ebband {
namespace {

// Plans for FFTW's DCT-II (REDFT10) and DCT-III (REDFT01):
//   REDFT10: Y_k = 2 sum_i x_i cos(pi k (i + 1/2) / n)
//   REDFT01: Y_i = x_0 + 2 sum_{k>0} x_k cos(pi k (i + 1/2) / n)
// Plans are created once per (kind, size) under a lock; fftw_execute_r2r on
// a cached plan is thread-safe.
class CosinePlans {
public:
    ~CosinePlans() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(fftw_r2r_kind kind, std::size_t n) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(static_cast<int>(kind), n);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        auto* buffer = static_cast<double*>(fftw_malloc(sizeof(double) * n));
        fftw_plan plan = fftw_plan_r2r_1d(static_cast<int>(n), buffer, buffer, kind,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buffer);
        if (plan == nullptr) {
            throw std::runtime_error("fftw: failed to create cosine transform plan");
        }
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, std::size_t>, fftw_plan> plans_;
};

CosinePlans& plans() {
    static CosinePlans instance;
    return instance;
}

// In-place transform of buffer.
void execute(fftw_r2r_kind kind, std::span<double> buffer) {
    if (!buffer.empty()) {
        fftw_execute_r2r(plans().get(kind, buffer.size()), buffer.data(), buffer.data());
    }
}

}  // namespace

RegressionData generate_data(const TestFunction& f, std::size_t n, double sigma,
                             std::mt19937_64& rng) {
    if (n < 2) {
        throw std::domain_error("generate_data: n must be at least 2");
    }
    if (!(sigma >= 0.0)) {
        throw std::domain_error("generate_data: sigma must be nonnegative");
    }
    RegressionData data;
    data.sigma = sigma;
    data.y = f.sample(n);
    std::normal_distribution<double> normal;
    for (double& v : data.y) {
        v += sigma * normal(rng);
    }
    return data;
}

std::vector<double> analyze(std::span<const double> y) {
    const std::size_t n = y.size();
    std::vector<double> coeffs(y.begin(), y.end());
    execute(FFTW_REDFT10, coeffs);
    // REDFT10 gives 2 n X_j; S_j = w_j X_j.
    const double inv_2n = 1.0 / (2.0 * static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        coeffs[j] *= inv_2n * model_scale_weight(j + 1);
    }
    return coeffs;
}

SequenceObservations analyze(const RegressionData& data) {
    SequenceObservations obs;
    obs.coeffs = analyze(data.y);
    obs.noise_level = data.sigma / std::sqrt(static_cast<double>(data.n()));
    return obs;
}

void synthesize_into(std::span<const double> theta, std::span<double> out) {
    if (theta.size() != out.size()) {
        throw std::domain_error("synthesize: output length must match coefficient length");
    }
    // REDFT01 applied to X = S / w is exactly X_1 + 2 sum_j X_j cos(...).
    for (std::size_t j = 0; j < theta.size(); ++j) {
        out[j] = theta[j] / model_scale_weight(j + 1);
    }
    execute(FFTW_REDFT01, out);
}

std::vector<double> synthesize(std::span<const double> theta, std::size_t n) {
    if (theta.size() != n) {
        throw std::domain_error("synthesize: expected " + std::to_string(n) +
                                " coefficients, got " + std::to_string(theta.size()));
    }
    std::vector<double> out(n);
    synthesize_into(theta, out);
    return out;
}

double cosine_kernel(std::size_t j, std::size_t i, std::size_t n) {
    // (j-1)(2i-1) pi / (2n), reduced modulo 4n (a full period) before scaling.
    const std::size_t period = 4 * n;
    const std::size_t r = ((j - 1) % period) * ((2 * i - 1) % period) % period;
    const double c =
        std::cos(std::numbers::pi * static_cast<double>(r) / (2.0 * static_cast<double>(n)));
    return j == 1 ? c / std::numbers::sqrt2 : c;
}

std::vector<double> analyze_direct(std::span<const double> y) {
    const std::size_t n = y.size();
    std::vector<double> coeffs(n, 0.0);
    const double scale = std::numbers::sqrt2 / static_cast<double>(n);
    for (std::size_t j = 1; j <= n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            sum += y[i - 1] * cosine_kernel(j, i, n);
        }
        coeffs[j - 1] = scale * sum;
    }
    return coeffs;
}

std::vector<double> synthesize_direct(std::span<const double> theta) {
    const std::size_t n = theta.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            sum += theta[j - 1] * cosine_kernel(j, i, n);
        }
        out[i - 1] = std::numbers::sqrt2 * sum;
    }
    return out;
}

double model_scale_weight(std::size_t j) {
    return j == 1 ? 1.0 : std::numbers::sqrt2;
}

std::vector<double> to_model_scale(std::span<const double> coeffs) {
    std::vector<double> x(coeffs.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = coeffs[j] / model_scale_weight(j + 1);
    }
    return x;
}

std::vector<double> from_model_scale(std::span<const double> model_coeffs) {
    std::vector<double> s(model_coeffs.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        s[j] = model_coeffs[j] * model_scale_weight(j + 1);
    }
    return s;
}

}  // namespace ebband
