#include "qneuron/evaluation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qneuron::evaluation {

namespace {

void check_config(const EvalConfig& config) {
    if (!std::isfinite(config.t0) || !std::isfinite(config.t_max) ||
        !std::isfinite(config.dt)) {
        throw std::invalid_argument("EvalConfig: times must be finite");
    }
    if (!(config.dt > 0.0)) {
        throw std::invalid_argument("EvalConfig: dt must be > 0");
    }
    if (!(config.t0 < config.t_max)) {
        throw std::invalid_argument("EvalConfig: t0 must be < t_max");
    }
    if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
        throw std::invalid_argument("EvalConfig: tolerance must be finite and >= 0");
    }
}

}  // namespace

std::size_t grid_point_count(const EvalConfig& config) {
    check_config(config);
    const double ratio = (config.t_max - config.t0) / config.dt;
    const long long steps = std::llround(ratio);
    if (steps < 0 || static_cast<std::size_t>(steps) + 1 > max_grid_points) {
        throw std::invalid_argument("EvalConfig: grid point count out of range");
    }
    return static_cast<std::size_t>(steps) + 1;
}

MatchReport count_matches(std::span<const double> a, std::span<const double> b,
                          double tolerance) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("count_matches: sequences differ in length");
    }
    if (a.empty()) {
        throw std::invalid_argument("count_matches: sequences must be nonempty");
    }
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("count_matches: tolerance must be finite and >= 0");
    }

    MatchReport report;
    report.total = a.size();
    report.tolerance = tolerance;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale =
            std::max({std::abs(a[i]), std::abs(b[i]), match_floor});
        if (std::abs(a[i] - b[i]) <= tolerance * scale) {
            ++report.matched;
        } else if (!report.first_mismatch_index) {
            report.first_mismatch_index = i;
        }
    }
    report.fraction =
        static_cast<double>(report.matched) / static_cast<double>(report.total);
    return report;
}

double reference_intensity(planck::Variant variant, double lambda,
                           double temperature, const PhysicalConstants& pc) {
    validate(pc);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("reference_intensity: wavelength must be finite and > 0");
    }
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw std::domain_error("reference_intensity: temperature must be finite and > 0");
    }
    constexpr double pi = std::numbers::pi;
    const double prefactor =
        variant == planck::Variant::Radiance
            ? (2.0 * pi * pc.h * pc.c * pc.c) / std::pow(lambda, 5.0)
            : (8.0 * pi * pc.h * pc.c) / std::pow(lambda, 5.0);
    const double a = (pc.h * pc.c) / (pc.k * temperature * lambda);
    // Bare exp: overflow saturates to inf and the factor collapses to 0.
    return prefactor * (1.0 / (std::exp(a) - 1.0));
}

MatchReport evaluate_model(const EvalConfig& config,
                           const spiketrain::TrainConfig& train_config,
                           const PhysicalConstants& pc) {
    validate(pc);
    if (train_config.temperatures.empty()) {
        throw std::invalid_argument("evaluate_model: temperatures must be nonempty");
    }
    const std::size_t points = grid_point_count(config);

    std::vector<double> model;
    std::vector<double> reference;
    model.reserve(points * train_config.temperatures.size());
    reference.reserve(points * train_config.temperatures.size());

    for (double temperature : train_config.temperatures) {
        for (std::size_t i = 0; i < points; ++i) {
            const double time = config.t0 + static_cast<double>(i) * config.dt;
            const double lambda = pc.c * time;
            const double model_intensity =
                planck::spectral_value(train_config.variant, lambda, temperature, pc);
            const double reference_value =
                reference_intensity(train_config.variant, lambda, temperature, pc);
            model.push_back(spiketrain::intensity_to_potential(
                model_intensity, train_config.transform));
            reference.push_back(spiketrain::intensity_to_potential(
                reference_value, train_config.transform));
        }
    }
    return count_matches(model, reference, config.tolerance);
}

}  // namespace qneuron::evaluation
