#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "qneuron/constants.hpp"
#include "qneuron/planck.hpp"
#include "qneuron/spiketrain.hpp"

namespace qneuron::evaluation {

// Absolute guard used when both samples are near zero; curve magnitudes span
// many decades and a pure relative test would flag 0-vs-denormal pairs.
inline constexpr double match_floor = 1e-30;

// Refuse to materialize comparison grids larger than this.
inline constexpr std::size_t max_grid_points = 10'000'000;

struct MatchReport {
    std::size_t total = 0;
    std::size_t matched = 0;
    double fraction = 0.0;   // matched/total
    double tolerance = 0.0;  // relative tolerance used
    std::optional<std::size_t> first_mismatch_index;
};

// Inclusive time grid t0, t0+dt, ..., t_max.
struct EvalConfig {
    double t0 = 3.3357e-18;     // s
    double t_max = 9.9770e-15;  // s, > t0
    double dt = 3.3357e-17;     // s, > 0
    double tolerance = 1e-6;    // relative, >= 0
};

// Number of points on the inclusive grid. The step count is the ratio
// (t_max - t0)/dt rounded to the nearest integer: the bounds are typically
// given as short decimals whose ratio lands within rounding slack of the
// intended integer, and flooring would drop the end point.
std::size_t grid_point_count(const EvalConfig& config);

// Index i matches when |a[i] - b[i]| <= tolerance*max(|a[i]|, |b[i]|, match_floor).
// Inputs must be the same nonzero length.
MatchReport count_matches(std::span<const double> a, std::span<const double> b,
                          double tolerance);

// Reference route: the curve arithmetic written out directly, with a bare
// exp. Must stay independent of planck's stabilized evaluator so the two
// paths can be compared against each other.
double reference_intensity(planck::Variant variant, double lambda,
                           double temperature, const PhysicalConstants& pc = {});

// Runs the matched-point protocol: builds the inclusive time grid, maps each
// time back to a wavelength (lambda = c*t), evaluates the model pipeline and
// the reference route at every grid point for every configured temperature,
// and counts matches at the configured tolerance. total is point count times
// temperature count. train_config.grid is not used; the grid comes from
// EvalConfig.
MatchReport evaluate_model(const EvalConfig& config,
                           const spiketrain::TrainConfig& train_config,
                           const PhysicalConstants& pc = {});

}  // namespace qneuron::evaluation
