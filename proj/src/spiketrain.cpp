#include "qneuron/spiketrain.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron::spiketrain {

namespace {

void check_transform(const TransformParams& params) {
    if (!(params.area > 0.0) || !std::isfinite(params.area)) {
        throw std::invalid_argument("TransformParams: area must be finite and > 0");
    }
    if (!(params.current > 0.0) || !std::isfinite(params.current)) {
        throw std::invalid_argument("TransformParams: current must be finite and > 0");
    }
}

void check_config(const TrainConfig& config) {
    check_transform(config.transform);
    if (config.temperatures.empty()) {
        throw std::invalid_argument("TrainConfig: temperatures must be nonempty");
    }
    for (double t : config.temperatures) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("TrainConfig: temperatures must be finite and > 0");
        }
    }
}

}  // namespace

double wavelength_to_time(double lambda, const PhysicalConstants& pc) {
    validate(pc);
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("wavelength_to_time: wavelength must be finite and >= 0");
    }
    return lambda / pc.c;
}

double intensity_to_potential(double intensity, const TransformParams& params) {
    check_transform(params);
    return intensity * params.area / params.current;
}

SpikeTrain generate_train(const TrainConfig& config, const PhysicalConstants& pc) {
    check_config(config);

    SpikeTrain train;
    train.sample_period = wavelength_to_time(config.grid.step, pc);
    train.prefix_length = config.grid.count;
    train.potentials.assign(config.grid.count, 0.0);
    train.segments.reserve(config.temperatures.size());

    for (double temperature : config.temperatures) {
        const planck::PlanckCurve curve =
            planck::sample_curve(config.grid, temperature, config.variant, pc);
        train.segments.push_back(
            {train.potentials.size(), curve.values.size(), temperature});
        for (double intensity : curve.values) {
            train.potentials.push_back(
                intensity_to_potential(intensity, config.transform));
        }
    }
    return train;
}

std::vector<double> train_times(const SpikeTrain& train, double t0) {
    if (!(t0 >= 0.0) || !std::isfinite(t0)) {
        throw std::invalid_argument("train_times: t0 must be finite and >= 0");
    }
    std::vector<double> times;
    times.reserve(train.potentials.size());
    for (std::size_t i = 0; i < train.potentials.size(); ++i) {
        times.push_back(t0 + static_cast<double>(i) * train.sample_period);
    }
    return times;
}

double segment_accumulation(const SpikeTrain& train, std::size_t segment_index) {
    if (segment_index >= train.segments.size()) {
        throw std::out_of_range("segment_accumulation: segment index out of range");
    }
    const Segment& segment = train.segments[segment_index];
    if (segment.start + segment.length > train.potentials.size()) {
        throw std::out_of_range("segment_accumulation: segment exceeds train length");
    }
    double sum = 0.0;
    for (std::size_t i = segment.start; i < segment.start + segment.length; ++i) {
        sum += train.potentials[i];
    }
    return sum;
}

}  // namespace qneuron::spiketrain
