#pragma once

#include <cstddef>
#include <vector>

#include "qneuron/constants.hpp"
#include "qneuron/planck.hpp"

namespace qneuron::spiketrain {

// Intensity-to-potential transform parameters: potential = intensity*area/current.
struct TransformParams {
    double area = 1.0;     // m^2, > 0
    double current = 1.0;  // A, > 0
};

struct Segment {
    std::size_t start = 0;     // index into SpikeTrain::potentials
    std::size_t length = 0;
    double temperature = 0.0;  // K
};

// Time-indexed potential series: a block of exactly prefix_length zeros
// followed by one transformed spectral segment per temperature. Sample i
// lives at t0 + i*sample_period for a caller-chosen t0.
struct SpikeTrain {
    double sample_period = 0.0;      // s between consecutive samples, > 0
    std::vector<double> potentials;  // V
    std::vector<Segment> segments;
    std::size_t prefix_length = 0;   // leading zero samples
};

struct TrainConfig {
    planck::WavelengthGrid grid{};
    std::vector<double> temperatures{4500.0, 5000.0, 5500.0,
                                     6000.0, 6500.0, 7000.0, 7500.0};
    TransformParams transform{};
    planck::Variant variant = planck::Variant::EnergyDensity;
};

// time = lambda/c. Rejects negative lambda.
double wavelength_to_time(double lambda, const PhysicalConstants& pc = {});

// potential = intensity*area/current.
double intensity_to_potential(double intensity, const TransformParams& params);

// Builds the train: grid.count zeros, then per temperature (in order) the
// transformed curve of that temperature over the grid. sample_period is
// grid.step/c, so total length is (1 + temperatures.size())*grid.count.
SpikeTrain generate_train(const TrainConfig& config,
                          const PhysicalConstants& pc = {});

// times[i] = t0 + i*sample_period, one per potential sample.
std::vector<double> train_times(const SpikeTrain& train, double t0);

// Sum of one segment's potential samples (the discrete accumulation of the
// train's sub-spike potentials). Throws std::out_of_range on a bad index.
double segment_accumulation(const SpikeTrain& train, std::size_t segment_index);

}  // namespace qneuron::spiketrain
