#include "qneuron/planck.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qneuron::planck {

namespace {

constexpr double pi = std::numbers::pi;

void check_point(double lambda, double temperature) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("planck: wavelength must be finite and > 0");
    }
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw std::domain_error("planck: temperature must be finite and > 0");
    }
}

// 1/(e^x - 1), evaluated through expm1 so small x stays accurate. Past the
// cutoff e^x overflows a double and the factor is an exact 0.
double bose_factor(double x) {
    if (x > exp_arg_cutoff) {
        return 0.0;
    }
    return 1.0 / std::expm1(x);
}

void check_grid(const WavelengthGrid& grid) {
    if (!(grid.start > 0.0) || !std::isfinite(grid.start)) {
        throw std::invalid_argument("WavelengthGrid: start must be finite and > 0");
    }
    if (!(grid.step > 0.0) || !std::isfinite(grid.step)) {
        throw std::invalid_argument("WavelengthGrid: step must be finite and > 0");
    }
    if (grid.count < 1) {
        throw std::invalid_argument("WavelengthGrid: count must be >= 1");
    }
}

}  // namespace

double radiance(double lambda, double temperature, const PhysicalConstants& pc) {
    validate(pc);
    check_point(lambda, temperature);
    const double prefactor = (2.0 * pi * pc.h * pc.c * pc.c) / std::pow(lambda, 5.0);
    const double x = (pc.h * pc.c) / (pc.k * temperature * lambda);
    return prefactor * bose_factor(x);
}

double energy_density(double lambda, double temperature, const PhysicalConstants& pc) {
    validate(pc);
    check_point(lambda, temperature);
    const double prefactor = (8.0 * pi * pc.h * pc.c) / std::pow(lambda, 5.0);
    const double x = (pc.h * pc.c) / (pc.k * temperature * lambda);
    return prefactor * bose_factor(x);
}

double spectral_value(Variant variant, double lambda, double temperature,
                      const PhysicalConstants& pc) {
    return variant == Variant::Radiance ? radiance(lambda, temperature, pc)
                                        : energy_density(lambda, temperature, pc);
}

PlanckCurve sample_curve(const WavelengthGrid& grid, double temperature,
                         Variant variant, const PhysicalConstants& pc) {
    check_grid(grid);
    PlanckCurve curve{grid, temperature, variant, {}};
    curve.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        curve.values.push_back(
            spectral_value(variant, grid.wavelength_at(i), temperature, pc));
    }
    return curve;
}

OscillatorEnergy oscillator_energy(std::uint64_t n, double frequency,
                                   const PhysicalConstants& pc) {
    validate(pc);
    if (n < 1) {
        throw std::invalid_argument("oscillator_energy: n must be >= 1");
    }
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw std::invalid_argument("oscillator_energy: frequency must be finite and > 0");
    }
    const double energy = static_cast<double>(n) * pc.h * frequency;
    return {n, frequency, energy};
}

}  // namespace qneuron::planck
