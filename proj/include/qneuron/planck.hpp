#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qneuron/constants.hpp"

namespace qneuron::planck {

// Beyond this exponent the Boltzmann factor 1/(e^x - 1) underflows to zero in
// double precision; the evaluators return exactly 0 instead of overflowing.
inline constexpr double exp_arg_cutoff = 700.0;

// Uniform wavelength grid. Sample i sits at start + i*step for i in
// [0, count); the end point is implied, never stored.
struct WavelengthGrid {
    double start = 1e-9;       // m, must be > 0 (lambda = 0 is a pole)
    double step = 10e-9;       // m, must be > 0
    std::size_t count = 300;   // must be >= 1

    double wavelength_at(std::size_t i) const {
        return start + static_cast<double>(i) * step;
    }
};

// Two prefactor variants of the spectral curve. They share the same
// lambda- and T-dependence and differ by the constant factor 4/c:
//   EnergyDensity(lambda, T) == (4/c) * Radiance(lambda, T).
enum class Variant {
    Radiance,       // 2*pi*h*c^2 / lambda^5 prefactor, W m^-2 m^-1
    EnergyDensity,  // 8*pi*h*c  / lambda^5 prefactor, J m^-3 m^-1
};

struct PlanckCurve {
    WavelengthGrid grid;
    double temperature = 0.0;  // K
    Variant variant = Variant::EnergyDensity;
    std::vector<double> values;  // values.size() == grid.count
};

struct OscillatorEnergy {
    std::uint64_t n = 1;       // quantum number, >= 1
    double frequency = 0.0;    // Hz
    double energy = 0.0;       // J, n*h*frequency
};

// Spectral power per unit area per unit wavelength,
// 2*pi*h*c^2 / (lambda^5 * (e^{hc/(lambda k T)} - 1)).
// Throws std::domain_error on lambda <= 0 or temperature <= 0.
double radiance(double lambda, double temperature,
                const PhysicalConstants& pc = {});

// Spectral energy density, 8*pi*h*c / (lambda^5 * (e^{hc/(lambda k T)} - 1)).
double energy_density(double lambda, double temperature,
                      const PhysicalConstants& pc = {});

double spectral_value(Variant variant, double lambda, double temperature,
                      const PhysicalConstants& pc = {});

// Pointwise evaluation of the selected variant over the grid. Deterministic:
// identical inputs give bit-identical curves.
PlanckCurve sample_curve(const WavelengthGrid& grid, double temperature,
                         Variant variant, const PhysicalConstants& pc = {});

// E = n*h*frequency. Rejects n = 0 and frequency <= 0.
OscillatorEnergy oscillator_energy(std::uint64_t n, double frequency,
                                   const PhysicalConstants& pc = {});

}  // namespace qneuron::planck
