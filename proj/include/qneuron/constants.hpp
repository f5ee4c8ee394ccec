#pragma once

namespace qneuron {

// Shared SI constants. The defaults are the five-significant-digit values the
// rest of the model is calibrated against; callers may override them (e.g.
// with the coarser three-digit roundings) on any operation that takes a
// PhysicalConstants argument.
struct PhysicalConstants {
    double h = 6.6261e-34;         // Planck constant, J*s
    double c = 2.9979e8;           // speed of light, m/s
    double k = 1.3807e-23;         // Boltzmann constant, J/K
    double e_charge = 1.60218e-19; // elementary charge, C (demo/CLI default only)
};

// Throws std::invalid_argument unless every constant is finite and > 0.
void validate(const PhysicalConstants& pc);

}  // namespace qneuron
