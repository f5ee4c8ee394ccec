#pragma once

#include <cstdint>

#include "qneuron/constants.hpp"

namespace qneuron::quantization {

// Quantum numbers above 2^53 - 1 are not exactly representable as doubles;
// the operations below reject them so the resistance ladder stays exact.
inline constexpr std::uint64_t max_quantum_number = (std::uint64_t{1} << 53) - 1;

struct QuantumResistor {
    std::uint64_t n = 1;      // quantum number, >= 1
    double charge = 0.0;      // C, != 0
    double resistance = 0.0;  // ohm, n*h/charge^2
};

// One consistent snapshot of the power/energy/current/voltage/resistance
// chain; all identities below hold to relative 1e-12:
//   power == energy/time == current*voltage == current^2*resistance
//   energy == current^2*resistance*time
struct DerivationTrace {
    double power = 0.0;       // W
    double energy = 0.0;      // J
    double time = 0.0;        // s
    double current = 0.0;     // A
    double voltage = 0.0;     // V
    double resistance = 0.0;  // ohm
};

// Potential across the smallest quantized resistance h/charge^2.
struct TykePotential {
    double current = 0.0;    // A
    double charge = 0.0;     // C
    double potential = 0.0;  // V, current*h/charge^2
};

// R = n*h/charge^2. Charge of either sign is accepted (only charge^2 enters).
QuantumResistor quantized_resistance(std::uint64_t n, double charge,
                                     const PhysicalConstants& pc = {});

// The n = 1 rung, h/charge^2.
double smallest_resistance(double charge, const PhysicalConstants& pc = {});

TykePotential tyke_potential(double current, double charge,
                             const PhysicalConstants& pc = {});

// t/T = theta/(2*pi) for theta in [0, 2*pi]; out-of-range theta is rejected.
double phase_fraction(double theta);

// Builds the full chain E = n*h*nu, P = E/t, R = P/I^2, V = I*R and verifies
// its internal consistency (including R == n*h*nu/(I^2*t)) to relative 1e-12
// before returning the trace.
DerivationTrace verify_derivation(std::uint64_t n, double frequency,
                                  double current, double duration,
                                  const PhysicalConstants& pc = {});

}  // namespace qneuron::quantization
