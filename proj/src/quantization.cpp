#include "qneuron/quantization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qneuron::quantization {

namespace {

void check_quantum_number(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("quantization: n must be >= 1");
    }
    if (n > max_quantum_number) {
        throw std::invalid_argument("quantization: n exceeds 2^53 - 1 and would lose exactness");
    }
}

void check_charge(double charge) {
    if (charge == 0.0 || !std::isfinite(charge)) {
        throw std::invalid_argument("quantization: charge must be finite and nonzero");
    }
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

QuantumResistor quantized_resistance(std::uint64_t n, double charge,
                                     const PhysicalConstants& pc) {
    validate(pc);
    check_quantum_number(n);
    check_charge(charge);
    const double resistance = static_cast<double>(n) * pc.h / (charge * charge);
    return {n, charge, resistance};
}

double smallest_resistance(double charge, const PhysicalConstants& pc) {
    return quantized_resistance(1, charge, pc).resistance;
}

TykePotential tyke_potential(double current, double charge,
                             const PhysicalConstants& pc) {
    if (!std::isfinite(current)) {
        throw std::invalid_argument("tyke_potential: current must be finite");
    }
    const double potential = current * smallest_resistance(charge, pc);
    return {current, charge, potential};
}

double phase_fraction(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(theta >= 0.0 && theta <= two_pi)) {
        throw std::domain_error("phase_fraction: theta must lie in [0, 2*pi]");
    }
    return theta / two_pi;
}

DerivationTrace verify_derivation(std::uint64_t n, double frequency,
                                  double current, double duration,
                                  const PhysicalConstants& pc) {
    validate(pc);
    check_quantum_number(n);
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw std::invalid_argument("verify_derivation: frequency must be finite and > 0");
    }
    if (!(current > 0.0) || !std::isfinite(current)) {
        throw std::invalid_argument("verify_derivation: current must be finite and > 0");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw std::invalid_argument("verify_derivation: duration must be finite and > 0");
    }

    const double energy = static_cast<double>(n) * pc.h * frequency;
    const double power = energy / duration;
    const double resistance = power / (current * current);
    const double voltage = current * resistance;

    // The chain must agree with itself and with the closed form
    // n*h*nu/(I^2*t); a violation here means broken arithmetic, not bad input.
    constexpr double rel = 1e-12;
    const double closed_form =
        static_cast<double>(n) * pc.h * frequency / (current * current * duration);
    const bool consistent = close_rel(power, current * voltage, rel) &&
                            close_rel(power, current * current * resistance, rel) &&
                            close_rel(energy, current * current * resistance * duration, rel) &&
                            close_rel(resistance, closed_form, rel);
    if (!consistent) {
        throw std::logic_error("verify_derivation: chain identities failed");
    }
    return {power, energy, duration, current, voltage, resistance};
}

}  // namespace qneuron::quantization
