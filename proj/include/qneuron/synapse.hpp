#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qneuron::synapse {

enum class BiasSign : int { Positive = +1, Negative = -1 };

// Immutable device snapshot. Flux evolution is the caller's responsibility;
// nothing here mutates state.
struct MemristorState {
    double r0 = 0.0;                     // initial resistance, ohm, > 0
    BiasSign eta = BiasSign::Positive;   // bias sign
    double delta_r = 0.0;                // R_max - R_min, ohm, >= 0
    double q0 = 0.0;                     // charge capacity, C, > 0
    double flux = 0.0;                   // accumulated flux, Wb
};

// Raised when flux drives the radicand negative: the device model has no
// value there. Distinct from std::invalid_argument so callers can tell
// saturation apart from bad parameters. For sweeps, index() reports the
// first out-of-domain entry.
class SaturationError : public std::domain_error {
public:
    explicit SaturationError(const std::string& what,
                             std::optional<std::size_t> index = std::nullopt)
        : std::domain_error(what), index_(index) {}

    std::optional<std::size_t> index() const { return index_; }

private:
    std::optional<std::size_t> index_;
};

struct StdpParams {
    double mu = 0.0;     // learning rate, weight units, finite
    double tau_d = 0.0;  // reference time delay, s, > 0
};

struct SynapseWeight {
    double w = 0.0;  // dimensionless
};

struct SpikePair {
    double t_post = 0.0;  // s, post-synaptic spike time
    double t_pre = 0.0;   // s, pre-synaptic spike time
};

// M(flux) = r0 * sqrt(1 - 2*eta*delta_r*flux/(q0*r0^2)).
// Throws SaturationError when the radicand is negative.
double memristance(const MemristorState& state);

// Pointwise memristance over flux_values; state.flux itself is ignored and
// each entry is evaluated in its place. Order-preserving. A negative radicand
// raises SaturationError carrying the offending index.
std::vector<double> flux_sweep(const MemristorState& state,
                               std::span<const double> flux_values);

// delta_w = mu * sgn(t_post - t_pre) * exp(-|t_post - t_pre|/tau_d),
// with sgn(0) = 0 so simultaneous spikes are a no-op.
double stdp_delta(const SpikePair& pair, const StdpParams& params);

// w + stdp_delta(pair, params). No clipping.
SynapseWeight apply_stdp(SynapseWeight w, const SpikePair& pair,
                         const StdpParams& params);

// Optional [0,1] post-hook for simulator use; never applied by apply_stdp.
SynapseWeight clamp_unit(SynapseWeight w);

}  // namespace qneuron::synapse
