#include "qneuron/synapse.hpp"

#include <algorithm>
#include <cmath>

namespace qneuron::synapse {

namespace {

void check_device(const MemristorState& state) {
    if (state.eta != BiasSign::Positive && state.eta != BiasSign::Negative) {
        throw std::invalid_argument("MemristorState: eta must be +1 or -1");
    }
    if (!(state.r0 > 0.0) || !std::isfinite(state.r0)) {
        throw std::invalid_argument("MemristorState: r0 must be finite and > 0");
    }
    if (!(state.delta_r >= 0.0) || !std::isfinite(state.delta_r)) {
        throw std::invalid_argument("MemristorState: delta_r must be finite and >= 0");
    }
    if (!(state.q0 > 0.0) || !std::isfinite(state.q0)) {
        throw std::invalid_argument("MemristorState: q0 must be finite and > 0");
    }
    if (!std::isfinite(state.flux)) {
        throw std::invalid_argument("MemristorState: flux must be finite");
    }
}

double radicand(const MemristorState& state, double flux) {
    const double sign = static_cast<double>(static_cast<int>(state.eta));
    return 1.0 - (2.0 * sign * state.delta_r * flux) /
                     (state.q0 * state.r0 * state.r0);
}

void check_params(const StdpParams& params) {
    if (!std::isfinite(params.mu)) {
        throw std::invalid_argument("StdpParams: mu must be finite");
    }
    if (!(params.tau_d > 0.0) || !std::isfinite(params.tau_d)) {
        throw std::invalid_argument("StdpParams: tau_d must be finite and > 0");
    }
}

double sign_of(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

}  // namespace

double memristance(const MemristorState& state) {
    check_device(state);
    const double rad = radicand(state, state.flux);
    if (rad < 0.0) {
        throw SaturationError("memristance: flux outside device range (negative radicand)");
    }
    return state.r0 * std::sqrt(rad);
}

std::vector<double> flux_sweep(const MemristorState& state,
                               std::span<const double> flux_values) {
    check_device(state);
    std::vector<double> out;
    out.reserve(flux_values.size());
    for (std::size_t i = 0; i < flux_values.size(); ++i) {
        if (!std::isfinite(flux_values[i])) {
            throw std::invalid_argument("flux_sweep: flux values must be finite");
        }
        const double rad = radicand(state, flux_values[i]);
        if (rad < 0.0) {
            throw SaturationError(
                "flux_sweep: flux outside device range at index " + std::to_string(i), i);
        }
        out.push_back(state.r0 * std::sqrt(rad));
    }
    return out;
}

double stdp_delta(const SpikePair& pair, const StdpParams& params) {
    check_params(params);
    if (!std::isfinite(pair.t_post) || !std::isfinite(pair.t_pre)) {
        throw std::invalid_argument("SpikePair: spike times must be finite");
    }
    const double dt = pair.t_post - pair.t_pre;
    return params.mu * sign_of(dt) * std::exp(-std::abs(dt) / params.tau_d);
}

SynapseWeight apply_stdp(SynapseWeight w, const SpikePair& pair,
                         const StdpParams& params) {
    return {w.w + stdp_delta(pair, params)};
}

SynapseWeight clamp_unit(SynapseWeight w) {
    return {std::clamp(w.w, 0.0, 1.0)};
}

}  // namespace qneuron::synapse
