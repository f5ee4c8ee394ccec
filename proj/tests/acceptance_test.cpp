// Acceptance suite: one line per criterion, every tolerance pinned in code.
// argv[1] is the CLI binary; a scratch directory is created under cwd.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "qneuron/evaluation.hpp"
#include "qneuron/planck.hpp"
#include "qneuron/quantization.hpp"
#include "qneuron/spiketrain.hpp"
#include "qneuron/synapse.hpp"
#include "oracle/listing_oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qneuron;

namespace {

std::string g_cli;
fs::path g_scratch;
int g_failed = 0;

class Criterion {
public:
    Criterion(int number, std::string description)
        : number_(number), description_(std::move(description)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& detail) {
        if (!condition && reason_.empty()) {
            reason_ = detail;
        }
    }

    // max_seconds <= 0 means no runtime requirement
    void finish(double max_seconds) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (reason_.empty() && max_seconds > 0.0 && elapsed > max_seconds) {
            reason_ = "runtime " + std::to_string(elapsed) + " s exceeds " +
                      std::to_string(max_seconds) + " s";
        }
        if (reason_.empty()) {
            std::cout << "[PASS] criterion " << number_ << ": " << description_ << "\n";
        } else {
            std::cout << "[FAIL] criterion " << number_ << ": " << description_
                      << " -- " << reason_ << "\n";
            ++g_failed;
        }
    }

private:
    int number_;
    std::string description_;
    std::string reason_;
    std::chrono::steady_clock::time_point start_;
};

int run_cli(const std::string& args) {
    const std::string command = "\"" + g_cli + "\" " + args + " 2>>" +
                                (g_scratch / "stderr.log").string();
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string scratch(const std::string& name) { return (g_scratch / name).string(); }

double rel_diff(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

bool within_tolerance(double a, double b, double tolerance, double floor) {
    return std::abs(a - b) <= tolerance * std::max({std::abs(a), std::abs(b), floor});
}

bool is_unimodal(const std::vector<double>& values) {
    if (values.size() < 3) return true;
    std::size_t i = 1;
    while (i < values.size() && values[i] > values[i - 1]) ++i;
    if (i == 1 || i == values.size()) return false;
    for (; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

// 300-point time grid reproduction with matched fraction >= 0.97
void criterion_1() {
    Criterion c(1, "evaluation grid has 300 points and the match fraction clears 0.97");

    const evaluation::EvalConfig eval_config{};  // t0 3.3357e-18, dt 3.3357e-17, t_max 9.9770e-15
    c.require(evaluation::grid_point_count(eval_config) == 300,
              "grid point count is not 300");

    const int code = run_cli("evaluate --output " + scratch("acc_eval.json"));
    c.require(code == 0, "evaluate exited with " + std::to_string(code));
    const json report = json::parse(read_file(g_scratch / "acc_eval.json"));
    c.require(report["total"].get<std::size_t>() == 300, "reported total is not 300");
    c.require(report["fraction"].get<double>() >= 0.97, "reported fraction below 0.97");
    c.require(report["matched"].get<std::size_t>() >= 280, "matched points below 280");

    // cross-check against the transcription oracle kept in the test tree
    const PhysicalConstants pc{};
    std::size_t matched = 0;
    for (std::size_t i = 0; i < 300; ++i) {
        const double time = eval_config.t0 + static_cast<double>(i) * eval_config.dt;
        const double lambda = pc.c * time;
        const double model = planck::energy_density(lambda, 4500.0, pc);
        const double reference = oracle::energy_density(lambda, 4500.0);
        if (within_tolerance(model, reference, 1e-6, 1e-30)) {
            ++matched;
        }
    }
    c.require(matched >= 291, "oracle cross-check below 0.97 (matched " +
                                  std::to_string(matched) + "/300)");
    c.finish(1.0);
}

// default spike train: 2400 samples, 300 zeros, 7 unimodal rising segments
void criterion_2() {
    Criterion c(2, "default spike train is 300 zeros plus 7 unimodal rising segments");

    const int code = run_cli("spike-train --format json --output " + scratch("acc_train.json"));
    c.require(code == 0, "spike-train exited with " + std::to_string(code));
    const json doc = json::parse(read_file(g_scratch / "acc_train.json"));
    const std::vector<double> potentials = doc["train"]["potential_v"].get<std::vector<double>>();
    c.require(potentials.size() == 2400, "train length is not 2400");
    for (std::size_t i = 0; i < 300 && i < potentials.size(); ++i) {
        if (potentials[i] != 0.0) {
            c.require(false, "prefix sample " + std::to_string(i) + " is not zero");
            break;
        }
    }
    c.require(doc["train"]["segments"].size() == 7, "expected 7 segments");

    double previous_peak = -1.0;
    for (std::size_t s = 0; s < 7; ++s) {
        const std::size_t start = 300 * (s + 1);
        const std::vector<double> segment(potentials.begin() + start,
                                          potentials.begin() + start + 300);
        if (!is_unimodal(segment)) {
            c.require(false, "segment " + std::to_string(s + 1) + " is not unimodal");
        }
        const double peak = *std::max_element(segment.begin(), segment.end());
        if (!(peak > previous_peak)) {
            c.require(false, "segment " + std::to_string(s + 1) + " peak does not rise");
        }
        previous_peak = peak;
    }
    c.finish(1.0);
}

// brute-force spectral peak obeys the displacement constant
void criterion_3() {
    Criterion c(3, "argmax wavelength times T lies in [2.88e-3, 2.92e-3] m*K");

    const planck::WavelengthGrid grid{100e-9, 1e-9, 2901};  // 100 nm .. 3000 nm
    for (double temperature : {4500.0, 6000.0, 7500.0}) {
        const planck::PlanckCurve curve =
            planck::sample_curve(grid, temperature, planck::Variant::EnergyDensity);
        std::size_t best = 0;
        for (std::size_t i = 1; i < curve.values.size(); ++i) {
            if (curve.values[i] > curve.values[best]) best = i;
        }
        const double product = grid.wavelength_at(best) * temperature;
        if (!(product >= 2.88e-3 && product <= 2.92e-3)) {
            c.require(false, "T = " + std::to_string(temperature) + " gives " +
                                 std::to_string(product));
        }
    }
    c.finish(2.0);
}

// resistance ladder exactness and the smallest-rung magnitude
void criterion_4() {
    Criterion c(4, "resistance ladder is n-fold to 1e-12 and the lowest rung is h/Q^2");

    std::mt19937_64 rng(8675309);
    std::uniform_real_distribution<double> log_q(std::log(1e-19), std::log(1.0));
    for (int trial = 0; trial < 100; ++trial) {
        const double q = std::exp(log_q(rng)) * (trial % 2 == 0 ? 1.0 : -1.0);
        const double r1 = quantization::quantized_resistance(1, q).resistance;
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            const double ratio = quantization::quantized_resistance(n, q).resistance / r1;
            if (rel_diff(ratio, static_cast<double>(n)) > 1e-12) {
                c.require(false, "ladder broke at n = " + std::to_string(n));
                break;
            }
        }
    }
    const double rung = quantization::smallest_resistance(1.60218e-19);
    c.require(std::abs(rung - 2.5813e4) / 2.5813e4 <= 1e-3,
              "smallest resistance " + std::to_string(rung) + " not within 0.1% of 2.5813e4");
    c.finish(0.0);
}

// power/energy/current/voltage chain identities
void criterion_5() {
    Criterion c(5, "derivation chain identities hold to 1e-12 on 1000 random inputs");

    const PhysicalConstants pc{};
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> pick_n(1, 1000000);
    std::uniform_real_distribution<double> log_nu(std::log(1.0), std::log(1e15));
    std::uniform_real_distribution<double> log_i(std::log(1e-9), std::log(1e2));
    std::uniform_real_distribution<double> log_t(std::log(1e-6), std::log(1e4));
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t n = pick_n(rng);
        const double nu = std::exp(log_nu(rng));
        const double current = std::exp(log_i(rng));
        const double duration = std::exp(log_t(rng));
        const quantization::DerivationTrace trace =
            quantization::verify_derivation(n, nu, current, duration, pc);

        const double closed_form =
            static_cast<double>(n) * pc.h * nu / (current * current * duration);
        const bool ok =
            rel_diff(trace.power, trace.energy / trace.time) <= 1e-12 &&
            rel_diff(trace.power, trace.current * trace.voltage) <= 1e-12 &&
            rel_diff(trace.power, trace.current * trace.current * trace.resistance) <= 1e-12 &&
            rel_diff(trace.energy,
                     trace.current * trace.current * trace.resistance * trace.time) <= 1e-12 &&
            rel_diff(trace.resistance, closed_form) <= 1e-12;
        if (!ok) {
            c.require(false, "identity failed on trial " + std::to_string(trial));
            break;
        }
    }
    c.finish(0.0);
}

// device model: zero-flux identity, worked example, saturation signalling
void criterion_6() {
    Criterion c(6, "memristance identities and saturation error");

    synapse::MemristorState state{100.0, synapse::BiasSign::Positive, 50.0, 1.0, 0.0};
    c.require(synapse::memristance(state) == 100.0, "zero-flux memristance is not R0");

    state.flux = 50.0;
    c.require(rel_diff(synapse::memristance(state), 100.0 * std::sqrt(0.5)) <= 1e-12,
              "worked example does not give 100*sqrt(0.5)");

    state.flux = 150.0;  // past the domain boundary at flux = 100
    bool saturated = false;
    try {
        synapse::memristance(state);
    } catch (const synapse::SaturationError&) {
        saturated = true;
    }
    c.require(saturated, "out-of-domain flux did not raise the saturation error");
    c.finish(0.0);
}

// plasticity rule: antisymmetry, no-op, unit delay, order independence
void criterion_7() {
    Criterion c(7, "STDP antisymmetry, sgn(0) no-op, mu/e delay, order independence");

    const synapse::StdpParams params{0.1, 0.01};
    std::mt19937_64 rng(1618);
    std::uniform_real_distribution<double> uni(-0.05, 0.05);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = uni(rng);
        const double b = uni(rng);
        if (synapse::stdp_delta({a, b}, params) != -synapse::stdp_delta({b, a}, params)) {
            c.require(false, "antisymmetry failed");
            break;
        }
    }

    c.require(synapse::stdp_delta({0.003, 0.003}, params) == 0.0,
              "simultaneous spikes did not give zero delta");

    const double unit_delay = synapse::stdp_delta({params.tau_d, 0.0}, params);
    c.require(rel_diff(unit_delay, params.mu * std::exp(-1.0)) <= 1e-12,
              "unit-delay magnitude is not mu/e");

    std::vector<synapse::SpikePair> pairs(100);
    std::uniform_real_distribution<double> times(0.0, 0.1);
    for (auto& pair : pairs) {
        pair = {times(rng), times(rng)};
    }
    const auto final_weight = [&](const std::vector<synapse::SpikePair>& sequence) {
        synapse::SynapseWeight w{0.5};
        for (const auto& pair : sequence) {
            w = synapse::apply_stdp(w, pair, params);
        }
        return w.w;
    };
    const double baseline = final_weight(pairs);
    std::vector<synapse::SpikePair> shuffled = pairs;
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (rel_diff(final_weight(shuffled), baseline) > 1e-12) {
            c.require(false, "weight depends on event order");
            break;
        }
    }
    c.finish(0.0);
}

// byte-identical output across repeated identical invocations
void criterion_8() {
    Criterion c(8, "every subcommand is byte-deterministic across repeated runs");

    std::ofstream(g_scratch / "det_pairs.csv") << "0.005,0\n0.001,0.004\n0.02,0.02\n";
    const std::vector<std::pair<std::string, std::vector<std::string>>> invocations{
        {"planck --output " + scratch("det_p.csv"),
         {"det_p_T4500.csv", "det_p_T6000.csv", "det_p_T7500.csv"}},
        {"planck --format json --output " + scratch("det_p.json"), {"det_p.json"}},
        {"planck --format svg --output " + scratch("det_p.svg"), {"det_p.svg"}},
        {"spike-train --output " + scratch("det_t.csv"), {"det_t.csv"}},
        {"spike-train --format svg --output " + scratch("det_t.svg"), {"det_t.svg"}},
        {"quantize --format json --output " + scratch("det_q.json"), {"det_q.json"}},
        {"quantize --output " + scratch("det_q.csv"), {"det_q.csv"}},
        {"stdp --pairs " + scratch("det_pairs.csv") + " --w0 0.5 --output " + scratch("det_s.csv"),
         {"det_s.csv"}},
        {"evaluate --output " + scratch("det_e.json"), {"det_e.json"}},
    };

    for (const auto& [args, files] : invocations) {
        if (run_cli(args) < 0) {
            c.require(false, "run failed: " + args);
            continue;
        }
        std::vector<std::string> first;
        first.reserve(files.size());
        for (const std::string& name : files) {
            first.push_back(read_file(g_scratch / name));
            if (first.back().empty()) {
                c.require(false, "no output produced for " + name);
            }
        }
        if (run_cli(args) < 0) {
            c.require(false, "second run failed: " + args);
            continue;
        }
        for (std::size_t i = 0; i < files.size(); ++i) {
            if (read_file(g_scratch / files[i]) != first[i]) {
                c.require(false, "output differs between runs: " + files[i]);
            }
        }
    }
    c.finish(0.0);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_scratch = fs::current_path() / "acceptance_scratch";
    fs::remove_all(g_scratch);
    fs::create_directories(g_scratch);

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (g_failed == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failed << " criterion(s) failed\n";
    return 1;
}
