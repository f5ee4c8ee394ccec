#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qneuron/constants.hpp"
#include "qneuron/evaluation.hpp"
#include "qneuron/planck.hpp"
#include "qneuron/quantization.hpp"
#include "qneuron/spiketrain.hpp"
#include "qneuron/synapse.hpp"
#include "render.hpp"

namespace {

using nlohmann::json;
using namespace qneuron;
using cli::format_double;
using cli::IoFailure;
using cli::with_suffix;
using cli::write_file;

constexpr int exit_ok = 0;
constexpr int exit_below_threshold = 1;
constexpr int exit_validation = 2;
constexpr int exit_io = 3;

const std::map<std::string, planck::Variant> variant_names{
    {"radiance", planck::Variant::Radiance},
    {"energy_density", planck::Variant::EnergyDensity}};

std::string variant_name(planck::Variant variant) {
    return variant == planck::Variant::Radiance ? "radiance" : "energy_density";
}

std::string resolve_output(const std::string& output, const std::string& base,
                           const std::string& format) {
    return output.empty() ? base + "." + format : output;
}

std::string trim(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const std::size_t last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

// Flat key=value file mirroring the subcommand's long option names. Values
// fill in only where the command line did not: flags > file > defaults.
void apply_config_file(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open config file: " + path);
    }
    std::set<std::string> seen;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::string entry = trim(line);
        if (entry.empty() || entry.front() == '#') {
            continue;
        }
        const std::string where = "config file line " + std::to_string(line_number);
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(where + ": expected key=value");
        }
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        CLI::Option* option =
            key == "config" ? nullptr : cmd->get_option_no_throw("--" + key);
        if (option == nullptr) {
            throw std::invalid_argument(where + ": unknown key \"" + key + "\"");
        }
        if (!seen.insert(key).second) {
            throw std::invalid_argument(where + ": duplicate key \"" + key + "\"");
        }
        if (option->count() > 0) {
            continue;  // given on the command line
        }
        try {
            option->add_result(value);
            option->run_callback();
        } catch (const CLI::Error& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
}

json constants_json(const PhysicalConstants& pc) {
    return {{"boltzmann_k", pc.k},
            {"elementary_charge_c", pc.e_charge},
            {"light_speed_c", pc.c},
            {"planck_h", pc.h}};
}

// ---------------------------------------------------------------------------
// planck: sampled spectral curves, one per temperature

struct PlanckOpts {
    std::vector<double> temperatures{4500.0, 6000.0, 7500.0};
    planck::WavelengthGrid grid{};
    planck::Variant variant = planck::Variant::EnergyDensity;
    PhysicalConstants constants{};
    std::string output;
    std::string format = "csv";
};

int run_planck(const PlanckOpts& opts) {
    std::vector<planck::PlanckCurve> curves;
    curves.reserve(opts.temperatures.size());
    for (double temperature : opts.temperatures) {
        curves.push_back(
            planck::sample_curve(opts.grid, temperature, opts.variant, opts.constants));
    }
    const std::string out = resolve_output(opts.output, "planck", opts.format);

    if (opts.format == "csv") {
        for (const auto& curve : curves) {
            std::string body = "wavelength_m,intensity\n";
            for (std::size_t i = 0; i < curve.values.size(); ++i) {
                body += format_double(opts.grid.wavelength_at(i));
                body += ',';
                body += format_double(curve.values[i]);
                body += '\n';
            }
            const std::string path =
                curves.size() == 1
                    ? out
                    : with_suffix(out, "_T" + format_double(curve.temperature));
            write_file(path, body);
        }
        return exit_ok;
    }

    if (opts.format == "json") {
        std::vector<double> wavelengths;
        wavelengths.reserve(opts.grid.count);
        for (std::size_t i = 0; i < opts.grid.count; ++i) {
            wavelengths.push_back(opts.grid.wavelength_at(i));
        }
        json doc;
        doc["config"] = {{"constants", constants_json(opts.constants)},
                         {"count", opts.grid.count},
                         {"format", opts.format},
                         {"lambda_start_m", opts.grid.start},
                         {"lambda_step_m", opts.grid.step},
                         {"output", out},
                         {"temperatures_k", opts.temperatures},
                         {"variant", variant_name(opts.variant)}};
        doc["wavelength_m"] = wavelengths;
        json curve_list = json::array();
        for (const auto& curve : curves) {
            curve_list.push_back(
                {{"intensity", curve.values}, {"temperature_k", curve.temperature}});
        }
        doc["curves"] = curve_list;
        write_file(out, doc.dump(2) + "\n");
        return exit_ok;
    }

    cli::PlotSpec plot;
    plot.title = "Wavelength vs intensity";
    plot.x_label = "wavelength (m)";
    plot.y_label = opts.variant == planck::Variant::Radiance
                       ? "radiance (W m^-2 m^-1)"
                       : "energy density (J m^-3 m^-1)";
    for (const auto& curve : curves) {
        cli::Series series;
        series.label = "T = " + format_double(curve.temperature) + " K";
        for (std::size_t i = 0; i < curve.values.size(); ++i) {
            series.x.push_back(opts.grid.wavelength_at(i));
            series.y.push_back(curve.values[i]);
        }
        plot.series.push_back(std::move(series));
    }
    write_file(out, cli::render_svg(plot));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// spike-train: zero prefix plus one transformed segment per temperature

struct SpikeTrainOpts {
    spiketrain::TrainConfig config{};
    PhysicalConstants constants{};
    std::string output;
    std::string format = "csv";
};

int run_spike_train(const SpikeTrainOpts& opts) {
    const spiketrain::SpikeTrain train = spiketrain::generate_train(opts.config, opts.constants);
    const double t0 = spiketrain::wavelength_to_time(opts.config.grid.start, opts.constants);
    const std::vector<double> times = spiketrain::train_times(train, t0);
    const std::string out = resolve_output(opts.output, "spike_train", opts.format);

    // 0 marks the zero prefix; segments are numbered from 1 in train order.
    std::vector<std::size_t> segment_ids(train.potentials.size(), 0);
    for (std::size_t s = 0; s < train.segments.size(); ++s) {
        const auto& segment = train.segments[s];
        for (std::size_t i = segment.start; i < segment.start + segment.length; ++i) {
            segment_ids[i] = s + 1;
        }
    }

    const json config_echo = {{"area_m2", opts.config.transform.area},
                              {"constants", constants_json(opts.constants)},
                              {"count", opts.config.grid.count},
                              {"current_a", opts.config.transform.current},
                              {"format", opts.format},
                              {"lambda_start_m", opts.config.grid.start},
                              {"lambda_step_m", opts.config.grid.step},
                              {"output", out},
                              {"temperatures_k", opts.config.temperatures},
                              {"variant", variant_name(opts.config.variant)}};

    if (opts.format == "csv") {
        std::string body = "time_s,potential_v,segment_id\n";
        for (std::size_t i = 0; i < train.potentials.size(); ++i) {
            body += format_double(times[i]);
            body += ',';
            body += format_double(train.potentials[i]);
            body += ',';
            body += std::to_string(segment_ids[i]);
            body += '\n';
        }
        write_file(out, body);
        return exit_ok;
    }

    if (opts.format == "json") {
        json segments = json::array();
        for (const auto& segment : train.segments) {
            segments.push_back({{"length", segment.length},
                                {"start", segment.start},
                                {"temperature_k", segment.temperature}});
        }
        json doc;
        doc["config"] = config_echo;
        doc["train"] = {{"potential_v", train.potentials},
                        {"prefix_length", train.prefix_length},
                        {"sample_period_s", train.sample_period},
                        {"segment_id", segment_ids},
                        {"segments", segments},
                        {"time_s", times}};
        write_file(out, doc.dump(2) + "\n");
        return exit_ok;
    }

    cli::PlotSpec plot;
    plot.title = "Generated spike train";
    plot.x_label = "time (s)";
    plot.y_label = "potential (V)";
    cli::Series series;
    series.x = times;
    series.y = train.potentials;
    plot.series.push_back(std::move(series));
    write_file(out, cli::render_svg(plot));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// quantize: resistance ladder rungs plus the tyke potential

struct QuantizeOpts {
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 5;
    double charge = PhysicalConstants{}.e_charge;
    double current = 1e-9;
    PhysicalConstants constants{};
    std::string output;
    std::string format = "csv";
};

int run_quantize(const QuantizeOpts& opts) {
    if (opts.n_min < 1 || opts.n_max < opts.n_min) {
        throw std::invalid_argument("quantize: need 1 <= n-min <= n-max");
    }
    if (opts.n_max - opts.n_min >= 1000000) {
        throw std::invalid_argument("quantize: n range too large (max 10^6 rows)");
    }
    const double tyke =
        quantization::tyke_potential(opts.current, opts.charge, opts.constants).potential;
    std::vector<std::uint64_t> rungs;
    std::vector<double> resistances;
    for (std::uint64_t n = opts.n_min; n <= opts.n_max; ++n) {
        rungs.push_back(n);
        resistances.push_back(
            quantization::quantized_resistance(n, opts.charge, opts.constants).resistance);
    }
    const std::string out = resolve_output(opts.output, "quantize", opts.format);

    if (opts.format == "csv") {
        std::string body = "n,resistance_ohm,tyke_potential_v\n";
        for (std::size_t i = 0; i < rungs.size(); ++i) {
            body += std::to_string(rungs[i]);
            body += ',';
            body += format_double(resistances[i]);
            body += ',';
            body += format_double(tyke);
            body += '\n';
        }
        write_file(out, body);
        return exit_ok;
    }

    if (opts.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < rungs.size(); ++i) {
            rows.push_back({{"n", rungs[i]},
                            {"resistance_ohm", resistances[i]},
                            {"tyke_potential_v", tyke}});
        }
        json doc;
        doc["config"] = {{"charge_c", opts.charge},
                         {"constants", constants_json(opts.constants)},
                         {"current_a", opts.current},
                         {"format", opts.format},
                         {"n_max", opts.n_max},
                         {"n_min", opts.n_min},
                         {"output", out}};
        doc["rows"] = rows;
        write_file(out, doc.dump(2) + "\n");
        return exit_ok;
    }

    cli::PlotSpec plot;
    plot.title = "Quantized resistance ladder";
    plot.x_label = "n";
    plot.y_label = "resistance (ohm)";
    cli::Series series;
    series.label = "n*h/Q^2";
    for (std::size_t i = 0; i < rungs.size(); ++i) {
        series.x.push_back(static_cast<double>(rungs[i]));
        series.y.push_back(resistances[i]);
    }
    plot.series.push_back(std::move(series));
    write_file(out, cli::render_svg(plot));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// stdp: replay a spike-pair file through the weight update

struct StdpOpts {
    std::string pairs_path;
    synapse::StdpParams params{0.1, 0.01};
    double w0 = 0.0;
    std::string output;
    std::string format = "csv";
};

std::vector<synapse::SpikePair> read_pairs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open pairs file: " + path);
    }
    std::vector<synapse::SpikePair> pairs;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line_number == 1 && line == "t_post_s,t_pre_s") {
            continue;  // optional header
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("pairs file line " + std::to_string(line_number) +
                                        ": expected t_post_s,t_pre_s");
        }
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            const std::string left = line.substr(0, comma);
            const std::string right = line.substr(comma + 1);
            const double t_post = std::stod(left, &used_a);
            const double t_pre = std::stod(right, &used_b);
            if (used_a != left.size() || used_b != right.size()) {
                throw std::invalid_argument("trailing characters");
            }
            pairs.push_back({t_post, t_pre});
        } catch (const std::exception&) {
            throw std::invalid_argument("pairs file line " + std::to_string(line_number) +
                                        ": cannot parse \"" + line + "\"");
        }
    }
    return pairs;
}

int run_stdp(const StdpOpts& opts) {
    const std::vector<synapse::SpikePair> pairs = read_pairs(opts.pairs_path);

    struct Event {
        synapse::SpikePair pair;
        double delta = 0.0;
        double weight = 0.0;
    };
    std::vector<Event> events;
    events.reserve(pairs.size());
    synapse::SynapseWeight w{opts.w0};
    for (const auto& pair : pairs) {
        const double delta = synapse::stdp_delta(pair, opts.params);
        w = synapse::apply_stdp(w, pair, opts.params);
        events.push_back({pair, delta, w.w});
    }
    const std::string out = resolve_output(opts.output, "stdp", opts.format);

    if (opts.format == "csv") {
        // event 0 is the initial state; its pair and delta columns are zero
        std::string body = "event,t_post_s,t_pre_s,delta_w,weight\n";
        body += "0,0,0,0," + format_double(opts.w0) + "\n";
        for (std::size_t i = 0; i < events.size(); ++i) {
            body += std::to_string(i + 1);
            body += ',';
            body += format_double(events[i].pair.t_post);
            body += ',';
            body += format_double(events[i].pair.t_pre);
            body += ',';
            body += format_double(events[i].delta);
            body += ',';
            body += format_double(events[i].weight);
            body += '\n';
        }
        write_file(out, body);
        return exit_ok;
    }

    if (opts.format == "json") {
        json event_list = json::array();
        for (std::size_t i = 0; i < events.size(); ++i) {
            event_list.push_back({{"delta_w", events[i].delta},
                                  {"event", i + 1},
                                  {"t_post_s", events[i].pair.t_post},
                                  {"t_pre_s", events[i].pair.t_pre},
                                  {"weight", events[i].weight}});
        }
        json doc;
        doc["config"] = {{"format", opts.format},
                         {"mu", opts.params.mu},
                         {"output", out},
                         {"pairs", opts.pairs_path},
                         {"tau_d_s", opts.params.tau_d},
                         {"w0", opts.w0}};
        doc["events"] = event_list;
        doc["final_weight"] = w.w;
        write_file(out, doc.dump(2) + "\n");
        return exit_ok;
    }

    cli::PlotSpec plot;
    plot.title = "Synaptic weight trajectory";
    plot.x_label = "event";
    plot.y_label = "weight";
    cli::Series series;
    series.x.push_back(0.0);
    series.y.push_back(opts.w0);
    for (std::size_t i = 0; i < events.size(); ++i) {
        series.x.push_back(static_cast<double>(i + 1));
        series.y.push_back(events[i].weight);
    }
    plot.series.push_back(std::move(series));
    write_file(out, cli::render_svg(plot));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// evaluate: matched-point comparison against the reference route

struct EvaluateOpts {
    evaluation::EvalConfig eval{};
    std::vector<double> temperatures{4500.0};
    spiketrain::TransformParams transform{};
    planck::Variant variant = planck::Variant::EnergyDensity;
    double threshold = 0.97;
    PhysicalConstants constants{};
    std::string output;
    std::string format = "json";
};

int run_evaluate(const EvaluateOpts& opts) {
    spiketrain::TrainConfig train_config{};
    train_config.temperatures = opts.temperatures;
    train_config.transform = opts.transform;
    train_config.variant = opts.variant;
    const evaluation::MatchReport report =
        evaluation::evaluate_model(opts.eval, train_config, opts.constants);
    const std::string out = resolve_output(opts.output, "evaluate", opts.format);

    if (opts.format == "csv") {
        std::string body = "total,matched,fraction,tolerance\n";
        body += std::to_string(report.total) + "," + std::to_string(report.matched) +
                "," + format_double(report.fraction) + "," +
                format_double(report.tolerance) + "\n";
        write_file(out, body);
    } else if (opts.format == "json") {
        json doc;
        doc["config"] = {{"area_m2", opts.transform.area},
                         {"constants", constants_json(opts.constants)},
                         {"current_a", opts.transform.current},
                         {"dt_s", opts.eval.dt},
                         {"format", opts.format},
                         {"output", out},
                         {"t0_s", opts.eval.t0},
                         {"t_max_s", opts.eval.t_max},
                         {"temperatures_k", opts.temperatures},
                         {"threshold", opts.threshold},
                         {"tolerance", opts.eval.tolerance},
                         {"variant", variant_name(opts.variant)}};
        doc["fraction"] = report.fraction;
        doc["matched"] = report.matched;
        doc["tolerance"] = report.tolerance;
        doc["total"] = report.total;
        write_file(out, doc.dump(2) + "\n");
    } else {
        throw std::invalid_argument("evaluate: svg output is not supported");
    }
    return report.fraction >= opts.threshold ? exit_ok : exit_below_threshold;
}

// ---------------------------------------------------------------------------

void add_constants_options(CLI::App* cmd, PhysicalConstants& pc) {
    cmd->add_option("--const-h", pc.h, "Planck constant override (J*s)")
        ->capture_default_str();
    cmd->add_option("--const-c", pc.c, "speed of light override (m/s)")
        ->capture_default_str();
    cmd->add_option("--const-k", pc.k, "Boltzmann constant override (J/K)")
        ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, planck::WavelengthGrid& grid) {
    cmd->add_option("--lambda-start", grid.start, "first wavelength (m)")
        ->capture_default_str();
    cmd->add_option("--lambda-step", grid.step, "wavelength step (m)")
        ->capture_default_str();
    cmd->add_option("--count", grid.count, "samples per curve")
        ->capture_default_str();
}

void add_variant_option(CLI::App* cmd, planck::Variant& variant) {
    cmd->add_option("--variant", variant, "curve variant")
        ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case))
        ->default_str("energy_density");
}

void add_output_options(CLI::App* cmd, std::string& output, std::string& format,
                        std::string& config_path, const std::string& default_format) {
    cmd->add_option("--output", output,
                    "output path (default: <command>.<format>)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->default_str(default_format);
    cmd->add_option("--config", config_path,
                    "read option defaults from a key=value file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized spiking-neuron model: spectral curves, resistance "
                 "quantization, memristive STDP, spike trains, evaluation"};
    app.require_subcommand(1);

    PlanckOpts planck_opts;
    CLI::App* planck_cmd =
        app.add_subcommand("planck", "sample spectral curves, one per temperature");
    planck_cmd->add_option("--temperatures", planck_opts.temperatures, "temperatures (K)")
        ->delimiter(',')
        ->capture_default_str();
    add_grid_options(planck_cmd, planck_opts.grid);
    add_variant_option(planck_cmd, planck_opts.variant);
    add_constants_options(planck_cmd, planck_opts.constants);
    add_output_options(planck_cmd, planck_opts.output, planck_opts.format, "csv");

    SpikeTrainOpts train_opts;
    CLI::App* train_cmd =
        app.add_subcommand("spike-train", "generate the spike train from spectral segments");
    train_cmd->add_option("--temperatures", train_opts.config.temperatures,
                          "segment temperatures (K)")
        ->delimiter(',')
        ->capture_default_str();
    add_grid_options(train_cmd, train_opts.config.grid);
    train_cmd->add_option("--area", train_opts.config.transform.area, "transform area (m^2)")
        ->capture_default_str();
    train_cmd->add_option("--current", train_opts.config.transform.current,
                          "transform current (A)")
        ->capture_default_str();
    add_variant_option(train_cmd, train_opts.config.variant);
    add_constants_options(train_cmd, train_opts.constants);
    add_output_options(train_cmd, train_opts.output, train_opts.format, "csv");

    QuantizeOpts quantize_opts;
    CLI::App* quantize_cmd =
        app.add_subcommand("quantize", "tabulate resistance rungs and the tyke potential");
    quantize_cmd->add_option("--n-min", quantize_opts.n_min, "first quantum number")
        ->capture_default_str();
    quantize_cmd->add_option("--n-max", quantize_opts.n_max, "last quantum number")
        ->capture_default_str();
    quantize_cmd->add_option("--charge", quantize_opts.charge, "charge Q (C)")
        ->capture_default_str();
    quantize_cmd->add_option("--current", quantize_opts.current, "current I (A)")
        ->capture_default_str();
    add_constants_options(quantize_cmd, quantize_opts.constants);
    add_output_options(quantize_cmd, quantize_opts.output, quantize_opts.format, "csv");

    StdpOpts stdp_opts;
    CLI::App* stdp_cmd =
        app.add_subcommand("stdp", "replay a spike-pair file through the weight update");
    stdp_cmd->add_option("--pairs", stdp_opts.pairs_path,
                         "CSV file of t_post_s,t_pre_s rows")
        ->required();
    stdp_cmd->add_option("--mu", stdp_opts.params.mu, "learning rate")
        ->capture_default_str();
    stdp_cmd->add_option("--tau-d", stdp_opts.params.tau_d, "reference delay (s)")
        ->capture_default_str();
    stdp_cmd->add_option("--w0", stdp_opts.w0, "initial weight")
        ->capture_default_str();
    add_output_options(stdp_cmd, stdp_opts.output, stdp_opts.format, "csv");

    EvaluateOpts eval_opts;
    CLI::App* eval_cmd =
        app.add_subcommand("evaluate", "matched-point comparison against the reference route");
    eval_cmd->add_option("--t0", eval_opts.eval.t0, "grid start time (s)")
        ->capture_default_str();
    eval_cmd->add_option("--t-max", eval_opts.eval.t_max, "grid end time (s)")
        ->capture_default_str();
    eval_cmd->add_option("--dt", eval_opts.eval.dt, "grid step (s)")
        ->capture_default_str();
    eval_cmd->add_option("--tolerance", eval_opts.eval.tolerance, "relative match tolerance")
        ->capture_default_str();
    eval_cmd->add_option("--threshold", eval_opts.threshold,
                         "minimum passing match fraction")
        ->capture_default_str();
    eval_cmd->add_option("--temperatures", eval_opts.temperatures, "temperatures (K)")
        ->delimiter(',')
        ->capture_default_str();
    eval_cmd->add_option("--area", eval_opts.transform.area, "transform area (m^2)")
        ->capture_default_str();
    eval_cmd->add_option("--current", eval_opts.transform.current, "transform current (A)")
        ->capture_default_str();
    add_variant_option(eval_cmd, eval_opts.variant);
    add_constants_options(eval_cmd, eval_opts.constants);
    add_output_options(eval_cmd, eval_opts.output, eval_opts.format, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (planck_cmd->parsed()) return run_planck(planck_opts);
        if (train_cmd->parsed()) return run_spike_train(train_opts);
        if (quantize_cmd->parsed()) return run_quantize(quantize_opts);
        if (stdp_cmd->parsed()) return run_stdp(stdp_opts);
        if (eval_cmd->parsed()) return run_evaluate(eval_opts);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_ok;
}
