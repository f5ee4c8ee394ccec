#include "qneuron/spiketrain.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "../oracle/listing_oracle.hpp"
#include "test_util.hpp"

using namespace qneuron;
using namespace qneuron::spiketrain;
using testutil::is_unimodal;
using testutil::rel_diff;

namespace {
std::vector<double> segment_values(const SpikeTrain& train, std::size_t index) {
    const Segment& segment = train.segments.at(index);
    return {train.potentials.begin() + static_cast<std::ptrdiff_t>(segment.start),
            train.potentials.begin() +
                static_cast<std::ptrdiff_t>(segment.start + segment.length)};
}
}  // namespace

TEST_CASE("wavelength maps to time by dividing out the speed of light") {
    CHECK(wavelength_to_time(0.0) == 0.0);
    // published grid bounds, quoted to five significant figures
    CHECK(rel_diff(wavelength_to_time(1e-9), 3.3357e-18) <= 5e-5);
    CHECK(rel_diff(wavelength_to_time(10e-9), 3.3357e-17) <= 5e-5);
    CHECK_THROWS_AS(wavelength_to_time(-1e-9), std::domain_error);
}

TEST_CASE("intensity maps to potential by area over current") {
    CHECK(intensity_to_potential(0.0, {3.0, 7.0}) == 0.0);
    CHECK(intensity_to_potential(123.456, {1.0, 1.0}) == 123.456);
    CHECK(intensity_to_potential(2.0, {3.0, 6.0}) == 1.0);
    CHECK_THROWS_AS(intensity_to_potential(1.0, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(intensity_to_potential(1.0, {1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("default train structure: zero block plus seven segments") {
    const TrainConfig config{};
    const SpikeTrain train = generate_train(config);

    CHECK(train.potentials.size() == 2400);
    CHECK(train.prefix_length == 300);
    REQUIRE(train.segments.size() == 7);
    for (std::size_t i = 0; i < train.prefix_length; ++i) {
        CHECK(train.potentials[i] == 0.0);
    }
    for (std::size_t s = 0; s < train.segments.size(); ++s) {
        CHECK(train.segments[s].start == 300 * (s + 1));
        CHECK(train.segments[s].length == 300);
        CHECK(train.segments[s].temperature == 4500.0 + 500.0 * static_cast<double>(s));
    }
    CHECK(train.sample_period == wavelength_to_time(config.grid.step));
}

TEST_CASE("train samples reproduce the transcription oracle") {
    const TrainConfig config{};
    const SpikeTrain train = generate_train(config);
    const std::vector<double> expected = oracle::spike_train(
        config.grid.start, config.grid.step, config.grid.count, config.temperatures);
    REQUIRE(train.potentials.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(rel_diff(train.potentials[i], expected[i]) <= 1e-12);
    }
}

TEST_CASE("minimal config gives a two-sample train") {
    TrainConfig config;
    config.grid = {500e-9, 10e-9, 1};
    config.temperatures = {6000.0};
    const SpikeTrain train = generate_train(config);
    REQUIRE(train.potentials.size() == 2);
    CHECK(train.potentials[0] == 0.0);
    CHECK(train.potentials[1] ==
          intensity_to_potential(planck::energy_density(500e-9, 6000.0), config.transform));
}

TEST_CASE("segments are unimodal with peaks rising in temperature") {
    const SpikeTrain train = generate_train(TrainConfig{});
    double previous_peak = -1.0;
    for (std::size_t s = 0; s < train.segments.size(); ++s) {
        const std::vector<double> segment = segment_values(train, s);
        CHECK(is_unimodal(segment));
        const double peak = *std::max_element(segment.begin(), segment.end());
        CHECK(peak > previous_peak);
        previous_peak = peak;
    }
}

TEST_CASE("area-over-current rescales the train uniformly") {
    TrainConfig config{};
    const SpikeTrain baseline = generate_train(config);
    config.transform = {5.0, 2.0};  // area/current = 2.5
    const SpikeTrain scaled = generate_train(config);
    REQUIRE(scaled.potentials.size() == baseline.potentials.size());
    for (std::size_t i = 0; i < baseline.potentials.size(); ++i) {
        CHECK(scaled.potentials[i] == 2.5 * baseline.potentials[i]);
    }
    // argmax of every segment is untouched by the scaling
    for (std::size_t s = 0; s < baseline.segments.size(); ++s) {
        const std::vector<double> a = segment_values(baseline, s);
        const std::vector<double> b = segment_values(scaled, s);
        CHECK(std::max_element(a.begin(), a.end()) - a.begin() ==
              std::max_element(b.begin(), b.end()) - b.begin());
    }
}

TEST_CASE("train times form an arithmetic progression from t0") {
    SpikeTrain train;
    train.sample_period = 3.3357e-17;
    train.potentials.assign(300, 0.0);
    const std::vector<double> times = train_times(train, 3.3357e-18);
    REQUIRE(times.size() == 300);
    CHECK(times.front() == 3.3357e-18);
    CHECK(rel_diff(times.back(), 9.977e-15) <= 1e-4);
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        CHECK(times[i + 1] > times[i]);
        CHECK(rel_diff(times[i + 1] - times[i], train.sample_period) <= 1e-12);
    }

    CHECK(train_times(SpikeTrain{}, 0.0).empty());
    CHECK_THROWS_AS(train_times(train, -1.0), std::invalid_argument);
}

TEST_CASE("segment times line up with the wavelengths that produced them") {
    const TrainConfig config{};
    const double t0 = wavelength_to_time(config.grid.start);
    const double period = wavelength_to_time(config.grid.step);
    for (std::size_t i = 0; i < config.grid.count; ++i) {
        const double from_wavelength = wavelength_to_time(config.grid.wavelength_at(i));
        const double from_period = t0 + static_cast<double>(i) * period;
        CHECK(rel_diff(from_wavelength, from_period) <= 1e-12);
    }
}

TEST_CASE("segment accumulation") {
    SpikeTrain train;
    train.sample_period = 1.0;
    train.potentials = {0.0, 0.0, 0.0, 5.0};
    train.prefix_length = 3;
    train.segments = {{0, 3, 4500.0}, {3, 1, 4500.0}};
    CHECK(segment_accumulation(train, 0) == 0.0);    // all-zero block sums to zero
    CHECK(segment_accumulation(train, 1) == 5.0);    // single-sample segment
    CHECK_THROWS_AS(segment_accumulation(train, 2), std::out_of_range);

    // hotter segments accumulate more potential
    const SpikeTrain generated = generate_train(TrainConfig{});
    double previous = -1.0;
    for (std::size_t s = 0; s < generated.segments.size(); ++s) {
        const double sum = segment_accumulation(generated, s);
        CHECK(sum > previous);
        previous = sum;
    }
}

TEST_CASE("train generation is deterministic") {
    const SpikeTrain a = generate_train(TrainConfig{});
    const SpikeTrain b = generate_train(TrainConfig{});
    CHECK(a.potentials == b.potentials);
    CHECK(a.sample_period == b.sample_period);
}

TEST_CASE("train config validation") {
    TrainConfig config{};
    config.temperatures = {};
    CHECK_THROWS_AS(generate_train(config), std::invalid_argument);
    config.temperatures = {-4500.0};
    CHECK_THROWS_AS(generate_train(config), std::invalid_argument);
    config = TrainConfig{};
    config.grid.count = 0;
    CHECK_THROWS_AS(generate_train(config), std::invalid_argument);
    config = TrainConfig{};
    config.transform.area = 0.0;
    CHECK_THROWS_AS(generate_train(config), std::invalid_argument);
}
