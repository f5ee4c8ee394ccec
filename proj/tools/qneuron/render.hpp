#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qneuron::cli {

// Raised on filesystem failures; the driver maps it to exit code 3.
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips the exact binary value. Every number in
// CSV/JSON/SVG output goes through here (or nlohmann's equivalent) so that
// identical invocations produce byte-identical files.
std::string format_double(double value);

// Writes content verbatim (binary mode, LF endings). Throws IoFailure.
void write_file(const std::string& path, const std::string& content);

// "stem_suffix.ext"; appends the suffix when the path has no extension.
std::string with_suffix(const std::string& path, const std::string& suffix);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

// Minimal hand-rolled polyline plot: axes, tick labels, legend. Advisory
// output only; CSV/JSON carry the authoritative numbers.
std::string render_svg(const PlotSpec& spec);

}  // namespace qneuron::cli
