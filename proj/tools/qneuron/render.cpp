#include "render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace qneuron::cli {

namespace {

constexpr std::array<const char*, 7> palette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2"};

// Pixel coordinates: two fixed decimals are plenty and keep the text stable.
std::string px(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Series& s : series) {
        for (double v : use_x ? s.x : s.y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!(lo <= hi)) {  // no data at all
        return {0.0, 1.0};
    }
    if (lo == hi) {  // degenerate span: pad so the point is visible
        const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.5;
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 40> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return {buf.data(), ptr};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoFailure("cannot open for writing: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string render_svg(const PlotSpec& spec) {
    constexpr double width = 860.0;
    constexpr double height = 540.0;
    constexpr double margin_left = 90.0;
    constexpr double margin_right = 30.0;
    constexpr double margin_top = 40.0;
    constexpr double margin_bottom = 60.0;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;

    const Range xr = data_range(spec.series, true);
    const Range yr = data_range(spec.series, false);
    const auto map_x = [&](double v) {
        return margin_left + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    const auto map_y = [&](double v) {
        return margin_top + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) +
           "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " +
           px(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + px(width / 2.0) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + spec.title + "</text>\n";

    // axes
    svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(margin_top) +
           "\" x2=\"" + px(margin_left) + "\" y2=\"" + px(margin_top + plot_h) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(margin_top + plot_h) +
           "\" x2=\"" + px(margin_left + plot_w) + "\" y2=\"" + px(margin_top + plot_h) +
           "\" stroke=\"black\"/>\n";

    // ticks and labels
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double f = static_cast<double>(i) / ticks;
        const double xv = xr.lo + f * (xr.hi - xr.lo);
        const double yv = yr.lo + f * (yr.hi - yr.lo);
        const double xp = map_x(xv);
        const double yp = map_y(yv);
        svg += "<line x1=\"" + px(xp) + "\" y1=\"" + px(margin_top + plot_h) +
               "\" x2=\"" + px(xp) + "\" y2=\"" + px(margin_top + plot_h + 5.0) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + px(xp) + "\" y=\"" + px(margin_top + plot_h + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(xv) + "</text>\n";
        svg += "<line x1=\"" + px(margin_left - 5.0) + "\" y1=\"" + px(yp) +
               "\" x2=\"" + px(margin_left) + "\" y2=\"" + px(yp) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + px(margin_left - 8.0) + "\" y=\"" + px(yp + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(yv) + "</text>\n";
    }

    svg += "<text x=\"" + px(margin_left + plot_w / 2.0) + "\" y=\"" +
           px(height - 16.0) + "\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\">" + spec.x_label + "</text>\n";
    svg += "<text x=\"20\" y=\"" + px(margin_top + plot_h / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 " + px(margin_top + plot_h / 2.0) + ")\">" +
           spec.y_label + "</text>\n";

    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const Series& series = spec.series[s];
        const char* color = palette[s % palette.size()];
        std::string points;
        for (std::size_t i = 0; i < series.x.size(); ++i) {
            if (!points.empty()) points += ' ';
            points += px(map_x(series.x[i])) + "," + px(map_y(series.y[i]));
        }
        if (series.x.size() == 1) {
            svg += "<circle cx=\"" + px(map_x(series.x[0])) + "\" cy=\"" +
                   px(map_y(series.y[0])) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
        } else {
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        }
    }

    // legend, top right
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        if (spec.series[s].label.empty()) continue;
        const double ly = margin_top + 14.0 + 18.0 * static_cast<double>(s);
        const char* color = palette[s % palette.size()];
        svg += "<line x1=\"" + px(width - 190.0) + "\" y1=\"" + px(ly - 4.0) +
               "\" x2=\"" + px(width - 160.0) + "\" y2=\"" + px(ly - 4.0) +
               "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + px(width - 152.0) + "\" y=\"" + px(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               spec.series[s].label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace qneuron::cli
