#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cgrminer/analyzer.hpp"
#include "cgrminer/errors.hpp"

namespace cgrminer {

struct BoxStats {
    double minimum = 0.0;
    double lower_whisker = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double upper_whisker = 0.0;
    double maximum = 0.0;
    std::vector<double> outliers;
    std::size_t count = 0;
};

/// Quantile with linear interpolation between order statistics: the value at
/// fractional rank p * (n - 1) of the sorted sample.
inline double quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty())
        throw SchemaError("quantile of an empty sample");
    if (sorted.size() == 1)
        return sorted.front();
    double pos = p * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

inline BoxStats box_stats(std::vector<double> samples) {
    if (samples.empty())
        throw SchemaError("box statistics need at least one sample");
    std::sort(samples.begin(), samples.end());
    BoxStats stats;
    stats.count = samples.size();
    stats.minimum = samples.front();
    stats.maximum = samples.back();
    stats.q1 = quantile(samples, 0.25);
    stats.median = quantile(samples, 0.5);
    stats.q3 = quantile(samples, 0.75);
    double iqr = stats.q3 - stats.q1;
    double low_fence = stats.q1 - 1.5 * iqr;
    double high_fence = stats.q3 + 1.5 * iqr;
    stats.lower_whisker = stats.maximum;
    stats.upper_whisker = stats.minimum;
    for (double v : samples) {
        if (v < low_fence || v > high_fence) {
            stats.outliers.push_back(v);
        } else {
            stats.lower_whisker = std::min(stats.lower_whisker, v);
            stats.upper_whisker = std::max(stats.upper_whisker, v);
        }
    }
    return stats;
}

namespace detail {

inline std::string svg_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

} // namespace detail

/// Renders one box per analysis level from the per-sequence frequency samples
/// of `report`. The y axis is the fixed [0, 1] frequency range.
inline std::string box_plot_svg(const AnalysisReport& report,
                                const std::string& title = "Refactoring frequency by level") {
    std::map<int, std::vector<double>> samples;
    for (const SequenceFrequency& s : report.sequence_frequencies)
        samples[s.level].push_back(s.frequency);
    if (samples.empty())
        throw SchemaError("no per-sequence frequency samples to plot");

    const int width = 640;
    const int height = 420;
    const int left = 70, right = 30, top = 50, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto y_of = [&](double v) { return top + (1.0 - v) * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";
    out += "<text x=\"" + std::to_string(width / 2) + "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"15\" text-anchor=\"middle\">" +
           detail::xml_escape(title) + "</text>\n";

    for (int tick = 0; tick <= 4; ++tick) {
        double v = tick / 4.0;
        double y = y_of(v);
        out += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + detail::svg_num(y) +
               "\" x2=\"" + std::to_string(width - right) + "\" y2=\"" + detail::svg_num(y) +
               "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + std::to_string(left - 8) + "\" y=\"" + detail::svg_num(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               detail::svg_num(v) + "</text>\n";
    }
    out += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(top) + "\" x2=\"" +
           std::to_string(left) + "\" y2=\"" + std::to_string(height - bottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(height - bottom) +
           "\" x2=\"" + std::to_string(width - right) + "\" y2=\"" +
           std::to_string(height - bottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    double slot = plot_w / static_cast<double>(samples.size());
    double box_w = std::min(60.0, slot * 0.5);
    std::size_t index = 0;
    for (const auto& [level, values] : samples) {
        BoxStats stats = box_stats(values);
        double cx = left + slot * (static_cast<double>(index) + 0.5);
        double x0 = cx - box_w / 2.0;
        double x1 = cx + box_w / 2.0;

        out += "<line x1=\"" + detail::svg_num(cx) + "\" y1=\"" +
               detail::svg_num(y_of(stats.lower_whisker)) + "\" x2=\"" + detail::svg_num(cx) +
               "\" y2=\"" + detail::svg_num(y_of(stats.q1)) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out += "<line x1=\"" + detail::svg_num(cx) + "\" y1=\"" +
               detail::svg_num(y_of(stats.q3)) + "\" x2=\"" + detail::svg_num(cx) + "\" y2=\"" +
               detail::svg_num(y_of(stats.upper_whisker)) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (double w : {stats.lower_whisker, stats.upper_whisker}) {
            out += "<line x1=\"" + detail::svg_num(cx - box_w / 4.0) + "\" y1=\"" +
                   detail::svg_num(y_of(w)) + "\" x2=\"" + detail::svg_num(cx + box_w / 4.0) +
                   "\" y2=\"" + detail::svg_num(y_of(w)) +
                   "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
        out += "<rect x=\"" + detail::svg_num(x0) + "\" y=\"" + detail::svg_num(y_of(stats.q3)) +
               "\" width=\"" + detail::svg_num(x1 - x0) + "\" height=\"" +
               detail::svg_num(y_of(stats.q1) - y_of(stats.q3)) +
               "\" fill=\"#9ecae1\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out += "<line x1=\"" + detail::svg_num(x0) + "\" y1=\"" +
               detail::svg_num(y_of(stats.median)) + "\" x2=\"" + detail::svg_num(x1) +
               "\" y2=\"" + detail::svg_num(y_of(stats.median)) +
               "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (double o : stats.outliers) {
            out += "<circle cx=\"" + detail::svg_num(cx) + "\" cy=\"" +
                   detail::svg_num(y_of(o)) +
                   "\" r=\"2.5\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
        out += "<text x=\"" + detail::svg_num(cx) + "\" y=\"" +
               std::to_string(height - bottom + 18) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">level " +
               std::to_string(level) + " (n=" + std::to_string(stats.count) + ")</text>\n";
        ++index;
    }
    out += "<text x=\"16\" y=\"" + std::to_string(top + static_cast<int>(plot_h / 2)) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " +
           std::to_string(top + static_cast<int>(plot_h / 2)) + ")\">frequency</text>\n";
    out += "</svg>\n";
    return out;
}

} // namespace cgrminer
