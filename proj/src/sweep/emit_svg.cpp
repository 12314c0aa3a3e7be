// SPDX-License-Identifier: Apache-2.0
//
// corrbound - eigenvalue bounds for exponential-model spatial correlation matrices
// Copyright (C) 2026 The corrbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Minimal SVG line chart. All coordinates are printed with fixed precision
// so identical rows give identical bytes.

#include "corrbound/error.hpp"
#include "corrbound/format.hpp"
#include "corrbound/sweep.hpp"
#include "write_file.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

namespace corrbound {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 300.0; // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

struct Curve {
    const char* label;
    const char* dash; // empty for solid
    std::function<double(const SweepRow&)> value;
};

struct Series {
    std::string label;
    std::string color;
    std::string dash;
    std::vector<std::pair<double, double>> points; // (x, value)
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

std::vector<Curve> curves_for(SweepMode mode)
{
    if (mode == SweepMode::ula_min)
        return {
            {"lambda_min exact", "", [](const SweepRow& r) { return r.lambda_min; }},
            {"(1-a)/(1+a)", "8 4", [](const SweepRow& r) { return r.min_lower_prev; }},
            {"(1-a)/(1+a) + 2a(1-(-a)^N)/(N(1+a)^2)", "2 3", [](const SweepRow& r) { return r.min_upper_new; }},
        };
    return {
        {"lambda_max exact", "", [](const SweepRow& r) { return r.lambda_max; }},
        {"(1+a)/(1-a)", "8 4", [](const SweepRow& r) { return r.upper_prev; }},
        {"(1+a)(1-a^(N-1))/(1-a)", "4 2", [](const SweepRow& r) { return r.upper_new; }},
        {"(1+a)/(1-a) - 2a(1-a^N)/(N(1-a)^2)", "2 3", [](const SweepRow& r) { return r.lower_new; }},
    };
}

std::vector<Series> build_series(std::span<const SweepRow> rows, SweepMode mode)
{
    const auto curves = curves_for(mode);
    std::vector<Series> out;

    if (mode == SweepMode::upa_max) {
        for (std::size_t c = 0; c < curves.size(); ++c) {
            Series s;
            s.label = std::string(curves[c].label) + " (products, a_h=" + format_significant(rows.front().a_h) +
                      ", a_v=" + format_significant(rows.front().a_v) + ")";
            s.color = kPalette[c % std::size(kPalette)];
            s.dash = curves[c].dash;
            for (std::size_t i = 0; i < rows.size(); ++i)
                s.points.emplace_back(static_cast<double>(i), curves[c].value(rows[i]));
            out.push_back(std::move(s));
        }
        return out;
    }

    // Group by a in first-appearance order.
    std::vector<double> as;
    for (const auto& r : rows)
        if (std::find(as.begin(), as.end(), r.a) == as.end())
            as.push_back(r.a);
    for (std::size_t g = 0; g < as.size(); ++g) {
        for (const auto& curve : curves) {
            Series s;
            s.label = std::string(curve.label) + ", a=" + format_significant(as[g]);
            s.color = kPalette[g % std::size(kPalette)];
            s.dash = curve.dash;
            for (const auto& r : rows)
                if (r.a == as[g])
                    s.points.emplace_back(static_cast<double>(r.n), curve.value(r));
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace

std::string render_svg(std::span<const SweepRow> rows, SweepMode mode)
{
    if (rows.empty())
        throw_domain("rows", "nothing to plot");

    const std::vector<Series> series = build_series(rows, mode);

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double v_lo = x_lo, v_hi = -x_lo;
    for (const auto& s : series)
        for (const auto& [x, v] : s.points) {
            if (!(v > 0.0) || !std::isfinite(v))
                continue;
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            v_lo = std::min(v_lo, v);
            v_hi = std::max(v_hi, v);
        }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
        v_lo = 1.0;
        v_hi = 10.0;
    }
    if (x_hi == x_lo)
        x_hi = x_lo + 1.0;
    double dec_lo = std::floor(std::log10(v_lo));
    double dec_hi = std::ceil(std::log10(v_hi));
    if (dec_hi <= dec_lo)
        dec_hi = dec_lo + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    const auto py = [&](double v) { return kTop + (dec_hi - std::log10(v)) / (dec_hi - dec_lo) * plot_h; };

    std::string title;
    switch (mode) {
    case SweepMode::ula_min: title = "Minimum eigenvalue and bounds vs N"; break;
    case SweepMode::upa_max: title = "UPA maximum eigenvalue and composed bounds"; break;
    default: title = "Maximum eigenvalue and bounds vs N"; break;
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kLeft) + "\" y=\"22\" font-size=\"14\">" + escape(title) + "</text>\n";

    // Axes and decade grid lines.
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) + "\" height=\"" +
           num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double d = dec_lo; d <= dec_hi; d += 1.0) {
        const double y = py(std::pow(10.0, d));
        out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" +
               num(y) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">1e" +
               std::to_string(static_cast<int>(d)) + "</text>\n";
    }
    if (mode == SweepMode::upa_max) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double x = px(static_cast<double>(i));
            out += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
                   std::to_string(rows[i].n_h) + "x" + std::to_string(rows[i].n_v) + "</text>\n";
        }
        out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
               "\" text-anchor=\"middle\">N_h x N_v</text>\n";
    } else {
        const int ticks = 8;
        for (int t = 0; t <= ticks; ++t) {
            const double xv = x_lo + (x_hi - x_lo) * t / ticks;
            out += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
                   format_significant(std::round(xv * 10.0) / 10.0) + "</text>\n";
        }
        out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
               "\" text-anchor=\"middle\">N (antennas)</text>\n";
    }
    out += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) + "\" transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) +
           ")\" text-anchor=\"middle\">eigenvalue (log scale)</text>\n";

    for (const auto& s : series) {
        std::string pts;
        for (const auto& [x, v] : s.points) {
            if (!(v > 0.0) || !std::isfinite(v))
                continue;
            if (!pts.empty())
                pts += ' ';
            pts += num(px(x)) + "," + num(py(v));
        }
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
        if (!s.dash.empty())
            out += " stroke-dasharray=\"" + s.dash + "\"";
        out += " points=\"" + pts + "\"/>\n";
    }

    // Legend
    double ly = kTop + 4;
    const double lx = kLeft + plot_w + 14;
    for (const auto& s : series) {
        out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
        if (!s.dash.empty())
            out += " stroke-dasharray=\"" + s.dash + "\"";
        out += "/>\n";
        out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\" font-size=\"9\">" + escape(s.label) +
               "</text>\n";
        ly += 14.0;
    }
    out += "</svg>\n";
    return out;
}

void emit_svg(std::span<const SweepRow> rows, SweepMode mode, const std::filesystem::path& path)
{
    detail::write_file_atomic(path, render_svg(rows, mode));
}

} // namespace corrbound
