/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/scanline_decoder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace barkit {

namespace {

constexpr int kLeftCellStart = 3;    // module index of the first left cell
constexpr int kRightCellStart = 50;  // module index of the first right cell

// Known-module probes used to lock scale and offset: two quiet-zone margins
// around the outer guards plus the guards themselves.
struct Probe {
    double module;  // module index, sampled at module center (+0.5)
    double value;   // expected normalized darkness
};

constexpr std::array<Probe, 15> kGuardProbes = {{
    {-2, 0}, {-1, 0}, {0, 1}, {1, 0}, {2, 1},          // quiet + start guard
    {45, 0}, {46, 1}, {47, 0}, {48, 1}, {49, 0},       // center guard
    {92, 1}, {93, 0}, {94, 1}, {95, 0}, {96, 0},       // end guard + quiet
}};

constexpr std::array<Probe, 5> kStartProbes = {{{-2, 0}, {-1, 0}, {0, 1}, {1, 0}, {2, 1}}};
constexpr std::array<Probe, 5> kCenterProbes = {{{45, 0}, {46, 1}, {47, 0}, {48, 1}, {49, 0}}};
constexpr std::array<Probe, 5> kEndProbes = {{{92, 1}, {93, 0}, {94, 1}, {95, 0}, {96, 0}}};

double interp(const std::vector<double>& row, double x) {
    if (x <= 0.0) return row.front();
    const double last = static_cast<double>(row.size() - 1);
    if (x >= last) return row.back();
    const double fx = std::floor(x);
    const auto i = static_cast<std::size_t>(fx);
    const double a = x - fx;
    return (1.0 - a) * row[i] + a * row[i + 1];
}

template <std::size_t N>
double probe_correlation(const std::vector<double>& row, const std::array<Probe, N>& probes,
                         double x0, double module_width, double shift) {
    double sv = 0, st = 0, svv = 0, stt = 0, svt = 0;
    for (const auto& p : probes) {
        const double v = interp(row, x0 + (p.module + 0.5) * module_width + shift);
        sv += v;
        st += p.value;
        svv += v * v;
        stt += p.value * p.value;
        svt += v * p.value;
    }
    const double n = static_cast<double>(N);
    const double cov = svt - sv * st / n;
    const double var_v = svv - sv * sv / n;
    const double var_t = stt - st * st / n;
    if (var_v <= 1e-12 || var_t <= 1e-12) return 0.0;
    return cov / std::sqrt(var_v * var_t);
}

struct CellDistances {
    // Mean squared distance to each applicable template; right cells leave
    // the G slot unused.
    std::array<double, kNumValues> l{};
    std::array<double, kNumValues> g{};
    std::array<double, kNumValues> r{};
    double best = 1.0;
};

struct ScanlineRead {
    bool ok = false;
    std::array<CellDistances, 12> cells;
};

double template_distance(const std::array<double, 7>& values, std::string_view code) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) {
        const double diff = values[j] - (code[j] == '1' ? 1.0 : 0.0);
        acc += diff * diff;
    }
    return acc / 7.0;
}

// Quadratic through the three guard anchors; maps module index to pixel.
struct AnchorMap {
    double as, ac, ae;  // anchor module positions
    double ps, pc, pe;  // anchor pixel positions

    double operator()(double m) const {
        const double w0 = (m - ac) * (m - ae) / ((as - ac) * (as - ae));
        const double w1 = (m - as) * (m - ae) / ((ac - as) * (ac - ae));
        const double w2 = (m - as) * (m - ac) / ((ae - as) * (ae - ac));
        return w0 * ps + w1 * pc + w2 * pe;
    }
};

ScanlineRead read_scanline(const Image& img, Eigen::Index y, const SoftDecoderConfig& cfg) {
    ScanlineRead read;
    const auto w = img.cols();
    if (w < 95) return read;

    std::vector<double> dark(static_cast<std::size_t>(w));
    for (Eigen::Index x = 0; x < w; ++x) dark[x] = (255.0 - img(y, x)) / 255.0;

    // Span detection on a lightly smoothed copy.
    std::vector<double> smooth(dark.size());
    smooth.front() = dark.front();
    smooth.back() = dark.back();
    for (std::size_t x = 1; x + 1 < dark.size(); ++x)
        smooth[x] = (dark[x - 1] + dark[x] + dark[x + 1]) / 3.0;
    const auto [mn_it, mx_it] = std::minmax_element(smooth.begin(), smooth.end());
    if (*mx_it - *mn_it < 0.08) return read;
    const double threshold = (*mn_it + *mx_it) / 2.0;
    std::size_t first = smooth.size(), last = 0;
    for (std::size_t x = 0; x < smooth.size(); ++x) {
        if (smooth[x] >= threshold) {
            if (first == smooth.size()) first = x;
            last = x;
        }
    }
    if (first == smooth.size()) return read;
    const double span = static_cast<double>(last - first + 1);
    const double width0 = span / static_cast<double>(kNumModules);
    if (width0 < 1.2 || width0 > 8.0) return read;

    // Robust darkness normalization over the span, so dark or overexposed
    // frames still land on 0..1 templates.
    std::vector<double> inside(dark.begin() + first, dark.begin() + last + 1);
    std::sort(inside.begin(), inside.end());
    const double p10 = inside[static_cast<std::size_t>(0.10 * (inside.size() - 1))];
    const double p90 = inside[static_cast<std::size_t>(0.90 * (inside.size() - 1))];
    if (p90 - p10 < 0.05) return read;
    std::vector<double> norm(dark.size());
    for (std::size_t x = 0; x < dark.size(); ++x)
        norm[x] = std::clamp((dark[x] - p10) / (p90 - p10), 0.0, 1.0);

    // Affine fit: sweep scale and offset, maximize guard correlation.
    double best_corr = -1.0, best_scale = width0, best_x0 = static_cast<double>(first);
    for (int si = 0; si < 13; ++si) {
        const double scale = width0 * (0.94 + 0.01 * si);
        for (int oi = 0; oi < 17; ++oi) {
            const double x0 = static_cast<double>(first) + width0 * (-2.0 + 0.25 * oi);
            const double corr = probe_correlation(norm, kGuardProbes, x0, scale, 0.0);
            if (corr > best_corr) {
                best_corr = corr;
                best_scale = scale;
                best_x0 = x0;
            }
        }
    }
    if (best_corr < cfg.min_guard_corr) return read;

    // Re-anchor each guard; tolerates mild nonlinear warp.
    auto refine = [&](const auto& probes, double anchor_module) {
        double best_shift = 0.0, best = -2.0;
        for (int i = 0; i < 25; ++i) {
            const double shift = best_scale * (-3.0 + 0.25 * i);
            const double corr = probe_correlation(norm, probes, best_x0, best_scale, shift);
            if (corr > best) {
                best = corr;
                best_shift = shift;
            }
        }
        return best_x0 + (anchor_module + 0.5) * best_scale + best_shift;
    };
    const AnchorMap map{1.0, 47.0, 93.0, refine(kStartProbes, 1.0), refine(kCenterProbes, 47.0),
                        refine(kEndProbes, 93.0)};
    if (map.pc - map.ps < 30.0 * best_scale || map.pe - map.pc < 30.0 * best_scale) return read;

    // Score the twelve cells, each with a local offset search.
    double total_best = 0.0;
    for (int cell = 0; cell < 12; ++cell) {
        const bool left = cell < 6;
        const int m0 = left ? kLeftCellStart + 7 * cell : kRightCellStart + 7 * (cell - 6);
        CellDistances best_cell;
        for (int oi = 0; oi < 13; ++oi) {
            const double shift = best_scale * (-1.5 + 0.25 * oi);
            std::array<double, 7> values;
            for (int j = 0; j < 7; ++j) {
                const double m = static_cast<double>(m0 + j);
                values[j] = (interp(norm, map(m + 0.25) + shift) + interp(norm, map(m + 0.5) + shift) +
                             interp(norm, map(m + 0.75) + shift)) /
                            3.0;
            }
            CellDistances cd;
            cd.best = 2.0;
            for (int d = 0; d < kNumValues; ++d) {
                if (left) {
                    cd.l[d] = template_distance(values, l_codes()[d]);
                    cd.g[d] = template_distance(values, g_codes()[d]);
                    cd.best = std::min({cd.best, cd.l[d], cd.g[d]});
                } else {
                    cd.r[d] = template_distance(values, r_codes()[d]);
                    cd.best = std::min(cd.best, cd.r[d]);
                }
            }
            if (cd.best < best_cell.best) best_cell = cd;
        }
        read.cells[cell] = best_cell;
        total_best += best_cell.best;
    }
    if (total_best / 12.0 > cfg.max_mean_cell_distance) return read;

    read.ok = true;
    return read;
}

double logsumexp10(const std::array<double, kNumValues>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    double s = 0.0;
    for (const double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

}  // namespace

LogitMatrix decode_soft(const Image& img, const SoftDecoderConfig& cfg) {
    LogitMatrix logits = LogitMatrix::Zero();
    if (img.rows() < 1 || img.cols() < 1 || cfg.scanlines < 1) return logits;

    const double band = std::clamp(cfg.band, 0.0, 1.0);
    const double y_lo = (1.0 - band) / 2.0 * static_cast<double>(img.rows() - 1);
    const double y_hi = (1.0 + band) / 2.0 * static_cast<double>(img.rows() - 1);

    int accepted = 0;
    for (int s = 0; s < cfg.scanlines; ++s) {
        const double frac =
            cfg.scanlines == 1 ? 0.5 : static_cast<double>(s) / static_cast<double>(cfg.scanlines - 1);
        const auto y = static_cast<Eigen::Index>(std::lround(y_lo + frac * (y_hi - y_lo)));
        const ScanlineRead read = read_scanline(img, y, cfg);
        if (!read.ok) continue;
        ++accepted;

        // Digit rows 2..13 from their cells.
        for (int cell = 0; cell < 12; ++cell) {
            const auto& cd = read.cells[cell];
            for (int d = 0; d < kNumValues; ++d) {
                const double dist = cell < 6 ? std::min(cd.l[d], cd.g[d]) : cd.r[d];
                logits(cell + 1, d) += -cfg.beta * dist;
            }
        }
        // Leading digit from the parity posterior of the left half.
        for (int f = 0; f < kNumValues; ++f) {
            const std::string_view parity = parity_patterns()[f];
            double score = 0.0;
            for (int cell = 0; cell < 6; ++cell) {
                const auto& cd = read.cells[cell];
                std::array<double, kNumValues> cand;
                for (int d = 0; d < kNumValues; ++d)
                    cand[d] = -cfg.beta * (parity[cell] == 'L' ? cd.l[d] : cd.g[d]);
                score += logsumexp10(cand);
            }
            logits(0, f) += score;
        }
    }
    if (accepted == 0) return LogitMatrix::Zero();
    return logits / static_cast<double>(accepted);
}

LogitSource soft_decoder_source(const SoftDecoderConfig& cfg) {
    return [cfg](const Image& img) { return decode_soft(img, cfg); };
}

}  // namespace barkit
