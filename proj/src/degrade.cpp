/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/degrade.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "barkit/rng.hpp"

namespace barkit {

DegradationSpec DegradationSpec::dark(double lo, double hi) {
    return {Degradation::Dark, {lo, hi}, {}};
}
DegradationSpec DegradationSpec::occluded(double max_area_frac) {
    return {Degradation::Occluded, {0.0, max_area_frac}, {}};
}
DegradationSpec DegradationSpec::rpt(double theta_lo, double theta_hi, double jitter_frac) {
    return {Degradation::Rpt, {theta_lo, theta_hi}, {0.0, jitter_frac}};
}
DegradationSpec DegradationSpec::ccw(double lo, double hi) {
    return {Degradation::Ccw, {lo, hi}, {}};
}
DegradationSpec DegradationSpec::blur(double lo, double hi) {
    return {Degradation::Blur, {lo, hi}, {}};
}
DegradationSpec DegradationSpec::noise(double lo, double hi) {
    return {Degradation::Noise, {lo, hi}, {}};
}
DegradationSpec DegradationSpec::overexposed(double lo, double hi) {
    return {Degradation::Overexposed, {lo, hi}, {}};
}
DegradationSpec DegradationSpec::upside_down() { return {Degradation::UpsideDown, {}, {}}; }

std::string kind_name(Degradation kind) {
    switch (kind) {
        case Degradation::Norm: return "norm";
        case Degradation::Dark: return "dark";
        case Degradation::Occluded: return "occluded";
        case Degradation::Rpt: return "rpt";
        case Degradation::Ccw: return "ccw";
        case Degradation::Blur: return "blur";
        case Degradation::Noise: return "noise";
        case Degradation::Overexposed: return "overexposed";
        case Degradation::UpsideDown: return "upside_down";
    }
    throw std::logic_error("kind_name: unknown kind");
}

Degradation parse_kind(const std::string& name) {
    if (name == "norm") return Degradation::Norm;
    if (name == "dark") return Degradation::Dark;
    if (name == "occluded") return Degradation::Occluded;
    if (name == "rpt") return Degradation::Rpt;
    if (name == "ccw") return Degradation::Ccw;
    if (name == "blur") return Degradation::Blur;
    if (name == "noise") return Degradation::Noise;
    if (name == "overexposed") return Degradation::Overexposed;
    if (name == "upside_down") return Degradation::UpsideDown;
    throw std::invalid_argument("unknown degradation kind: " + name);
}

namespace {

Image scale_luminance(const Image& img, double factor) {
    ImageF f = to_float(img) * static_cast<float>(factor);
    return to_u8(f);
}

Image apply_noise(const Image& img, Rng& rng, double sigma) {
    ImageF f = to_float(img);
    for (Eigen::Index r = 0; r < f.rows(); ++r)
        for (Eigen::Index c = 0; c < f.cols(); ++c)
            f(r, c) += static_cast<float>(rng.normal(0.0, sigma));
    return to_u8(f);
}

Image apply_blur(const Image& img, double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<float> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
        kernel[i + radius] = static_cast<float>(v);
        sum += v;
    }
    for (auto& k : kernel) k = static_cast<float>(k / sum);

    const Eigen::Index h = img.rows(), w = img.cols();
    ImageF src = to_float(img);
    ImageF tmp(h, w);
    for (Eigen::Index r = 0; r < h; ++r) {
        for (Eigen::Index c = 0; c < w; ++c) {
            float acc = 0.f;
            for (int k = -radius; k <= radius; ++k) {
                const Eigen::Index cc = std::clamp<Eigen::Index>(c + k, 0, w - 1);
                acc += kernel[k + radius] * src(r, cc);
            }
            tmp(r, c) = acc;
        }
    }
    ImageF dst(h, w);
    for (Eigen::Index r = 0; r < h; ++r) {
        for (Eigen::Index c = 0; c < w; ++c) {
            float acc = 0.f;
            for (int k = -radius; k <= radius; ++k) {
                const Eigen::Index rr = std::clamp<Eigen::Index>(r + k, 0, h - 1);
                acc += kernel[k + radius] * tmp(rr, c);
            }
            dst(r, c) = acc;
        }
    }
    return to_u8(dst);
}

struct Box {
    Eigen::Index r0, c0, rows, cols;
};

// Bounding box of dark pixels; falls back to the whole image when blank.
Box bar_region(const Image& img) {
    Eigen::Index rmin = img.rows(), rmax = -1, cmin = img.cols(), cmax = -1;
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            if (img(r, c) <= 127) {
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
                cmin = std::min(cmin, c);
                cmax = std::max(cmax, c);
            }
        }
    }
    if (rmax < 0) return {0, 0, img.rows(), img.cols()};
    return {rmin, cmin, rmax - rmin + 1, cmax - cmin + 1};
}

Image apply_occlusion(const Image& img, Rng& rng, double max_area_frac) {
    const Box region = bar_region(img);
    Image out = img;
    const int count = static_cast<int>(rng.uniform_int(1, 3));
    const double area_budget = max_area_frac * static_cast<double>(region.rows * region.cols);
    double area_used = 0.0;
    for (int i = 0; i < count; ++i) {
        double wfrac = rng.uniform(0.10, 0.40);
        double hfrac = rng.uniform(0.15, 0.60);
        const double x_rel = rng.uniform();
        const double y_rel = rng.uniform();
        const int gray = static_cast<int>(rng.uniform_int(0, 255));

        double rw = wfrac * static_cast<double>(region.cols);
        double rh = hfrac * static_cast<double>(region.rows);
        const double remaining = area_budget - area_used;
        if (remaining <= 0.0) break;
        if (rw * rh > remaining) {
            const double shrink = std::sqrt(remaining / (rw * rh));
            rw *= shrink;
            rh *= shrink;
        }
        const auto rcols = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(rw));
        const auto rrows = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(rh));
        const auto c0 =
            region.c0 + static_cast<Eigen::Index>(x_rel * static_cast<double>(region.cols - rcols));
        const auto r0 =
            region.r0 + static_cast<Eigen::Index>(y_rel * static_cast<double>(region.rows - rrows));
        out.block(std::max<Eigen::Index>(0, r0), std::max<Eigen::Index>(0, c0),
                  std::min(rrows, out.rows() - r0), std::min(rcols, out.cols() - c0))
            .setConstant(static_cast<std::uint8_t>(gray));
        area_used += static_cast<double>(rcols * rrows);
    }
    return out;
}

float sample_bilinear(const ImageF& img, double x, double y) {
    // White fill outside the frame (barcode-on-paper prior).
    const auto h = img.rows(), w = img.cols();
    const double fx = std::floor(x), fy = std::floor(y);
    const auto x0 = static_cast<Eigen::Index>(fx), y0 = static_cast<Eigen::Index>(fy);
    const double ax = x - fx, ay = y - fy;
    auto at = [&](Eigen::Index r, Eigen::Index c) -> double {
        if (r < 0 || r >= h || c < 0 || c >= w) return 255.0;
        return img(r, c);
    };
    const double top = (1.0 - ax) * at(y0, x0) + ax * at(y0, x0 + 1);
    const double bot = (1.0 - ax) * at(y0 + 1, x0) + ax * at(y0 + 1, x0 + 1);
    return static_cast<float>((1.0 - ay) * top + ay * bot);
}

// Homography mapping the unit corner set `from` onto `to` (direct linear
// transform, 8 unknowns).
Eigen::Matrix3d homography_from_corners(const std::array<Eigen::Vector2d, 4>& from,
                                        const std::array<Eigen::Vector2d, 4>& to) {
    Eigen::Matrix<double, 8, 8> A = Eigen::Matrix<double, 8, 8>::Zero();
    Eigen::Matrix<double, 8, 1> rhs;
    for (int i = 0; i < 4; ++i) {
        const double x = from[i].x(), y = from[i].y();
        const double u = to[i].x(), v = to[i].y();
        A.row(2 * i) << x, y, 1, 0, 0, 0, -x * u, -y * u;
        A.row(2 * i + 1) << 0, 0, 0, x, y, 1, -x * v, -y * v;
        rhs(2 * i) = u;
        rhs(2 * i + 1) = v;
    }
    const Eigen::Matrix<double, 8, 1> h = A.colPivHouseholderQr().solve(rhs);
    Eigen::Matrix3d H;
    H << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), 1.0;
    return H;
}

Image apply_rpt(const Image& img, Rng& rng, const Range& theta_range, double jitter_frac) {
    const double theta_deg = rng.uniform(theta_range.lo, theta_range.hi);
    const double side = static_cast<double>(std::max(img.rows(), img.cols()));
    std::array<Eigen::Vector2d, 4> corners = {
        Eigen::Vector2d(0, 0),
        Eigen::Vector2d(static_cast<double>(img.cols() - 1), 0),
        Eigen::Vector2d(static_cast<double>(img.cols() - 1), static_cast<double>(img.rows() - 1)),
        Eigen::Vector2d(0, static_cast<double>(img.rows() - 1)),
    };
    std::array<Eigen::Vector2d, 4> jittered = corners;
    bool any_jitter = false;
    for (auto& p : jittered) {
        const double dx = rng.uniform(-jitter_frac, jitter_frac) * side;
        const double dy = rng.uniform(-jitter_frac, jitter_frac) * side;
        p.x() += dx;
        p.y() += dy;
        any_jitter = any_jitter || dx != 0.0 || dy != 0.0;
    }

    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    if (theta_deg != 0.0) {
        const double t = theta_deg * std::numbers::pi / 180.0;
        const double cx = (static_cast<double>(img.cols()) - 1.0) / 2.0;
        const double cy = (static_cast<double>(img.rows()) - 1.0) / 2.0;
        Eigen::Matrix3d shift_in = Eigen::Matrix3d::Identity();
        shift_in(0, 2) = -cx;
        shift_in(1, 2) = -cy;
        Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
        rot(0, 0) = std::cos(t);
        rot(0, 1) = -std::sin(t);
        rot(1, 0) = std::sin(t);
        rot(1, 1) = std::cos(t);
        Eigen::Matrix3d shift_out = Eigen::Matrix3d::Identity();
        shift_out(0, 2) = cx;
        shift_out(1, 2) = cy;
        rotation = shift_out * rot * shift_in;
    }
    Eigen::Matrix3d perspective = Eigen::Matrix3d::Identity();
    if (any_jitter) perspective = homography_from_corners(corners, jittered);

    if (theta_deg == 0.0 && !any_jitter) return img;  // exact identity

    const Eigen::Matrix3d inverse = (perspective * rotation).inverse();
    const ImageF src = to_float(img);
    ImageF dst(img.rows(), img.cols());
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            const Eigen::Vector3d p =
                inverse * Eigen::Vector3d(static_cast<double>(c), static_cast<double>(r), 1.0);
            dst(r, c) = sample_bilinear(src, p.x() / p.z(), p.y() / p.z());
        }
    }
    return to_u8(dst);
}

Image apply_ccw(const Image& img, Rng& rng, const Range& amp_range) {
    const double amplitude = rng.uniform(amp_range.lo, amp_range.hi) * static_cast<double>(img.cols());
    const double cx = (static_cast<double>(img.cols()) - 1.0) / 2.0;
    const double half = std::max(1.0, cx);
    const ImageF src = to_float(img);
    ImageF dst(img.rows(), img.cols());
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
        const double u = (static_cast<double>(c) - cx) / half;  // [-1, 1]
        const double sx = static_cast<double>(c) + amplitude * std::sin(std::numbers::pi * u);
        for (Eigen::Index r = 0; r < img.rows(); ++r)
            dst(r, c) = sample_bilinear(src, sx, static_cast<double>(r));
    }
    return to_u8(dst);
}

}  // namespace

Image degrade(const Image& img, const DegradationSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    switch (spec.kind) {
        case Degradation::Norm:
            return img;
        case Degradation::Dark:
            return scale_luminance(img, rng.uniform(spec.a.lo, spec.a.hi));
        case Degradation::Occluded:
            return apply_occlusion(img, rng, spec.a.hi);
        case Degradation::Rpt:
            return apply_rpt(img, rng, spec.a, spec.b.hi);
        case Degradation::Ccw:
            return apply_ccw(img, rng, spec.a);
        case Degradation::Blur:
            return apply_blur(img, rng.uniform(spec.a.lo, spec.a.hi));
        case Degradation::Noise:
            return apply_noise(img, rng, rng.uniform(spec.a.lo, spec.a.hi));
        case Degradation::Overexposed:
            return scale_luminance(img, rng.uniform(spec.a.lo, spec.a.hi));
        case Degradation::UpsideDown:
            return rotate_exact(img, 180);
    }
    throw std::logic_error("degrade: unknown kind");
}

Image degrade(const Image& img, const std::vector<DegradationSpec>& specs, std::uint64_t seed) {
    Image out = img;
    for (std::size_t i = 0; i < specs.size(); ++i)
        out = degrade(out, specs[i], mix64(seed, i + 1));
    return out;
}

std::vector<DegradationSpec> parse_conditions(const std::string& combo) {
    std::vector<DegradationSpec> specs;
    std::stringstream ss(combo);
    std::string token;
    while (std::getline(ss, token, '+')) {
        // trim surrounding whitespace
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        token = token.substr(begin, end - begin + 1);
        if (token == "norm")
            specs.push_back(DegradationSpec::norm());
        else if (token == "dark")
            specs.push_back(DegradationSpec::dark());
        else if (token == "occluded")
            specs.push_back(DegradationSpec::occluded());
        else if (token == "rpt" || token == "rotated")
            specs.push_back(DegradationSpec::rpt());
        else if (token == "ccw")
            specs.push_back(DegradationSpec::ccw());
        else if (token == "blur")
            specs.push_back(DegradationSpec::blur());
        else if (token == "noise")
            specs.push_back(DegradationSpec::noise());
        else if (token == "heavy_noise")
            specs.push_back(DegradationSpec::noise(25.0, 25.0));
        else if (token == "overexposed")
            specs.push_back(DegradationSpec::overexposed());
        else if (token == "upside_down")
            specs.push_back(DegradationSpec::upside_down());
        else
            throw std::invalid_argument("unknown condition token: " + token);
    }
    return specs;
}

}  // namespace barkit
