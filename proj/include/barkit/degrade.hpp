/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barkit/image.hpp"

namespace barkit {

enum class Degradation {
    Norm,
    Dark,
    Occluded,
    Rpt,  // in-plane rotation + corner perspective jitter
    Ccw,  // horizontal cylindrical warp
    Blur,
    Noise,
    Overexposed,
    UpsideDown,
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// One degradation stage. The parameter ranges are sampled per call from the
/// given seed; the factory defaults below are the calibrated ranges used by
/// the named dataset presets.
struct DegradationSpec {
    Degradation kind = Degradation::Norm;
    Range a{};  // main range: dark factor, blur sigma, noise sigma, gain,
                // ccw amplitude fraction, rpt rotation degrees, occlusion area budget
    Range b{};  // rpt only: corner jitter as a fraction of the side length

    static DegradationSpec norm() { return {}; }
    static DegradationSpec dark(double lo = 0.2, double hi = 0.5);
    static DegradationSpec occluded(double max_area_frac = 0.30);
    static DegradationSpec rpt(double theta_lo = -60.0, double theta_hi = 60.0,
                               double jitter_frac = 0.10);
    static DegradationSpec ccw(double lo = 0.05, double hi = 0.15);
    static DegradationSpec blur(double lo = 1.0, double hi = 3.0);
    static DegradationSpec noise(double lo = 5.0, double hi = 25.0);
    static DegradationSpec overexposed(double lo = 1.6, double hi = 2.4);
    static DegradationSpec upside_down();

    bool operator==(const DegradationSpec&) const = default;
};

std::string kind_name(Degradation kind);
Degradation parse_kind(const std::string& name);

/// Applies one degradation stage. All randomness comes from the seed; equal
/// (img, spec, seed) always yields the identical image.
Image degrade(const Image& img, const DegradationSpec& spec, std::uint64_t seed);

/// Applies a stage list left to right, each stage under its own derived seed.
Image degrade(const Image& img, const std::vector<DegradationSpec>& specs, std::uint64_t seed);

/// Parses a condition combo such as "occluded+rpt+ccw" into its stage list.
/// Tokens: norm, dark, occluded, rpt, ccw, blur, noise, overexposed,
/// upside_down, heavy_noise (noise pinned at the top of its range) and
/// rotated (alias for rpt).
std::vector<DegradationSpec> parse_conditions(const std::string& combo);

}  // namespace barkit
