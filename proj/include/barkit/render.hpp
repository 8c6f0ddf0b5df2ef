/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "barkit/ean13.hpp"
#include "barkit/image.hpp"

namespace barkit {

struct RenderOpts {
    int module_width = 2;  // pixels per module
    int bar_height = 140;
    int quiet_zone = 12;  // white margin either side of the stripes
    int canvas = 285;     // square output size
};

class CanvasTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Draws the pattern centered on a white canvas, black where modules are 1.
/// Deterministic. Throws CanvasTooSmall if 95*module_width + 2*quiet_zone or
/// bar_height exceeds the canvas.
Image render(const BarPattern& pattern, const RenderOpts& opts = {});

}  // namespace barkit
