/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/render.hpp"

namespace barkit {

Image render(const BarPattern& pattern, const RenderOpts& opts) {
    if (opts.module_width < 2) throw std::invalid_argument("render: module_width must be >= 2");
    const int stripes_width = kNumModules * opts.module_width;
    if (stripes_width + 2 * opts.quiet_zone > opts.canvas || opts.bar_height > opts.canvas)
        throw CanvasTooSmall("render: barcode does not fit the canvas");

    Image img = Image::Constant(opts.canvas, opts.canvas, 255);
    const int x0 = (opts.canvas - stripes_width) / 2;
    const int y0 = (opts.canvas - opts.bar_height) / 2;
    for (int m = 0; m < kNumModules; ++m) {
        if (!pattern.modules[m]) continue;
        const int xs = x0 + m * opts.module_width;
        img.block(y0, xs, opts.bar_height, opts.module_width).setZero();
    }
    return img;
}

}  // namespace barkit
