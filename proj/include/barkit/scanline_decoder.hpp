/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "barkit/image.hpp"
#include "barkit/logits.hpp"

namespace barkit {

/// Knobs of the template-matching scanline decoder. beta converts template
/// distances to logit scale; the two gates reject scanlines whose guard
/// correlation or cell evidence is too weak to be a real readout (wrong
/// orientations and blank images land there). Defaults are calibrated once
/// against the seeded degraded corpus, see docs/calibration in the README.
struct SoftDecoderConfig {
    int scanlines = 9;        // sampled over the middle band of the image
    double band = 0.6;        // fraction of height covered by the scanlines
    double beta = 40.0;       // logit = -beta * mean squared template distance
    double min_guard_corr = 0.60;
    double max_mean_cell_distance = 0.12;
};

/// Produces per-digit scores for one EAN-13 in the image. Total on any valid
/// image: when no scanline yields a plausible readout the result is the
/// all-zero (uniform) matrix rather than an error.
///
/// Per scanline: estimates the stripe span, fits module width and offset by
/// normalized correlation against the three guards over a scale sweep,
/// re-anchors each guard individually, maps module index to pixel through the
/// three anchors (tolerates mild warp), then scores every 7-module cell
/// against the applicable code templates (L and G left, R right). Logits are
/// averaged over accepted scanlines in scanline order; the leading-digit row
/// is the posterior over the ten parity patterns given the left-half L/G
/// evidence.
LogitMatrix decode_soft(const Image& img, const SoftDecoderConfig& cfg = {});

/// decode_soft wrapped as a LogitSource.
LogitSource soft_decoder_source(const SoftDecoderConfig& cfg = {});

}  // namespace barkit
