/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace barkit {

/// Grayscale raster, rows = height, cols = width, values 0 (black) .. 255.
using Image = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Float working copy of an image, same layout.
using ImageF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline ImageF to_float(const Image& img) { return img.cast<float>(); }

/// Round and clip to [0, 255].
Image to_u8(const ImageF& img);

/// Lossless 90/180/270 degree rotation. The convention is fixed so tests can
/// pin it: rotate(img, 90) moves the left edge to the top (a 2x1 row [a,b]
/// becomes the 1x2 column [a;b]); 180 reverses both axes.
Image rotate_exact(const Image& img, int degrees);

// Binary PGM (P5, maxval 255).
void write_pgm(const Image& img, const std::filesystem::path& path);
void write_pgm(const Image& img, std::ostream& out);
Image read_pgm(const std::filesystem::path& path);
Image read_pgm(std::istream& in);

}  // namespace barkit
