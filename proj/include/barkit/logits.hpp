/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "barkit/ean13.hpp"
#include "barkit/image.hpp"

namespace barkit {

inline constexpr int kNumValues = 10;

/// Per-digit scores: row i column v = unnormalized score that digit i+1 is v.
using LogitMatrix = Eigen::Matrix<double, kNumDigits, kNumValues>;

/// Row-stochastic counterpart of LogitMatrix.
using ProbMatrix = Eigen::Matrix<double, kNumDigits, kNumValues>;

/// Row-wise exp-normalization with max subtraction.
ProbMatrix softmax_rows(const LogitMatrix& logits);

/// Anything that maps an image to per-digit scores: the scanline decoder, a
/// trained model, or replayed external records.
using LogitSource = std::function<LogitMatrix(const Image&)>;

}  // namespace barkit
