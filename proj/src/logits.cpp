/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/logits.hpp"

namespace barkit {

ProbMatrix softmax_rows(const LogitMatrix& logits) {
    ProbMatrix probs;
    for (int r = 0; r < kNumDigits; ++r) {
        const Eigen::Array<double, 1, kNumValues> shifted =
            logits.row(r).array() - logits.row(r).maxCoeff();
        const Eigen::Array<double, 1, kNumValues> e = shifted.exp();
        probs.row(r) = e / e.sum();
    }
    return probs;
}

}  // namespace barkit
