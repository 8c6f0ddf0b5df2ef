/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "barkit/degrade.hpp"
#include "barkit/ean13.hpp"
#include "barkit/image.hpp"
#include "barkit/render.hpp"
#include "barkit/rng.hpp"

namespace barkit {

/// One generated specimen. The image is reproducible bit-exactly from
/// (truth, conditions, orientation, seed).
struct Sample {
    std::string id;
    Image image;
    DigitSequence truth;
    std::string preset;  // condition combo name, e.g. "occluded+dark"
    std::vector<DegradationSpec> conditions;
    int orientation = 0;  // extra whole-image rotation applied after the conditions
    std::uint64_t seed = 0;
};

struct ManifestEntry {
    std::string preset;
    std::int64_t count = 0;
};
using Manifest = std::vector<ManifestEntry>;

/// The 21 synthesis presets with their full-size sample counts (250k total);
/// counts are scaled and rounded per entry.
Manifest table1_manifest(double scale = 1.0);

struct GenerateOpts {
    RenderOpts render{};
    /// Rotate sample i by 90*(i % 4) degrees after degradation, cycling
    /// through the four orientations in equal shares.
    bool mix_orientations = false;
    int threads = 1;
};

/// Checksum-valid sequence from 12 uniform digits plus the computed check digit.
DigitSequence random_valid_sequence(Rng& rng);

/// Deterministic corpus: per-sample seed = mix64(base_seed, entry index,
/// sample index), so parallel and serial runs produce identical output.
std::vector<Sample> generate_dataset(const Manifest& manifest, std::uint64_t base_seed,
                                     const GenerateOpts& opts = {});

/// Writes img/<id>.pgm files plus a samples.ndjson metadata index.
void write_dataset(const std::vector<Sample>& samples, const std::filesystem::path& dir);

/// Reads a samples.ndjson index (and the PGM files it references).
std::vector<Sample> load_dataset(const std::filesystem::path& ndjson_path);

}  // namespace barkit
