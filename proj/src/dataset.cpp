/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/dataset.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace barkit {

namespace {

using nlohmann::json;

json spec_to_json(const DegradationSpec& spec) {
    return json{{"kind", kind_name(spec.kind)},
                {"a", {spec.a.lo, spec.a.hi}},
                {"b", {spec.b.lo, spec.b.hi}}};
}

DegradationSpec spec_from_json(const json& j) {
    DegradationSpec spec;
    spec.kind = parse_kind(j.at("kind").get<std::string>());
    spec.a = {j.at("a")[0].get<double>(), j.at("a")[1].get<double>()};
    spec.b = {j.at("b")[0].get<double>(), j.at("b")[1].get<double>()};
    return spec;
}

}  // namespace

Manifest table1_manifest(double scale) {
    static const Manifest full = {
        {"norm", 30000},
        {"dark", 30000},
        {"occluded", 20000},
        {"occluded+dark", 20000},
        {"rpt", 20000},
        {"rpt+dark", 20000},
        {"ccw", 20000},
        {"ccw+dark", 20000},
        {"occluded+rpt", 5000},
        {"blur", 5000},
        {"rpt+blur", 5000},
        {"ccw+blur", 5000},
        {"upside_down", 6000},
        {"upside_down+dark", 6000},
        {"upside_down+blur", 6000},
        {"upside_down+ccw", 6000},
        {"upside_down+occluded", 6000},
        {"heavy_noise+rotated", 2000},
        {"overexposed+occluded+rpt+ccw", 6000},
        {"dark+occluded+rpt+ccw", 6000},
        {"occluded+rpt+ccw", 6000},
    };
    Manifest scaled;
    scaled.reserve(full.size());
    for (const auto& entry : full)
        scaled.push_back({entry.preset, std::llround(static_cast<double>(entry.count) * scale)});
    return scaled;
}

DigitSequence random_valid_sequence(Rng& rng) {
    std::array<std::uint8_t, 12> prefix;
    for (auto& d : prefix) d = static_cast<std::uint8_t>(rng.uniform_int(0, 9));
    DigitSequence seq;
    std::copy(prefix.begin(), prefix.end(), seq.digits.begin());
    seq.digits[12] = static_cast<std::uint8_t>(compute_check_digit(prefix));
    return seq;
}

namespace {

Sample make_sample(const ManifestEntry& entry, std::size_t entry_index, std::int64_t sample_index,
                   std::uint64_t base_seed, const GenerateOpts& opts, std::size_t global_index) {
    Sample s;
    s.seed = mix64(base_seed, entry_index, static_cast<std::uint64_t>(sample_index));
    s.preset = entry.preset;
    s.conditions = parse_conditions(entry.preset);
    Rng rng(s.seed);
    s.truth = random_valid_sequence(rng);
    s.image = degrade(render(encode(s.truth), opts.render), s.conditions, s.seed);
    if (opts.mix_orientations) {
        s.orientation = static_cast<int>(global_index % 4) * 90;
        if (s.orientation != 0) s.image = rotate_exact(s.image, s.orientation);
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06zu", global_index);
    s.id = buf;
    return s;
}

}  // namespace

std::vector<Sample> generate_dataset(const Manifest& manifest, std::uint64_t base_seed,
                                     const GenerateOpts& opts) {
    struct Slot {
        std::size_t entry_index;
        std::int64_t sample_index;
    };
    std::vector<Slot> slots;
    for (std::size_t e = 0; e < manifest.size(); ++e) {
        if (manifest[e].count < 0) throw std::invalid_argument("generate_dataset: negative count");
        for (std::int64_t i = 0; i < manifest[e].count; ++i) slots.push_back({e, i});
    }

    std::vector<Sample> samples(slots.size());
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (std::size_t g = 0; g < slots.size(); ++g)
            samples[g] = make_sample(manifest[slots[g].entry_index], slots[g].entry_index,
                                     slots[g].sample_index, base_seed, opts, g);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t g = next.fetch_add(1); g < slots.size(); g = next.fetch_add(1))
                    samples[g] = make_sample(manifest[slots[g].entry_index], slots[g].entry_index,
                                             slots[g].sample_index, base_seed, opts, g);
            });
        }
        for (auto& th : pool) th.join();
    }
    return samples;
}

void write_dataset(const std::vector<Sample>& samples, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir / "img");
    std::ofstream index(dir / "samples.ndjson");
    if (!index) throw std::runtime_error("write_dataset: cannot open index for writing");
    for (const auto& s : samples) {
        const std::string file = "img/" + s.id + ".pgm";
        write_pgm(s.image, dir / file);
        json j{{"id", s.id},
               {"truth", s.truth.to_string()},
               {"preset", s.preset},
               {"seed", s.seed},
               {"orientation", s.orientation},
               {"file", file}};
        json conds = json::array();
        for (const auto& c : s.conditions) conds.push_back(spec_to_json(c));
        j["conditions"] = conds;
        index << j.dump() << "\n";
    }
}

std::vector<Sample> load_dataset(const std::filesystem::path& ndjson_path) {
    std::ifstream in(ndjson_path);
    if (!in) throw std::runtime_error("load_dataset: cannot open " + ndjson_path.string());
    const auto dir = ndjson_path.parent_path();
    std::vector<Sample> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        Sample s;
        s.id = j.at("id").get<std::string>();
        s.truth = DigitSequence::from_string(j.at("truth").get<std::string>());
        s.preset = j.at("preset").get<std::string>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.orientation = j.at("orientation").get<int>();
        for (const auto& c : j.at("conditions")) s.conditions.push_back(spec_from_json(c));
        s.image = read_pgm(dir / j.at("file").get<std::string>());
        samples.push_back(std::move(s));
    }
    return samples;
}

}  // namespace barkit
