/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/image.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace barkit {

Image to_u8(const ImageF& img) {
    Image out(img.rows(), img.cols());
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            const float v = std::round(img(r, c));
            out(r, c) = static_cast<std::uint8_t>(v < 0.f ? 0.f : (v > 255.f ? 255.f : v));
        }
    }
    return out;
}

Image rotate_exact(const Image& img, int degrees) {
    const Eigen::Index h = img.rows();
    const Eigen::Index w = img.cols();
    switch (degrees) {
        case 90: {
            Image out(w, h);
            for (Eigen::Index r = 0; r < w; ++r)
                for (Eigen::Index c = 0; c < h; ++c) out(r, c) = img(h - 1 - c, r);
            return out;
        }
        case 180: {
            Image out(h, w);
            for (Eigen::Index r = 0; r < h; ++r)
                for (Eigen::Index c = 0; c < w; ++c) out(r, c) = img(h - 1 - r, w - 1 - c);
            return out;
        }
        case 270: {
            Image out(w, h);
            for (Eigen::Index r = 0; r < w; ++r)
                for (Eigen::Index c = 0; c < h; ++c) out(r, c) = img(c, w - 1 - r);
            return out;
        }
        default:
            throw std::invalid_argument("rotate_exact: degrees must be 90, 180 or 270");
    }
}

void write_pgm(const Image& img, std::ostream& out) {
    out << "P5\n" << img.cols() << " " << img.rows() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data()),
              static_cast<std::streamsize>(img.size()));
    if (!out) throw std::runtime_error("write_pgm: stream write failed");
}

void write_pgm(const Image& img, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_pgm: cannot open " + path.string());
    write_pgm(img, f);
}

namespace {

int read_pgm_token(std::istream& in) {
    // Skips whitespace and '#' comment lines, then reads one decimal number.
    int c = in.peek();
    while (c == '#' || std::isspace(c)) {
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else {
            in.get();
        }
        c = in.peek();
    }
    int value = 0;
    if (!(in >> value)) throw std::runtime_error("read_pgm: malformed header");
    return value;
}

}  // namespace

Image read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5') throw std::runtime_error("read_pgm: not a P5 file");
    const int w = read_pgm_token(in);
    const int h = read_pgm_token(in);
    const int maxval = read_pgm_token(in);
    if (w < 1 || h < 1 || maxval != 255)
        throw std::runtime_error("read_pgm: unsupported dimensions or maxval");
    in.get();  // single whitespace after maxval
    Image img(h, w);
    in.read(reinterpret_cast<char*>(img.data()), static_cast<std::streamsize>(img.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.size()))
        throw std::runtime_error("read_pgm: truncated pixel data");
    return img;
}

Image read_pgm(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_pgm: cannot open " + path.string());
    return read_pgm(f);
}

}  // namespace barkit
