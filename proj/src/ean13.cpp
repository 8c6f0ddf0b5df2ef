/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "barkit/ean13.hpp"

#include <algorithm>

namespace barkit {

namespace {

// GS1 General Specifications, EAN-13 character set tables.
constexpr std::array<std::string_view, 10> kLCodes = {
    "0001101", "0011001", "0010011", "0111101", "0100011",
    "0110001", "0101111", "0111011", "0110111", "0001011",
};

constexpr std::array<std::string_view, 10> kGCodes = {
    "0100111", "0110011", "0011011", "0100001", "0011101",
    "0111001", "0000101", "0010001", "0001001", "0010111",
};

constexpr std::array<std::string_view, 10> kRCodes = {
    "1110010", "1100110", "1101100", "1000010", "1011100",
    "1001110", "1010000", "1000100", "1001000", "1110100",
};

// Parity of the six left-half cells selects the (implied) leading digit.
constexpr std::array<std::string_view, 10> kParity = {
    "LLLLLL", "LLGLGG", "LLGGLG", "LLGGGL", "LGLLGG",
    "LGGLLG", "LGGGLL", "LGLGLG", "LGLGGL", "LGGLGL",
};

constexpr std::string_view kStartGuard = "101";
constexpr std::string_view kCenterGuard = "01010";
constexpr std::string_view kEndGuard = "101";

void write_bits(BarPattern& pat, int offset, std::string_view bits) {
    for (std::size_t i = 0; i < bits.size(); ++i)
        pat.modules[offset + i] = bits[i] == '1' ? 1 : 0;
}

bool match_bits(const BarPattern& pat, int offset, std::string_view bits) {
    for (std::size_t i = 0; i < bits.size(); ++i)
        if ((pat.modules[offset + i] != 0) != (bits[i] == '1')) return false;
    return true;
}

}  // namespace

const std::array<std::string_view, 10>& l_codes() { return kLCodes; }
const std::array<std::string_view, 10>& g_codes() { return kGCodes; }
const std::array<std::string_view, 10>& r_codes() { return kRCodes; }
const std::array<std::string_view, 10>& parity_patterns() { return kParity; }

std::string DigitSequence::to_string() const {
    std::string out(kNumDigits, '0');
    for (int i = 0; i < kNumDigits; ++i) out[i] = static_cast<char>('0' + digits[i]);
    return out;
}

DigitSequence DigitSequence::from_string(std::string_view text) {
    if (text.size() != kNumDigits)
        throw std::invalid_argument("digit sequence must be exactly 13 characters");
    DigitSequence seq;
    for (int i = 0; i < kNumDigits; ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("digit sequence must contain only ASCII digits");
        seq.digits[i] = static_cast<std::uint8_t>(c - '0');
    }
    return seq;
}

bool validate_checksum(const DigitSequence& seq) {
    // Weight 1 on the rightmost digit, then alternating 3,1 leftward.
    int sum = 0;
    for (int i = 0; i < kNumDigits; ++i) {
        const int weight = ((kNumDigits - 1 - i) % 2 == 0) ? 1 : 3;
        sum += weight * seq.digits[i];
    }
    return sum % 10 == 0;
}

int compute_check_digit(const std::array<std::uint8_t, 12>& prefix) {
    int sum = 0;
    for (int i = 0; i < 12; ++i) {
        const int weight = ((12 - 1 - i) % 2 == 0) ? 3 : 1;
        sum += weight * prefix[i];
    }
    return (10 - sum % 10) % 10;
}

std::string BarPattern::to_string() const {
    std::string out(kNumModules, '0');
    for (int i = 0; i < kNumModules; ++i) out[i] = modules[i] ? '1' : '0';
    return out;
}

BarPattern BarPattern::from_string(std::string_view text) {
    if (text.size() != kNumModules)
        throw std::invalid_argument("bar pattern must be exactly 95 characters");
    BarPattern pat;
    for (int i = 0; i < kNumModules; ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw std::invalid_argument("bar pattern must contain only '0'/'1'");
        pat.modules[i] = text[i] == '1' ? 1 : 0;
    }
    return pat;
}

BarPattern encode(const DigitSequence& seq) {
    BarPattern pat;
    write_bits(pat, 0, kStartGuard);
    const std::string_view parity = kParity[seq.digits[0]];
    for (int cell = 0; cell < 6; ++cell) {
        const int d = seq.digits[cell + 1];
        const std::string_view code = parity[cell] == 'L' ? kLCodes[d] : kGCodes[d];
        write_bits(pat, 3 + 7 * cell, code);
    }
    write_bits(pat, 45, kCenterGuard);
    for (int cell = 0; cell < 6; ++cell)
        write_bits(pat, 50 + 7 * cell, kRCodes[seq.digits[cell + 7]]);
    write_bits(pat, 92, kEndGuard);
    return pat;
}

DigitSequence decode_exact(const BarPattern& pat) {
    if (!match_bits(pat, 0, kStartGuard) || !match_bits(pat, 45, kCenterGuard) ||
        !match_bits(pat, 92, kEndGuard))
        throw MalformedPattern("guard pattern violated");

    DigitSequence seq;
    std::string parity(6, '?');
    for (int cell = 0; cell < 6; ++cell) {
        const int offset = 3 + 7 * cell;
        int found = -1;
        for (int d = 0; d < 10; ++d) {
            if (match_bits(pat, offset, kLCodes[d])) {
                found = d;
                parity[cell] = 'L';
                break;
            }
            if (match_bits(pat, offset, kGCodes[d])) {
                found = d;
                parity[cell] = 'G';
                break;
            }
        }
        if (found < 0) throw MalformedPattern("left cell matches no L/G code");
        seq.digits[cell + 1] = static_cast<std::uint8_t>(found);
    }

    const auto it = std::find(kParity.begin(), kParity.end(), parity);
    if (it == kParity.end()) throw MalformedPattern("parity pattern matches no leading digit");
    seq.digits[0] = static_cast<std::uint8_t>(it - kParity.begin());

    for (int cell = 0; cell < 6; ++cell) {
        const int offset = 50 + 7 * cell;
        int found = -1;
        for (int d = 0; d < 10; ++d) {
            if (match_bits(pat, offset, kRCodes[d])) {
                found = d;
                break;
            }
        }
        if (found < 0) throw MalformedPattern("right cell matches no R code");
        seq.digits[cell + 7] = static_cast<std::uint8_t>(found);
    }
    return seq;
}

}  // namespace barkit
