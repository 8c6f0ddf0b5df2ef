/*
* Copyright 2026 The barkit authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace barkit {

inline constexpr int kNumDigits = 13;
inline constexpr int kNumModules = 95;

/// A 13-digit EAN-13 value, stored left to right (digits[0] is the leading
/// digit). Checksum validity is a predicate, not an invariant: decoders emit
/// invalid candidates and we need to represent them.
struct DigitSequence {
    std::array<std::uint8_t, kNumDigits> digits{};

    bool operator==(const DigitSequence&) const = default;
    auto operator<=>(const DigitSequence&) const = default;

    std::string to_string() const;

    /// Parses exactly 13 ASCII digits, no separators.
    static DigitSequence from_string(std::string_view text);
};

/// Weighted digit sum mod 10 == 0, weights alternating 1,3 from the rightmost
/// digit leftward (so for length 13 the last digit carries weight 1).
bool validate_checksum(const DigitSequence& seq);

/// The unique last digit that makes prefix+digit pass validate_checksum.
int compute_check_digit(const std::array<std::uint8_t, 12>& prefix);

/// The 95-module stripe encoding: 1 = dark bar module, 0 = light.
struct BarPattern {
    std::array<std::uint8_t, kNumModules> modules{};

    bool operator==(const BarPattern&) const = default;

    std::string to_string() const;
    static BarPattern from_string(std::string_view text);
};

class MalformedPattern : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Encodes any 13 digits (checksum validity not required): start guard,
/// digits 2-7 in L/G codes chosen by the parity pattern of digit 1, center
/// guard, digits 8-13 in R codes, end guard.
BarPattern encode(const DigitSequence& seq);

/// Exact inverse of encode. Throws MalformedPattern if a guard is violated or
/// any 7-module cell matches no code table entry.
DigitSequence decode_exact(const BarPattern& pattern);

// GS1 code tables, exposed for the scanline decoder and for structural tests
// (R is the bitwise complement of L, G is the reversal of R).
const std::array<std::string_view, 10>& l_codes();
const std::array<std::string_view, 10>& g_codes();
const std::array<std::string_view, 10>& r_codes();

/// Left-half parity pattern per leading digit, 'L' = odd parity, 'G' = even.
const std::array<std::string_view, 10>& parity_patterns();

}  // namespace barkit
