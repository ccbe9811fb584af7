// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace epoch {

using word32 = std::uint32_t;

// Special configuration-stream words. These are matched verbatim before any
// packet-header decoding is attempted.
inline constexpr word32 kDummyWord = 0xFFFFFFFF;
inline constexpr word32 kSyncWord = 0xAA995566;
inline constexpr word32 kBusWidthSyncWord = 0x000000BB;
inline constexpr word32 kBusWidthDetectWord = 0x11220044;
inline constexpr word32 kNoopWord = 0x20000000;

// Big-endian byte order throughout: word 0xAA995566 is the byte sequence
// AA 99 55 66.
word32 read_be32(const std::uint8_t* p);
void append_be32(std::vector<std::uint8_t>& out, word32 w);
std::vector<std::uint8_t> words_to_bytes(std::span<const word32> words);
// Throws LengthNotWordMultiple when bytes.size() % 4 != 0.
std::vector<word32> bytes_to_words(std::span<const std::uint8_t> bytes);

// "0x" + 8 upper-case hex digits; the one spelling used in logs and reports.
std::string format_word(word32 w);

}  // namespace epoch
