// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "epoch/words.hpp"

namespace epoch::bitcodec {

// One configuration frame: 101 words of 32 bits. Word 50 is the frame CRC
// slot and carries no configuration content.
class Frame {
 public:
  static constexpr std::size_t kWordsPerFrame = 101;
  static constexpr std::size_t kCrcWordIndex = 50;

  Frame() : words_{} {}
  // Throws BadFrameLength unless words.size() == 101.
  explicit Frame(std::span<const word32> words);

  static Frame filled(word32 value);

  word32& operator[](std::size_t i) { return words_[i]; }
  const word32& operator[](std::size_t i) const { return words_[i]; }

  std::array<word32, kWordsPerFrame>& words() { return words_; }
  const std::array<word32, kWordsPerFrame>& words() const { return words_; }

  bool operator==(const Frame&) const = default;

  // Equality over configuration content only (word 50 ignored).
  bool equal_ignoring_crc_slot(const Frame& other) const;

  bool bit(std::size_t word, std::size_t bit) const;
  void set_bit(std::size_t word, std::size_t bit, bool value);

 private:
  std::array<word32, kWordsPerFrame> words_;
};

}  // namespace epoch::bitcodec
