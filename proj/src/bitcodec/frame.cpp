// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/frame.hpp"

#include <algorithm>
#include <string>

#include "epoch/error.hpp"

namespace epoch::bitcodec {

Frame::Frame(std::span<const word32> words) {
  if (words.size() != kWordsPerFrame) {
    raise(ErrorCode::kBadFrameLength,
          "frame needs 101 words, got " + std::to_string(words.size()));
  }
  std::copy(words.begin(), words.end(), words_.begin());
}

Frame Frame::filled(word32 value) {
  Frame f;
  f.words_.fill(value);
  return f;
}

bool Frame::equal_ignoring_crc_slot(const Frame& other) const {
  for (std::size_t i = 0; i < kWordsPerFrame; ++i) {
    if (i == kCrcWordIndex) continue;
    if (words_[i] != other.words_[i]) return false;
  }
  return true;
}

bool Frame::bit(std::size_t word, std::size_t bit) const {
  return ((words_[word] >> bit) & 1) != 0;
}

void Frame::set_bit(std::size_t word, std::size_t bit, bool value) {
  if (value) {
    words_[word] |= (word32{1} << bit);
  } else {
    words_[word] &= ~(word32{1} << bit);
  }
}

}  // namespace epoch::bitcodec
