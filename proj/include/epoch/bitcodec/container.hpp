// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epoch/words.hpp"

namespace epoch::bitcodec {

// BitFile: vendor-tool container with an arbitrary metadata header; the word
// stream starts at the first occurrence of the big-endian bus-width sync
// preamble (00 00 00 BB). BinFile: raw big-endian words, no header.
enum class ContainerKind { kBitFile, kBinFile };

// Throws SyncNotFound (BitFile without preamble) and LengthNotWordMultiple
// (stream byte length not divisible by 4).
std::vector<word32> parse_container(std::span<const std::uint8_t> bytes,
                                    ContainerKind kind);

}  // namespace epoch::bitcodec
