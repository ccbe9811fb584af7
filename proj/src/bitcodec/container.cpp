// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/container.hpp"

#include <algorithm>
#include <array>

#include "epoch/error.hpp"

namespace epoch::bitcodec {

std::vector<word32> parse_container(std::span<const std::uint8_t> bytes,
                                    ContainerKind kind) {
  if (kind == ContainerKind::kBinFile) {
    return bytes_to_words(bytes);
  }
  static constexpr std::array<std::uint8_t, 4> kPreamble = {0x00, 0x00, 0x00,
                                                            0xBB};
  auto it = std::search(bytes.begin(), bytes.end(), kPreamble.begin(),
                        kPreamble.end());
  if (it == bytes.end()) {
    raise(ErrorCode::kSyncNotFound, "no bus-width sync preamble in container");
  }
  auto offset = static_cast<std::size_t>(it - bytes.begin());
  return bytes_to_words(bytes.subspan(offset));
}

}  // namespace epoch::bitcodec
