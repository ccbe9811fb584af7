// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epoch/words.hpp"

namespace epoch::bitcodec {

// Packet header layout (32-bit word):
//   [31:29] type: 001 = Type1, 010 = Type2
//   [28:27] opcode: 00 = NOP, 01 = read, 10 = write
//   [17:13] register address (Type1 only)
//   [10:0]  word count (Type1)
//   [26:0]  word count (Type2; register carried over from preceding Type1)
// Words equal to one of the special stream words (dummy, sync, bus-width
// pair, canonical NOP) are classified before header decoding.
enum class PacketKind : std::uint8_t {
  kType1,
  kType2,
  kNoop,
  kDummy,
  kSyncWord,
  kBusWidthSync,
  kBusWidthDetect,
};

enum class Opcode : std::uint8_t { kNop = 0, kRead = 1, kWrite = 2 };

// Configuration register addresses. Values outside this set decode fine and
// round-trip; they just have no device-side behaviour.
inline constexpr std::uint8_t kRegCrc = 0;
inline constexpr std::uint8_t kRegFar = 1;
inline constexpr std::uint8_t kRegFdri = 2;
inline constexpr std::uint8_t kRegFdro = 3;
inline constexpr std::uint8_t kRegCmd = 4;
inline constexpr std::uint8_t kRegCtl0 = 5;
inline constexpr std::uint8_t kRegMask = 6;
inline constexpr std::uint8_t kRegIdcode = 12;

bool is_known_register(std::uint8_t reg);
// "CRC", "FAR", ... or "REG<n>" for unknown addresses.
std::string register_name(std::uint8_t reg);

// CMD register command codes.
inline constexpr word32 kCmdNull = 0x0;
inline constexpr word32 kCmdWcfg = 0x1;
inline constexpr word32 kCmdRcfg = 0x4;
inline constexpr word32 kCmdStart = 0x5;
inline constexpr word32 kCmdRcrc = 0x7;
inline constexpr word32 kCmdGrestore = 0xA;
inline constexpr word32 kCmdShutdown = 0xB;
inline constexpr word32 kCmdGcapture = 0xC;
inline constexpr word32 kCmdDesync = 0xD;

struct ConfigPacket {
  PacketKind kind = PacketKind::kNoop;
  Opcode opcode = Opcode::kNop;
  // For kType2 this is inherited from the preceding Type1 header during
  // decode; it is not re-encoded.
  std::uint8_t register_addr = 0;
  word32 word_count = 0;
  // Present for write packets only; read data travels out of band.
  std::vector<word32> payload;

  bool operator==(const ConfigPacket&) const = default;
};

// Header word constructors. Throw CountOverflow when the count does not fit
// the field and FieldOutOfRange for a register address above 5 bits.
word32 type1_word(Opcode op, std::uint8_t reg, word32 count);
word32 type2_word(Opcode op, word32 count);

// Decodes a packet list from a word stream that starts at or after the sync
// word. Write payloads are consumed inline; read counts consume nothing.
// Throws TruncatedPayload, OrphanType2, UnknownPacketWord.
std::vector<ConfigPacket> packet_decode(std::span<const word32> words);

// Inverse of packet_decode. Throws PayloadCountMismatch when a write packet's
// payload size differs from word_count.
std::vector<word32> packet_encode(std::span<const ConfigPacket> packets);

}  // namespace epoch::bitcodec
