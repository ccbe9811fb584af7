// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "epoch/bitcodec/packet.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::bitcodec;

TEST_CASE("header constructors reproduce the reference command words") {
  CHECK(type1_word(Opcode::kWrite, kRegCmd, 1) == 0x30008001);
  CHECK(type1_word(Opcode::kWrite, kRegFar, 1) == 0x30002001);
  CHECK(type1_word(Opcode::kWrite, kRegFdri, 0) == 0x30004000);
  CHECK(type1_word(Opcode::kWrite, kRegIdcode, 1) == 0x30018001);
  CHECK(type1_word(Opcode::kWrite, kRegMask, 1) == 0x3000C001);
  CHECK(type1_word(Opcode::kWrite, kRegCtl0, 1) == 0x3000A001);
  CHECK(type1_word(Opcode::kRead, kRegFdro, 202) == 0x280060CA);
  CHECK(type2_word(Opcode::kRead, 202) == 0x480000CA);
  CHECK(type2_word(Opcode::kWrite, 202) == 0x500000CA);
}

TEST_CASE("header constructors reject oversized fields") {
  CHECK(test::code_of([] { type1_word(Opcode::kWrite, kRegCmd, 0x800); }) ==
        ErrorCode::kCountOverflow);
  CHECK(test::code_of([] { type2_word(Opcode::kWrite, 0x08000000); }) ==
        ErrorCode::kCountOverflow);
  CHECK(test::code_of([] { type1_word(Opcode::kWrite, 32, 1); }) ==
        ErrorCode::kFieldOutOfRange);
}

TEST_CASE("shutdown command decodes as a one-word CMD write") {
  std::vector<word32> words{0x30008001, 0x0000000B};
  auto packets = packet_decode(words);
  REQUIRE(packets.size() == 1);
  CHECK(packets[0].kind == PacketKind::kType1);
  CHECK(packets[0].opcode == Opcode::kWrite);
  CHECK(packets[0].register_addr == kRegCmd);
  CHECK(packets[0].word_count == 1);
  CHECK(packets[0].payload == std::vector<word32>{kCmdShutdown});
}

TEST_CASE("noop decodes as its own packet kind") {
  std::vector<word32> words{kNoopWord};
  auto packets = packet_decode(words);
  REQUIRE(packets.size() == 1);
  CHECK(packets[0].kind == PacketKind::kNoop);
}

TEST_CASE("combined framing header streams a 202-word payload") {
  std::vector<word32> words{0x30004000, 0x500000CA};
  for (word32 i = 0; i < 202; ++i) words.push_back(0x1000 + i);
  auto packets = packet_decode(words);
  REQUIRE(packets.size() == 2);
  CHECK(packets[0].kind == PacketKind::kType1);
  CHECK(packets[0].register_addr == kRegFdri);
  CHECK(packets[0].word_count == 0);
  CHECK(packets[0].payload.empty());
  CHECK(packets[1].kind == PacketKind::kType2);
  CHECK(packets[1].register_addr == kRegFdri);
  CHECK(packets[1].word_count == 202);
  REQUIRE(packets[1].payload.size() == 202);
  CHECK(packets[1].payload.front() == 0x1000);
  CHECK(packets[1].payload.back() == 0x1000 + 201);
}

TEST_CASE("type2 without a preceding type1 is an orphan") {
  std::vector<word32> words{0x500000CA};
  CHECK(test::code_of([&] { packet_decode(words); }) ==
        ErrorCode::kOrphanType2);
}

TEST_CASE("write payload shorter than its count is truncated") {
  std::vector<word32> words{0x30008001};
  CHECK(test::code_of([&] { packet_decode(words); }) ==
        ErrorCode::kTruncatedPayload);
}

TEST_CASE("reserved opcode and type values are unknown words") {
  // Opcode field 11.
  CHECK(test::code_of([] {
          std::vector<word32> w{0x38000000};
          packet_decode(w);
        }) == ErrorCode::kUnknownPacketWord);
  // Type field 000 (and not a special word).
  CHECK(test::code_of([] {
          std::vector<word32> w{0x00000001};
          packet_decode(w);
        }) == ErrorCode::kUnknownPacketWord);
  // Type field 011.
  CHECK(test::code_of([] {
          std::vector<word32> w{0x60000000};
          packet_decode(w);
        }) == ErrorCode::kUnknownPacketWord);
}

TEST_CASE("special words decode before header classification") {
  std::vector<word32> words{kDummyWord, kBusWidthSyncWord, kBusWidthDetectWord,
                            kSyncWord};
  auto packets = packet_decode(words);
  REQUIRE(packets.size() == 4);
  CHECK(packets[0].kind == PacketKind::kDummy);
  CHECK(packets[1].kind == PacketKind::kBusWidthSync);
  CHECK(packets[2].kind == PacketKind::kBusWidthDetect);
  CHECK(packets[3].kind == PacketKind::kSyncWord);
}

TEST_CASE("encode is the inverse of decode over random packet lists") {
  std::mt19937 rng(0xC0DE);
  std::uniform_int_distribution<int> reg(0, 31);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> shape(0, 5);

  for (int round = 0; round < 1000; ++round) {
    std::vector<ConfigPacket> packets;
    int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      ConfigPacket p;
      switch (shape(rng)) {
        case 0:
          p.kind = PacketKind::kNoop;
          break;
        case 1:
          p.kind = PacketKind::kDummy;
          break;
        case 2: {  // Type1 write with payload
          p.kind = PacketKind::kType1;
          p.opcode = Opcode::kWrite;
          p.register_addr = static_cast<std::uint8_t>(reg(rng));
          p.payload.resize(static_cast<std::size_t>(len(rng)));
          for (auto& w : p.payload) w = rng();
          p.word_count = static_cast<word32>(p.payload.size());
          break;
        }
        case 3: {  // Type1 read
          p.kind = PacketKind::kType1;
          p.opcode = Opcode::kRead;
          p.register_addr = static_cast<std::uint8_t>(reg(rng));
          p.word_count = static_cast<word32>(len(rng));
          break;
        }
        case 4: {  // Type1 write header + Type2 write payload
          ConfigPacket head;
          head.kind = PacketKind::kType1;
          head.opcode = Opcode::kWrite;
          head.register_addr = static_cast<std::uint8_t>(reg(rng));
          head.word_count = 0;
          packets.push_back(head);
          p.kind = PacketKind::kType2;
          p.opcode = Opcode::kWrite;
          p.register_addr = head.register_addr;
          p.payload.resize(1 + static_cast<std::size_t>(len(rng)));
          for (auto& w : p.payload) w = rng();
          p.word_count = static_cast<word32>(p.payload.size());
          break;
        }
        default:
          p.kind = PacketKind::kSyncWord;
          break;
      }
      packets.push_back(std::move(p));
    }
    auto words = packet_encode(packets);
    CHECK(packet_decode(words) == packets);
  }
}

TEST_CASE("encode rejects payload/count disagreement") {
  ConfigPacket p;
  p.kind = PacketKind::kType1;
  p.opcode = Opcode::kWrite;
  p.register_addr = kRegCmd;
  p.word_count = 2;
  p.payload = {kCmdRcrc};
  std::vector<ConfigPacket> packets{p};
  CHECK(test::code_of([&] { packet_encode(packets); }) ==
        ErrorCode::kPayloadCountMismatch);
}

TEST_CASE("register names cover the documented set") {
  CHECK(register_name(kRegCrc) == "CRC");
  CHECK(register_name(kRegFar) == "FAR");
  CHECK(register_name(kRegFdri) == "FDRI");
  CHECK(register_name(kRegFdro) == "FDRO");
  CHECK(register_name(kRegCmd) == "CMD");
  CHECK(register_name(kRegCtl0) == "CTL0");
  CHECK(register_name(kRegMask) == "MASK");
  CHECK(register_name(kRegIdcode) == "IDCODE");
  CHECK(is_known_register(kRegCmd));
  CHECK_FALSE(is_known_register(30));
  CHECK(register_name(30) == "REG30");
}
