// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/ctl/sequences.hpp"

#include <charconv>
#include <sstream>

#include "epoch/bitcodec/packet.hpp"
#include "epoch/error.hpp"
#include "epoch/fabricsim/device_model.hpp"

namespace epoch::ctl {

using bitcodec::Frame;
using bitcodec::FrameAddress;
using bitcodec::Opcode;

namespace {

constexpr word32 kMaxType2Count = 0x07FFFFFF;

struct LabeledWord {
  word32 word;
  std::string label;
};

class SequenceBuilder {
 public:
  void emit(word32 w, std::string label, std::size_t repeat = 1) {
    for (std::size_t i = 0; i < repeat; ++i) words_.push_back({w, label});
  }

  void noops(std::size_t n) { emit(kNoopWord, "noop", n); }

  void cmd(word32 code, const std::string& name) {
    emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegCmd, 1),
         "type1 write CMD count=1");
    emit(code, name);
  }

  void preamble() {
    emit(kDummyWord, "dummy", 8);
    emit(kBusWidthSyncWord, "bus-width sync");
    emit(kBusWidthDetectWord, "bus-width detect");
    emit(kDummyWord, "dummy");
    emit(kSyncWord, "sync");
    noops(2);
  }

  const std::vector<LabeledWord>& words() const { return words_; }

 private:
  std::vector<LabeledWord> words_;
};

word32 checked_read_length(std::uint32_t n_frames) {
  if (n_frames == 0) {
    raise(ErrorCode::kCountMismatch, "cannot stream zero frames");
  }
  std::uint64_t words =
      (static_cast<std::uint64_t>(n_frames) + 1) * Frame::kWordsPerFrame;
  if (words > kMaxType2Count) {
    raise(ErrorCode::kCountOverflow,
          std::to_string(n_frames) +
              " frames do not fit the Type2 count field");
  }
  return static_cast<word32>(words);
}

std::vector<LabeledWord> build_readback_labeled(const FrameAddress& far,
                                                std::uint32_t n_frames,
                                                bool glut_unmask,
                                                bool capture_ffs) {
  word32 read_len = checked_read_length(n_frames);
  SequenceBuilder b;
  b.preamble();
  b.cmd(bitcodec::kCmdShutdown, "SHUTDOWN");
  b.noops(2);
  b.cmd(bitcodec::kCmdRcrc, "RCRC");
  b.noops(6);
  if (glut_unmask) {
    b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegMask, 1),
           "type1 write MASK count=1");
    b.emit(fabricsim::DeviceModel::kGlutmaskBit, "glutmask bit");
    b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegCtl0, 1),
           "type1 write CTL0 count=1");
    b.emit(fabricsim::DeviceModel::kGlutmaskBit, "glutmask bit");
  }
  if (capture_ffs) {
    b.cmd(bitcodec::kCmdGcapture, "GCAPTURE");
    b.noops(1);
  }
  b.cmd(bitcodec::kCmdRcfg, "RCFG");
  b.noops(3);
  b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegFar, 1),
         "type1 write FAR count=1");
  b.emit(bitcodec::far_encode(far), "frame address");
  b.emit(bitcodec::type1_word(Opcode::kRead, bitcodec::kRegFdro, 202),
         "type1 read FDRO count=202");
  b.emit(bitcodec::type2_word(Opcode::kRead, read_len),
         "type2 read FDRO count=" + std::to_string(read_len));
  b.noops(32);
  // Footer: leave shutdown, reset the CRC, release the port.
  b.noops(1);
  b.cmd(bitcodec::kCmdStart, "START");
  b.noops(1);
  b.cmd(bitcodec::kCmdRcrc, "RCRC");
  b.noops(1);
  b.cmd(bitcodec::kCmdDesync, "DESYNC");
  return b.words();
}

std::vector<LabeledWord> build_write_labeled(const FrameAddress& far,
                                             std::span<const Frame> frames,
                                             const FrameAddress& next_far,
                                             word32 idcode) {
  if (frames.empty()) {
    raise(ErrorCode::kCountMismatch, "cannot stream zero frames");
  }
  std::uint64_t data_words =
      (static_cast<std::uint64_t>(frames.size()) + 1) * Frame::kWordsPerFrame;
  if (data_words > kMaxType2Count) {
    raise(ErrorCode::kCountOverflow,
          std::to_string(frames.size()) +
              " frames do not fit the Type2 count field");
  }
  SequenceBuilder b;
  b.preamble();
  b.cmd(bitcodec::kCmdRcrc, "RCRC");
  b.noops(2);
  b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegIdcode, 1),
         "type1 write IDCODE count=1");
  b.emit(idcode, "idcode");
  b.noops(1);
  b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegFar, 1),
         "type1 write FAR count=1");
  b.emit(bitcodec::far_encode(far), "frame address");
  b.noops(1);
  b.cmd(bitcodec::kCmdWcfg, "WCFG");
  b.noops(1);
  b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegFdri, 0),
         "type1 write FDRI count=0");
  b.emit(bitcodec::type2_word(Opcode::kWrite,
                              static_cast<word32>(data_words)),
         "type2 write FDRI count=" + std::to_string(data_words));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::string label = "frame " + std::to_string(i) + " word";
    for (word32 w : frames[i].words()) b.emit(w, label);
  }
  b.emit(0x00000000, "padding word", Frame::kWordsPerFrame);
  b.cmd(bitcodec::kCmdRcrc, "RCRC");
  b.noops(2);
  b.emit(bitcodec::type1_word(Opcode::kWrite, bitcodec::kRegFar, 1),
         "type1 write FAR count=1");
  b.emit(bitcodec::far_encode(next_far), "next frame address");
  b.cmd(bitcodec::kCmdRcrc, "RCRC");
  b.noops(2);
  b.cmd(bitcodec::kCmdDesync, "DESYNC");
  b.emit(kDummyWord, "dummy");
  b.noops(2);
  return b.words();
}

std::vector<word32> strip_labels(const std::vector<LabeledWord>& labeled) {
  std::vector<word32> out;
  out.reserve(labeled.size());
  for (const auto& lw : labeled) out.push_back(lw.word);
  return out;
}

}  // namespace

std::vector<word32> build_readback_sequence(const FrameAddress& far,
                                            std::uint32_t n_frames,
                                            bool glut_unmask,
                                            bool capture_ffs) {
  return strip_labels(
      build_readback_labeled(far, n_frames, glut_unmask, capture_ffs));
}

std::vector<word32> build_write_sequence(const FrameAddress& far,
                                         std::span<const Frame> frames,
                                         const FrameAddress& next_far,
                                         word32 idcode) {
  return strip_labels(build_write_labeled(far, frames, next_far, idcode));
}

std::vector<std::uint8_t> bram_fixup_words() {
  std::vector<std::uint8_t> out;
  for (std::size_t w = 0; w < Frame::kWordsPerFrame; ++w) {
    if (fabricsim::is_bram_artifact_word(w)) {
      out.push_back(static_cast<std::uint8_t>(w));
    }
  }
  return out;
}

Frame apply_bram_fixup(const FrameAddress& far, Frame frame) {
  if (far.block_type != bitcodec::BlockType::kBram) {
    raise(ErrorCode::kNotABramFrame,
          to_string(far) + " is not a BRAM-type frame");
  }
  for (std::uint8_t w : bram_fixup_words()) {
    frame.set_bit(w, fabricsim::kBramArtifactBit, false);
  }
  return frame;
}

std::string render_template(TemplateKind kind, const FrameAddress& far,
                            std::uint32_t n_frames, word32 idcode,
                            bool glut_unmask, bool capture_ffs) {
  std::vector<LabeledWord> labeled;
  if (kind == TemplateKind::kReadback) {
    labeled = build_readback_labeled(far, n_frames, glut_unmask, capture_ffs);
  } else {
    checked_read_length(n_frames);
    std::vector<Frame> frames(n_frames);
    labeled = build_write_labeled(far, frames, far, idcode);
  }
  std::ostringstream os;
  for (const auto& lw : labeled) {
    os << format_word(lw.word) << "  " << lw.label << "\n";
  }
  return os.str();
}

std::vector<word32> parse_template_words(std::string_view text) {
  std::vector<word32> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls{line};
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (tok.size() <= 2 || tok[0] != '0' || (tok[1] != 'x' && tok[1] != 'X')) {
      raise(ErrorCode::kMalformedLine,
            "line " + std::to_string(line_no) + ": expected a hex word, got '" +
                tok + "'");
    }
    word32 value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 2, tok.data() + tok.size(), value, 16);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      raise(ErrorCode::kMalformedLine,
            "line " + std::to_string(line_no) + ": bad hex word '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace epoch::ctl
