// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epoch/bitcodec/frame.hpp"
#include "epoch/bitcodec/frame_address.hpp"
#include "epoch/words.hpp"

namespace epoch::ctl {

// Run-time synthesis of the partial command streams the controller feeds the
// configuration port. The word sequences are fixed templates; only the frame
// address, frame count, payload and idcode vary.

// Readback of n_frames starting at far: shutdown, RCRC, optional glutmask
// unmask (MASK then CTL0), optional GCAPTURE, RCFG, FAR, FDRO read pair,
// pipeline noops, then START / RCRC / DESYNC footer. Data is fetched
// separately through pcap_read((n_frames + 1) * 101).
// Throws CountOverflow when the read length leaves the Type2 count field,
// CountMismatch for n_frames == 0.
std::vector<word32> build_readback_sequence(const bitcodec::FrameAddress& far,
                                            std::uint32_t n_frames,
                                            bool glut_unmask = true,
                                            bool capture_ffs = true);

// Write of frames starting at far: RCRC, IDCODE check, FAR, WCFG, FDRI
// Type1/Type2 pair, frame data, one zero padding frame, RCRC, next FAR,
// RCRC, DESYNC trailer. next_far points at the frame a follow-up sequence
// would target; the last sequence of a chain passes far itself.
std::vector<word32> build_write_sequence(
    const bitcodec::FrameAddress& far,
    std::span<const bitcodec::Frame> frames,
    const bitcodec::FrameAddress& next_far, word32 idcode);

// Frame words of a BRAM-type frame that carry the readback artifact bit.
std::vector<std::uint8_t> bram_fixup_words();

// Clears the artifact bit at every fixup word. Throws NotABramFrame when far
// is not BRAM-type.
bitcodec::Frame apply_bram_fixup(const bitcodec::FrameAddress& far,
                                 bitcodec::Frame frame);

enum class TemplateKind { kReadback, kWrite };

// Annotated dump: one "0xXXXXXXXX  label" line per word. parse_template_words
// reads the word column back (also from hand-written golden files; '#' lines
// and blank lines are skipped).
std::string render_template(TemplateKind kind, const bitcodec::FrameAddress& far,
                            std::uint32_t n_frames, word32 idcode,
                            bool glut_unmask = true, bool capture_ffs = true);
std::vector<word32> parse_template_words(std::string_view text);

}  // namespace epoch::ctl
