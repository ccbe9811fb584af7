// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/logic_location.hpp"

#include <charconv>
#include <sstream>

#include "epoch/error.hpp"

namespace epoch::bitcodec {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  raise(ErrorCode::kMalformedLine,
        "line " + std::to_string(line_no) + ": " + why);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::uint32_t parse_u32(const std::string& tok, std::size_t line_no,
                        const char* what) {
  std::uint32_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  int base = 10;
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
    first += 2;
    base = 16;
  }
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last) {
    bad_line(line_no, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

ElementKind parse_kind(const std::string& tok, std::size_t line_no) {
  if (tok == "FF") return ElementKind::kFf;
  if (tok == "LUTRAM") return ElementKind::kLutRam;
  if (tok == "BRAM") return ElementKind::kBram;
  if (tok == "DSP") return ElementKind::kDsp;
  bad_line(line_no, "unknown Kind '" + tok + "'");
}

// "Key=value" -> value, enforcing the key.
std::string keyed(const std::string& tok, const char* key,
                  std::size_t line_no) {
  std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0 || tok.size() == prefix.size()) {
    bad_line(line_no, "expected " + prefix + "<value>, got '" + tok + "'");
  }
  return tok.substr(prefix.size());
}

}  // namespace

const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::kFf: return "FF";
    case ElementKind::kLutRam: return "LUTRAM";
    case ElementKind::kBram: return "BRAM";
    case ElementKind::kDsp: return "DSP";
  }
  return "?";
}

std::vector<LogicLocationEntry> parse_logic_location(std::string_view text) {
  std::vector<LogicLocationEntry> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] != "Bit") bad_line(line_no, "expected 'Bit', got '" + toks[0] + "'");
    if (toks.size() != 9) {
      bad_line(line_no,
               "expected 9 fields, got " + std::to_string(toks.size()));
    }
    LogicLocationEntry e;
    e.seq = parse_u32(toks[1], line_no, "sequence number");
    word32 far_word = parse_u32(toks[2], line_no, "frame address");
    try {
      e.far = far_decode(far_word);
    } catch (const Error& err) {
      bad_line(line_no, err.what());
    }
    std::uint32_t word = parse_u32(toks[3], line_no, "frame word");
    std::uint32_t bit = parse_u32(toks[4], line_no, "frame bit");
    if (word > 100) bad_line(line_no, "frame word " + toks[3] + " out of range");
    if (bit > 31) bad_line(line_no, "frame bit " + toks[4] + " out of range");
    e.frame_word = static_cast<std::uint8_t>(word);
    e.frame_bit = static_cast<std::uint8_t>(bit);
    e.block_site = keyed(toks[5], "Block", line_no);
    e.kind = parse_kind(keyed(toks[6], "Kind", line_no), line_no);
    e.design_path = keyed(toks[7], "Net", line_no);
    e.slot_id = keyed(toks[8], "Slot", line_no);
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_logic_location(
    const std::vector<LogicLocationEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "Bit " << e.seq << " " << format_word(far_encode(e.far)) << " "
       << static_cast<int>(e.frame_word) << " " << static_cast<int>(e.frame_bit)
       << " Block=" << e.block_site << " Kind=" << to_string(e.kind)
       << " Net=" << e.design_path << " Slot=" << e.slot_id << "\n";
  }
  return os.str();
}

int design_path_index(std::string_view path) {
  if (path.empty() || path.back() != ']') return -1;
  auto open = path.rfind('[');
  if (open == std::string_view::npos) return -1;
  std::string_view digits = path.substr(open + 1, path.size() - open - 2);
  if (digits.empty()) return -1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                   value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return -1;
  return value;
}

}  // namespace epoch::bitcodec
