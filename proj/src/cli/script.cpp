// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/cli/script.hpp"

#include <charconv>
#include <sstream>

#include "epoch/error.hpp"

namespace epoch::cli {

namespace {

[[noreturn]] void bad(std::size_t line_no, const std::string& why) {
  raise(ErrorCode::kScriptParse,
        "line " + std::to_string(line_no) + ": " + why);
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  int base = 10;
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
    first += 2;
    base = 16;
  }
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last) bad(line_no, "bad number '" + tok + "'");
  return value;
}

// "key=value" option tokens after the positional arguments.
bool split_option(const std::string& tok, std::string& key,
                  std::string& value) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size()) return false;
  key = tok.substr(0, eq);
  value = tok.substr(eq + 1);
  return true;
}

}  // namespace

std::vector<ScriptStep> parse_script(std::string_view text) {
  std::vector<ScriptStep> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls{line};
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      toks.push_back(tok);
    }
    if (toks.empty()) continue;

    ScriptStep step;
    step.line_no = line_no;
    {
      std::ostringstream raw;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i > 0) raw << " ";
        raw << toks[i];
      }
      step.text = raw.str();
    }
    const std::string& verb = toks[0];

    auto need = [&](std::size_t n) {
      if (toks.size() < n + 1) {
        bad(line_no, verb + " needs " + std::to_string(n) + " argument(s)");
      }
    };

    if (verb == "load") {
      need(2);
      step.kind = ScriptStep::Kind::kLoad;
      step.slot = toks[1];
      try {
        step.tenant_kind = tenants::parse_tenant_kind(toks[2]);
      } catch (const Error&) {
        bad(line_no, "unknown tenant kind '" + toks[2] + "'");
      }
      for (std::size_t i = 3; i < toks.size(); ++i) {
        std::string key, value;
        if (!split_option(toks[i], key, value)) {
          bad(line_no, "expected key=value, got '" + toks[i] + "'");
        }
        if (key == "seed") {
          step.params.seed = static_cast<word32>(parse_u64(value, line_no));
        } else if (key == "len") {
          step.params.chain_len =
              static_cast<std::uint32_t>(parse_u64(value, line_no));
        } else if (key == "taps") {
          step.params.taps.clear();
          std::istringstream ts{value};
          std::string item;
          while (std::getline(ts, item, ',')) {
            step.params.taps.push_back(
                static_cast<std::uint8_t>(parse_u64(item, line_no)));
          }
          if (step.params.taps.empty()) bad(line_no, "empty taps list");
        } else {
          bad(line_no, "unknown load option '" + key + "'");
        }
      }
    } else if (verb == "tick") {
      need(1);
      step.kind = ScriptStep::Kind::kTick;
      step.count = parse_u64(toks[1], line_no);
      for (std::size_t i = 2; i < toks.size(); ++i) {
        std::string key, value;
        if (!split_option(toks[i], key, value) || key != "update") {
          bad(line_no, "expected update=0|1, got '" + toks[i] + "'");
        }
        if (value != "0" && value != "1") {
          bad(line_no, "update wants 0 or 1, got '" + value + "'");
        }
        step.update = value == "1" ? 1 : 0;
      }
    } else if (verb == "update") {
      need(2);
      step.kind = ScriptStep::Kind::kUpdate;
      step.slot = toks[1];
      if (toks[2] != "0" && toks[2] != "1") {
        bad(line_no, "update wants 0 or 1, got '" + toks[2] + "'");
      }
      step.update = toks[2] == "1" ? 1 : 0;
    } else if (verb == "save" || verb == "restore" || verb == "blank") {
      need(1);
      step.kind = verb == "save"      ? ScriptStep::Kind::kSave
                  : verb == "restore" ? ScriptStep::Kind::kRestore
                                      : ScriptStep::Kind::kBlank;
      step.slot = toks[1];
    } else if (verb == "gsr") {
      step.kind = ScriptStep::Kind::kGsr;
    } else if (verb == "clock") {
      need(1);
      step.kind = ScriptStep::Kind::kClock;
      if (toks[1] == "stop") {
        step.clock_run = false;
      } else if (toks[1] == "start") {
        step.clock_run = true;
      } else {
        bad(line_no, "clock wants stop or start, got '" + toks[1] + "'");
      }
    } else if (verb == "assert") {
      need(2);
      step.kind = ScriptStep::Kind::kAssertReg;
      step.slot = toks[1];
      step.value = static_cast<word32>(parse_u64(toks[2], line_no));
    } else if (verb == "assert-oracle") {
      need(1);
      step.kind = ScriptStep::Kind::kAssertOracle;
      step.slot = toks[1];
    } else {
      bad(line_no, "unknown step '" + verb + "'");
    }
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace epoch::cli
