// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/cli/cli.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "epoch/bitcodec/frame_address.hpp"
#include "epoch/cli/builtin_fixtures.hpp"
#include "epoch/cli/executor.hpp"
#include "epoch/cli/script.hpp"
#include "epoch/ctl/sequences.hpp"
#include "epoch/error.hpp"
#include "epoch/fabricsim/device_model.hpp"

namespace epoch::cli {
namespace {

struct CommonOptions {
  std::string geometry_path;  // empty = built-in demo device
  std::string cellmap_path;   // empty = built-in demo cell map
  double clock_hz = ctl::kReferencePortHz;
  bool no_bram_fixup = false;
  bool skip_gsr = false;
  bool blank_before_restore = false;
  bool json = false;
  bool no_timestamps = false;
  bool trace = false;
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kBadConfigFile, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

word32 parse_hex_word(const std::string& text) {
  std::string_view sv = text;
  if (sv.size() > 2 && sv[0] == '0' && (sv[1] == 'x' || sv[1] == 'X')) {
    sv.remove_prefix(2);
  }
  if (sv.empty() || sv.size() > 8) {
    raise(ErrorCode::kMalformedLine, "bad hex word '" + text + "'");
  }
  word32 value = 0;
  for (char c : sv) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      raise(ErrorCode::kMalformedLine, "bad hex word '" + text + "'");
    }
    value = (value << 4) | static_cast<word32>(digit);
  }
  return value;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

fabricsim::DeviceModel build_device(const CommonOptions& c) {
  std::string geometry_text = c.geometry_path.empty()
                                  ? std::string(kDemoGeometryText)
                                  : read_text_file(c.geometry_path);
  std::string cell_text = c.cellmap_path.empty()
                              ? std::string(kDemoCellMapText)
                              : read_text_file(c.cellmap_path);
  fabricsim::DeviceModel dev(fabricsim::parse_geometry(geometry_text),
                             bitcodec::parse_logic_location(cell_text));
  dev.set_port_clock_hz(c.clock_hz);
  return dev;
}

ExecOptions build_exec_options(const CommonOptions& c) {
  ExecOptions o;
  o.ctl.bram_fixup = !c.no_bram_fixup;
  o.ctl.skip_gsr = c.skip_gsr;
  o.ctl.blank_before_restore = c.blank_before_restore;
  o.ctl.timing.port_clock_hz = c.clock_hz;
  return o;
}

void render_text_report(const CommonOptions& c, const std::string& command,
                        const RunResult& result,
                        const fabricsim::DeviceModel& dev, bool with_trace,
                        std::ostream& out) {
  out << "scenario: " << command << "\n";
  if (!c.no_timestamps) out << "generated-at: " << utc_timestamp() << "\n";
  out << "geometry: "
      << (c.geometry_path.empty() ? "built-in demo device" : c.geometry_path)
      << " (idcode " << format_word(dev.geometry().idcode) << ", "
      << dev.geometry().frame_count() << " frames)\n";
  char hz[32];
  std::snprintf(hz, sizeof hz, "%.0f", c.clock_hz);
  out << "port-clock-hz: " << hz << "\n";
  out << "steps:\n";
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const StepResult& sr = result.steps[i];
    char head[48];
    std::snprintf(head, sizeof head, "  %3zu  %-4s  cycle %-6llu  ", sr.index,
                  sr.ok ? "ok" : "FAIL",
                  static_cast<unsigned long long>(sr.cycle));
    out << head << sr.text;
    if (!sr.detail.empty()) out << "  [" << sr.detail;
    if (sr.modeled_us > 0.0) {
      out << (sr.detail.empty() ? "  [" : ", ") << fixed3(sr.modeled_us)
          << " us";
    }
    if (!sr.detail.empty() || sr.modeled_us > 0.0) out << "]";
    out << "\n";
  }
  out << "totals: save " << result.save_frames << " frames / "
      << fixed3(result.save_us) << " us, restore " << result.restore_frames
      << " frames / " << fixed3(result.restore_us) << " us (modeled)\n";
  if (with_trace) {
    out << "trace:\n";
    for (const auto& effect : dev.log().entries()) {
      out << "  " << effect.line << "\n";
    }
  }
  out << "result: " << (result.pass ? "PASS" : "FAIL") << "\n";
}

void render_json_report(const CommonOptions& c, const std::string& command,
                        std::span<const ScriptStep> steps,
                        const RunResult& result,
                        const fabricsim::DeviceModel& dev, bool with_trace,
                        std::ostream& out) {
  nlohmann::json j;
  j["command"] = command;
  if (!c.no_timestamps) j["generated_at"] = utc_timestamp();
  j["geometry"] = c.geometry_path.empty() ? "builtin" : c.geometry_path;
  j["cellmap"] = c.cellmap_path.empty() ? "builtin" : c.cellmap_path;
  j["idcode"] = format_word(dev.geometry().idcode);
  j["port_clock_hz"] = c.clock_hz;
  j["pass"] = result.pass;
  nlohmann::json step_array = nlohmann::json::array();
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const StepResult& sr = result.steps[i];
    nlohmann::json js;
    js["step"] = sr.index;
    js["slot"] = i < steps.size() ? steps[i].slot : "";
    js["cycle"] = sr.cycle;
    js["result"] = sr.ok ? "ok" : "fail";
    js["modeled_us"] = sr.modeled_us;
    js["text"] = sr.text;
    js["detail"] = sr.detail;
    step_array.push_back(std::move(js));
  }
  j["steps"] = std::move(step_array);
  j["totals"] = {{"save_frames", result.save_frames},
                 {"save_us", result.save_us},
                 {"restore_frames", result.restore_frames},
                 {"restore_us", result.restore_us}};
  if (with_trace) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& effect : dev.log().entries()) trace.push_back(effect.line);
    j["trace"] = std::move(trace);
  }
  out << j.dump(2) << "\n";
}

int cmd_scenario(const CommonOptions& c, const std::string& command,
                 const std::string& script_text, bool trace_by_default,
                 std::ostream& out) {
  std::vector<ScriptStep> steps = parse_script(script_text);
  fabricsim::DeviceModel dev = build_device(c);
  ScriptExecutor exec(dev, build_exec_options(c));
  RunResult result = exec.run(steps);
  bool with_trace = c.trace || trace_by_default;
  if (c.json) {
    render_json_report(c, command, steps, result, dev, with_trace, out);
  } else {
    render_text_report(c, command, result, dev, with_trace, out);
  }
  return result.pass ? 0 : 1;
}

int cmd_decode_far(const std::string& word_text, bool as_json,
                   std::ostream& out) {
  word32 w = parse_hex_word(word_text);
  bitcodec::FrameAddress far = bitcodec::far_decode(w);
  if (as_json) {
    nlohmann::json j;
    j["word"] = format_word(w);
    j["block"] = bitcodec::to_string(far.block_type);
    j["half"] = far.bottom_half ? "bottom" : "top";
    j["row"] = far.row;
    j["column"] = far.column;
    j["minor"] = far.minor;
    out << j.dump(2) << "\n";
  } else {
    out << "word    " << format_word(w) << "\n"
        << "block   " << bitcodec::to_string(far.block_type) << "\n"
        << "half    " << (far.bottom_half ? "bottom" : "top") << "\n"
        << "row     " << static_cast<unsigned>(far.row) << "\n"
        << "column  " << far.column << "\n"
        << "minor   " << static_cast<unsigned>(far.minor) << "\n";
  }
  return 0;
}

int cmd_gen_template(const std::string& kind_text, const std::string& far_text,
                     std::uint32_t n_frames, const std::string& idcode_text,
                     bool no_capture, bool no_unmask,
                     const std::string& golden_path, std::ostream& out,
                     std::ostream& err) {
  ctl::TemplateKind kind = kind_text == "readback"
                               ? ctl::TemplateKind::kReadback
                               : ctl::TemplateKind::kWrite;
  bitcodec::FrameAddress far = bitcodec::far_decode(parse_hex_word(far_text));
  word32 idcode = parse_hex_word(idcode_text);
  std::string dump = ctl::render_template(kind, far, n_frames, idcode,
                                          !no_unmask, !no_capture);
  out << dump;
  if (golden_path.empty()) return 0;

  std::vector<word32> mine = ctl::parse_template_words(dump);
  std::vector<word32> golden =
      ctl::parse_template_words(read_text_file(golden_path));
  std::size_t common = std::min(mine.size(), golden.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (mine[i] != golden[i]) {
      err << "golden mismatch at word " << i << ": stream has "
          << format_word(mine[i]) << ", fixture has " << format_word(golden[i])
          << "\n";
      return 1;
    }
  }
  if (mine.size() != golden.size()) {
    err << "golden mismatch: stream has " << mine.size()
        << " words, fixture has " << golden.size() << "\n";
    return 1;
  }
  out << "# golden-check ok: " << mine.size() << " words match "
      << golden_path << "\n";
  return 0;
}

// File-shaped input errors are usage problems (exit 2); everything else that
// throws is a data or device failure (exit 1).
int classify_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadConfigFile:
    case ErrorCode::kMalformedLine:
    case ErrorCode::kScriptParse:
      return 2;
    default:
      return 1;
  }
}

void add_common_options(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--geometry", c.geometry_path,
                  "Device floorplan file (default: built-in demo device)");
  sub->add_option("--cellmap", c.cellmap_path,
                  "Cell map file (default: built-in demo map)");
  sub->add_option("--clock-hz", c.clock_hz,
                  "Configuration port clock in Hz (default 50 MHz)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--no-bram-fixup", c.no_bram_fixup,
                "Skip the BRAM artifact-bit fixup during save");
  sub->add_flag("--skip-gsr", c.skip_gsr,
                "Do not pulse GSR after restoring frames");
  sub->add_flag("--blank-before-restore", c.blank_before_restore,
                "Write all-zero frames before restoring");
  sub->add_flag("--json", c.json, "Emit the machine-readable report");
  sub->add_flag("--no-timestamps", c.no_timestamps,
                "Omit the generated-at line (byte-stable output)");
  sub->add_flag("--trace", c.trace, "Include the device effect-log trace");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"epoch: simulated FPGA preemption fabric and controller"};
  app.require_subcommand(1);

  CommonOptions common;

  CLI::App* demo_counters = app.add_subcommand(
      "demo-counters", "Run the built-in counter save/restore scenario");
  add_common_options(demo_counters, common);

  CLI::App* demo_bram = app.add_subcommand(
      "demo-bram", "Run the built-in BRAM chain save/restore scenario");
  add_common_options(demo_bram, common);

  CLI::App* run_script =
      app.add_subcommand("run-script", "Run a scenario script file");
  std::string script_path;
  run_script->add_option("script", script_path, "Scenario script file")
      ->required();
  add_common_options(run_script, common);

  CLI::App* decode_far =
      app.add_subcommand("decode-far", "Decode a frame address word");
  std::string far_word;
  bool far_json = false;
  decode_far->add_option("word", far_word, "Frame address word (hex)")
      ->required();
  decode_far->add_flag("--json", far_json, "Emit JSON fields");

  CLI::App* gen_template = app.add_subcommand(
      "gen-template", "Emit a readback or write command stream template");
  std::string template_kind;
  std::string template_far = "0x0042011E";
  std::uint32_t template_frames = 1;
  std::string template_idcode = "0x03727093";
  bool template_no_capture = false;
  bool template_no_unmask = false;
  std::string golden_path;
  gen_template
      ->add_option("kind", template_kind, "Template kind: readback or write")
      ->required()
      ->check(CLI::IsMember({"readback", "write"}));
  gen_template->add_option("--far", template_far,
                           "Starting frame address (hex)");
  gen_template->add_option("--frames", template_frames, "Frame count")
      ->check(CLI::PositiveNumber);
  gen_template->add_option("--idcode", template_idcode,
                           "Device idcode for write templates (hex)");
  gen_template->add_flag("--no-capture", template_no_capture,
                         "Omit the GCAPTURE step from readback templates");
  gen_template->add_flag("--no-unmask", template_no_unmask,
                         "Omit the MASK/CTL0 LUT unmask pair");
  gen_template->add_option("--golden-check", golden_path,
                           "Compare the stream against a fixture file");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("epoch");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(demo_counters)) {
      return cmd_scenario(common, "demo-counters", kDemoCountersScript,
                          /*trace_by_default=*/false, out);
    }
    if (app.got_subcommand(demo_bram)) {
      return cmd_scenario(common, "demo-bram", kDemoBramScript,
                          /*trace_by_default=*/false, out);
    }
    if (app.got_subcommand(run_script)) {
      return cmd_scenario(common, script_path, read_text_file(script_path),
                          /*trace_by_default=*/true, out);
    }
    if (app.got_subcommand(decode_far)) {
      return cmd_decode_far(far_word, far_json, out);
    }
    if (app.got_subcommand(gen_template)) {
      return cmd_gen_template(template_kind, template_far, template_frames,
                              template_idcode, template_no_capture,
                              template_no_unmask, golden_path, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return classify_error(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace epoch::cli
