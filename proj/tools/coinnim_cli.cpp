// coinnim: classify, solve, verify and export the two-piece sliding games,
// or serve them over HTTP. Talks to the engine only through coinnim.h.

#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include <CLI11.hpp>

#include "coinnim/coinnim.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;
constexpr int kExitDisagree = 3;

struct CliError {
  std::string message;
};

void check(coinnim_status status) {
  if (status != COINNIM_OK) throw CliError{coinnim_last_error()};
}

struct CString {
  char* ptr = nullptr;
  ~CString() { coinnim_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using EnginePtr = std::unique_ptr<coinnim_engine, decltype(&coinnim_engine_destroy)>;
using ReportPtr = std::unique_ptr<coinnim_report, decltype(&coinnim_report_destroy)>;
using ServerPtr = std::unique_ptr<coinnim_server, decltype(&coinnim_server_destroy)>;

EnginePtr make_engine() {
  size_t cap = 0;
  if (const char* env = std::getenv("COINNIM_MEMO_CAP"); env && *env) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      cap = static_cast<size_t>(v);
    } catch (const std::exception&) {
      throw CliError{std::string("COINNIM_MEMO_CAP must be a nonnegative integer, got \"") +
                     env + "\""};
    }
  }
  coinnim_engine* raw = nullptr;
  check(coinnim_engine_create(cap, &raw));
  return EnginePtr(raw, &coinnim_engine_destroy);
}

coinnim_variant variant_from_flag(const std::string& name) {
  coinnim_variant v{};
  check(coinnim_parse_variant(name.c_str(), &v));
  return v;
}

coinnim_position read_position(const std::optional<std::string>& variant_flag,
                               const std::vector<std::string>& args) {
  if (args.empty()) throw CliError{"missing position"};
  std::string joined;
  for (const std::string& a : args) joined += (joined.empty() ? "" : " ") + a;

  coinnim_position pos{};
  if (joined.find('{') != std::string::npos) {
    if (variant_flag) {
      check(coinnim_position_from_json_as(joined.c_str(), variant_from_flag(*variant_flag), &pos));
    } else {
      check(coinnim_position_from_json(joined.c_str(), &pos));
    }
  } else {
    if (!variant_flag) throw CliError{"--variant is required with the w,x,y,z shorthand"};
    check(coinnim_position_from_shorthand(variant_from_flag(*variant_flag), joined.c_str(), &pos));
  }
  if (!coinnim_validate(&pos)) {
    CString json;
    check(coinnim_position_to_json(&pos, &json.ptr));
    throw CliError{"malformed position " + json.str() + " for variant " +
                   coinnim_variant_name(pos.variant)};
  }
  return pos;
}

const char* boolstr(int32_t v) { return v ? "true" : "false"; }

std::string move_text(const coinnim_move& m) {
  CString s;
  check(coinnim_move_to_string(&m, &s.ptr));
  return s.str();
}

std::vector<coinnim_move> best_moves(coinnim_engine* engine, const coinnim_position& pos) {
  size_t count = 0;
  coinnim_status st = coinnim_best_moves(engine, &pos, nullptr, 0, &count);
  if (st != COINNIM_OK && st != COINNIM_ERR_BUFFER_TOO_SMALL) check(st);
  std::vector<coinnim_move> moves(count);
  check(coinnim_best_moves(engine, &pos, moves.data(), moves.size(), &count));
  return moves;
}

// Closed-form P/N claim, or nullopt where no classifier applies.
std::optional<char> closed_claim(const coinnim_position& pos, coinnim_classification& c) {
  const coinnim_status st = coinnim_classify(&pos, &c);
  if (st == COINNIM_ERR_NOT_APPLICABLE) return std::nullopt;
  check(st);
  return c.p_position ? 'P' : 'N';
}

bool warn_if_disagree(char closed, uint32_t grundy) {
  const char brute = grundy == 0 ? 'P' : 'N';
  if (closed == brute) return false;
  std::cerr << "WARNING: closed form says " << closed << " but the exact solver says " << brute
            << " (G=" << grundy << ")\n";
  return true;
}

int cmd_classify(const std::optional<std::string>& variant, const std::vector<std::string>& args) {
  const coinnim_position pos = read_position(variant, args);
  coinnim_classification c{};
  const std::optional<char> claim = closed_claim(pos, c);
  if (!claim) {
    std::cerr << "classify: " << coinnim_last_error() << "\n";
    return kExitError;
  }
  switch (pos.variant) {
    case COINNIM_VARIANT_ROOK:
      std::cout << "nimsum=" << c.nim_sum << " P1=" << boolstr(c.in_p1)
                << " N0=" << boolstr(c.in_n0);
      break;
    case COINNIM_VARIANT_JUMP:
      std::cout << "P0=" << boolstr(c.in_p0) << " P1=" << boolstr(c.in_p1)
                << " N0=" << boolstr(c.in_n0);
      break;
    default:
      std::cout << "nimsum(w-1,x-1,y-1,z-1)=" << c.nim_sum;
      break;
  }
  std::cout << " → " << *claim << "\n";

  EnginePtr engine = make_engine();
  uint32_t g = 0;
  check(coinnim_grundy(engine.get(), &pos, &g));
  return warn_if_disagree(*claim, g) ? kExitDisagree : 0;
}

int cmd_grundy(const std::optional<std::string>& variant, const std::vector<std::string>& args) {
  const coinnim_position pos = read_position(variant, args);
  EnginePtr engine = make_engine();
  uint32_t g = 0;
  check(coinnim_grundy(engine.get(), &pos, &g));
  std::cout << "G=" << g << " outcome=" << (g == 0 ? 'P' : 'N') << " moves=[";
  const std::vector<coinnim_move> moves = best_moves(engine.get(), pos);
  for (size_t i = 0; i < moves.size(); ++i) {
    std::cout << (i ? ", " : "") << move_text(moves[i]);
  }
  std::cout << "]\n";

  coinnim_classification c{};
  if (auto claim = closed_claim(pos, c)) {
    if (warn_if_disagree(*claim, g)) return kExitDisagree;
  }
  return 0;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw CliError{"write to stdout failed"};
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot open " + path + " for writing"};
  out << text;
  out.close();
  if (!out) throw CliError{"write to " + path + " failed"};
}

coinnim_format format_from_flag(const std::string& f) {
  if (f == "json") return COINNIM_FORMAT_JSON;
  if (f == "csv") return COINNIM_FORMAT_CSV;
  return COINNIM_FORMAT_TEXT;
}

struct VerifyFlags {
  std::optional<std::string> variant;
  int32_t bound = 10;
  std::string format = "text";
  std::string output;
  bool correspondence = false;
  bool sum = false;
  bool drop_losing = false;
  bool local_law = false;
  bool calibrate = false;
  bool include_dropped = false;
  std::string push_rule = "sweep-both-off";
};

int cmd_verify(const VerifyFlags& f) {
  EnginePtr engine = make_engine();

  if (f.calibrate) {
    coinnim_push_rule selected{};
    int found = 0;
    CString summary;
    check(coinnim_calibrate_push(engine.get(), f.bound, &selected, &found, &summary.ptr));
    emit(summary.str(), f.output);
    if (found) {
      std::cerr << "calibration: "
                << (selected == COINNIM_PUSH_SWEEP_BOTH_OFF ? "sweep-both-off"
                                                            : "pusher-stops-at-edge")
                << " gives zero mismatches\n";
      return 0;
    }
    std::cerr << "calibration: no push-rule reading gives zero mismatches\n";
    return kExitMismatch;
  }

  if (int(f.correspondence) + int(f.sum) + int(f.drop_losing) + int(f.local_law) > 1) {
    throw CliError{"choose at most one of --correspondence, --sum, --drop-losing, --local-law"};
  }

  coinnim_sweep_spec spec{};
  spec.bound = f.bound;
  spec.include_dropped_states = f.include_dropped ? 1 : 0;
  spec.push_rule = f.push_rule == "pusher-stops-at-edge" ? COINNIM_PUSH_PUSHER_STOPS_AT_EDGE
                                                         : COINNIM_PUSH_SWEEP_BOTH_OFF;
  if (f.correspondence) {
    spec.check = COINNIM_CHECK_CORRESPONDENCE;
    spec.variant = COINNIM_VARIANT_JUMP;
  } else if (f.sum) {
    spec.check = COINNIM_CHECK_SUM;
    spec.variant = COINNIM_VARIANT_FREE;
  } else if (f.local_law) {
    spec.check = COINNIM_CHECK_LOCAL_LAW;
    spec.variant = COINNIM_VARIANT_ROOK;
  } else {
    if (!f.variant) throw CliError{"--variant is required for a variant sweep"};
    spec.check = f.drop_losing ? COINNIM_CHECK_DROP_LOSING : COINNIM_CHECK_VARIANT;
    spec.variant = variant_from_flag(*f.variant);
  }

  coinnim_report* raw = nullptr;
  check(coinnim_verify(engine.get(), &spec, &raw));
  ReportPtr report(raw, &coinnim_report_destroy);
  CString rendered;
  check(coinnim_report_render(report.get(), format_from_flag(f.format), &rendered.ptr));
  emit(rendered.str(), f.output);

  const size_t mismatches = coinnim_report_mismatch_count(report.get());
  if (!f.output.empty() && f.output != "-") {
    std::cerr << "total=" << coinnim_report_total(report.get()) << " mismatches=" << mismatches
              << "\n";
  }
  return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_export(const std::string& variant, int32_t bound, const std::string& output) {
  EnginePtr engine = make_engine();
  CString csv;
  check(coinnim_export_table(engine.get(), variant_from_flag(variant), bound, &csv.ptr));
  emit(csv.str(), output);
  return 0;
}

int cmd_serve(const std::string& host, int32_t port, int32_t heatmap_cap) {
  EnginePtr engine = make_engine();
  const char* cors = std::getenv("COINNIM_CORS_ORIGIN");
  coinnim_server_options options{host.c_str(), port, heatmap_cap, cors};

  // Signals go to the waiting main thread, not to the server's workers.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  coinnim_server* raw = nullptr;
  check(coinnim_server_create(engine.get(), &options, &raw));
  ServerPtr server(raw, &coinnim_server_destroy);
  std::cout << "listening on http://" << host << ":" << coinnim_server_port(server.get())
            << std::endl;

  coinnim_status run_status = COINNIM_OK;
  std::thread worker([&] { run_status = coinnim_server_run(server.get()); });
  int received = 0;
  sigwait(&signals, &received);
  coinnim_server_stop(server.get());
  worker.join();
  check(run_status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification harness for two-piece sliding games"};
  app.require_subcommand(1);

  std::optional<std::string> variant;
  std::vector<std::string> position;
  const std::vector<std::string> variants = {"rook", "push", "jump", "free"};

  auto* classify = app.add_subcommand("classify", "Closed-form set membership and P/N claim");
  classify->add_option("--variant", variant, "rook|push|jump|free")
      ->check(CLI::IsMember(variants));
  classify->add_option("position", position, "w,x,y,z shorthand or position JSON")
      ->expected(1, 2)
      ->required();

  auto* grundy = app.add_subcommand("grundy", "Exact Grundy value, outcome and winning moves");
  grundy->add_option("--variant", variant, "rook|push|jump|free")->check(CLI::IsMember(variants));
  grundy->add_option("position", position, "w,x,y,z, two col,row groups, or position JSON")
      ->expected(1, 2)
      ->required();

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Exhaustive sweep against the closed forms");
  verify->add_option("--variant", vf.variant, "rook|push|jump")->check(CLI::IsMember(variants));
  verify->add_option("--bound", vf.bound, "largest coordinate swept")->check(CLI::Range(1, 4096));
  verify->add_option("--format", vf.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("-o,--output", vf.output, "output file (default stdout)");
  verify->add_flag("--correspondence", vf.correspondence, "jump game vs. shifted rook game");
  verify->add_flag("--sum", vf.sum, "free variant vs. XOR of single coins");
  verify->add_flag("--drop-losing", vf.drop_losing, "dropping one coin always loses");
  verify->add_flag("--local-law", vf.local_law, "rook closed form obeys the P/N recursion");
  verify->add_flag("--calibrate", vf.calibrate, "sweep push under every push-rule reading");
  verify->add_flag("--include-dropped", vf.include_dropped, "also sweep one-coin states");
  verify->add_option("--push-rule", vf.push_rule, "sweep-both-off|pusher-stops-at-edge")
      ->check(CLI::IsMember({"sweep-both-off", "pusher-stops-at-edge"}));

  std::string export_variant;
  int32_t export_bound = 10;
  std::string export_output;
  auto* exporter = app.add_subcommand("export", "CSV grundy/outcome table over a bound");
  exporter->add_option("--variant", export_variant, "rook|push|jump|free")
      ->required()
      ->check(CLI::IsMember(variants));
  exporter->add_option("--bound", export_bound, "largest coordinate")->check(CLI::Range(1, 4096));
  exporter->add_option("-o,--output", export_output, "output file (default stdout)");

  std::string host = "127.0.0.1";
  int32_t port = 8080;
  int32_t heatmap_cap = 32;
  auto* serve = app.add_subcommand("serve", "Run the JSON-over-HTTP service");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port, 0 for any free port")->check(CLI::Range(0, 65535));
  serve->add_option("--heatmap-cap", heatmap_cap, "largest heatmap bound")
      ->check(CLI::Range(1, 4096));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(variant, position);
    if (*grundy) return cmd_grundy(variant, position);
    if (*verify) return cmd_verify(vf);
    if (*exporter) return cmd_export(export_variant, export_bound, export_output);
    if (*serve) return cmd_serve(host, port, heatmap_cap);
  } catch (const CliError& e) {
    std::cerr << "coinnim: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
