#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lgq/lgq.h"

namespace {

struct CliOptions {
  std::string at_q;
  std::string pair;
  std::string scales;
  std::string output;
  bool json = false;
  bool structure_check = false;
};

int run_command(const std::string& command, const CliOptions& opts) {
  lgq_engine* engine = lgq_engine_new();
  if (engine == nullptr) {
    std::fprintf(stderr, "lgq: out of memory\n");
    return 1;
  }
  lgq_options options{};
  options.at_q = opts.at_q.empty() ? nullptr : opts.at_q.c_str();
  options.pair = opts.pair.empty() ? nullptr : opts.pair.c_str();
  options.scales = opts.scales.empty() ? nullptr : opts.scales.c_str();
  options.json = opts.json ? 1 : 0;
  options.structure_check = opts.structure_check ? 1 : 0;

  char* report = nullptr;
  int exit_code = 0;
  const lgq_status status = lgq_run(engine, command.c_str(), &options, &report, &exit_code);

  int rc = 0;
  switch (status) {
    case LGQ_OK:
    case LGQ_UNEXPECTED_RESULT:
      if (opts.output.empty()) {
        std::fwrite(report, 1, std::strlen(report), stdout);
      } else {
        std::ofstream out(opts.output, std::ios::binary);
        out.write(report, static_cast<std::streamsize>(std::strlen(report)));
        if (!out) {
          std::fprintf(stderr, "lgq: cannot write %s\n", opts.output.c_str());
          rc = 1;
        }
      }
      if (rc == 0) rc = exit_code;
      break;
    case LGQ_BAD_ARGUMENT:
    case LGQ_PARSE_ERROR:
      std::fprintf(stderr, "lgq: %s\n", lgq_last_error(engine));
      rc = 64;
      break;
    default:
      std::fprintf(stderr, "lgq: %s\n", lgq_last_error(engine));
      rc = 1;
      break;
  }
  lgq_string_free(report);
  lgq_engine_free(engine);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  // Fold the value of --pair into one token so a weight label with a leading
  // dash ("-1,0") is not mistaken for an option name.
  std::vector<std::string> merged;
  merged.reserve(static_cast<std::size_t>(argc));
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--pair" && i + 1 < argc) {
      arg += "=";
      arg += argv[++i];
    }
    merged.push_back(std::move(arg));
  }
  std::vector<char*> args;
  args.reserve(merged.size() + 1);
  args.push_back(argv[0]);
  for (std::string& arg : merged) args.push_back(arg.data());

  CLI::App app{"Exact verifier for the quantum Clifford algebra of LG(2,4)"};
  app.set_version_flag("--version", std::string(lgq_version()));
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  CliOptions opts;
  app.add_option("--at-q", opts.at_q,
                 "Specialize q to a positive rational such as 1 or 3/4");
  app.add_option("--pair", opts.pair,
                 "Weight labels of one contraction pair, e.g. -1,0 for Gamma_- Gamma_0^*");
  app.add_option("--scales", opts.scales,
                 "Four positive rationals c0,c1,c2,c3 to scan as scale assignments");
  app.add_option("--output", opts.output, "Write the report to this file instead of stdout");
  app.add_flag("--json", opts.json, "Emit the machine-readable JSON report");
  app.add_flag("--check", opts.structure_check,
               "With clifford: run the structural verifier and gate the exit code on it");

  CLI::App* braiding =
      app.add_subcommand("braiding", "Derive the braiding on the tensor square");
  CLI::App* exterior = app.add_subcommand(
      "exterior", "Print the multiplication tables of both quantum exterior algebras");
  CLI::App* pairing =
      app.add_subcommand("pairing", "Print the invariant dual pairing per degree");
  CLI::App* clifford = app.add_subcommand(
      "clifford", "Print the contraction, adjoint, and inner product matrices");
  CLI::App* check_flat = app.add_subcommand(
      "check-parthasarathy", "Decide whether quadratic exchange relations exist");
  CLI::App* check = app.add_subcommand("check", "Run one of the named checks");
  CLI::App* check_nested = check->add_subcommand(
      "parthasarathy", "Decide whether quadratic exchange relations exist");
  check->require_subcommand(1);
  CLI::App* reproduce = app.add_subcommand(
      "reproduce-paper", "Replay every derivation and compare against the tabulated values");
  for (CLI::App* sub :
       {braiding, exterior, pairing, clifford, check_flat, check, check_nested, reproduce}) {
    sub->fallthrough();
  }

  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  std::string command;
  if (braiding->parsed()) command = "braiding";
  if (exterior->parsed()) command = "exterior";
  if (pairing->parsed()) command = "pairing";
  if (clifford->parsed()) command = "clifford";
  if (check_flat->parsed() || check_nested->parsed()) command = "check-parthasarathy";
  if (reproduce->parsed()) command = "reproduce-paper";

  if (command != "check-parthasarathy" && (!opts.pair.empty() || !opts.scales.empty())) {
    std::fprintf(stderr, "lgq: --pair and --scales apply only to the check command\n");
    return 64;
  }
  if (command != "clifford" && opts.structure_check) {
    std::fprintf(stderr, "lgq: --check applies only to the clifford command\n");
    return 64;
  }
  if (command == "reproduce-paper" && !opts.at_q.empty()) {
    std::fprintf(stderr, "lgq: the full reproduction runs symbolically; drop --at-q\n");
    return 64;
  }
  return run_command(command, opts);
}
