#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lgq/lgq.h"

namespace {

struct EngineHandle {
  lgq_engine* engine = lgq_engine_new();
  ~EngineHandle() { lgq_engine_free(engine); }
};

std::string run_report(lgq_engine* engine, const char* command, const lgq_options* options,
                       lgq_status& status, int& exit_code) {
  char* report = nullptr;
  exit_code = -1;
  status = lgq_run(engine, command, options, &report, &exit_code);
  std::string out = report ? report : "";
  lgq_string_free(report);
  return out;
}

}  // namespace

TEST_CASE("version and lifetime management") {
  CHECK(std::string(lgq_version()) == "0.1.0");
  EngineHandle h;
  REQUIRE(h.engine != nullptr);
  CHECK(std::string(lgq_last_error(h.engine)).empty());
  lgq_engine_free(nullptr);
  lgq_string_free(nullptr);
}

TEST_CASE("the full reproduction passes through the C surface") {
  EngineHandle h;
  lgq_status status = LGQ_ERROR;
  int exit_code = -1;
  const std::string report = run_report(h.engine, "reproduce-paper", nullptr, status, exit_code);
  CHECK(status == LGQ_OK);
  CHECK(exit_code == 0);
  CHECK(report.find("command: reproduce-paper") == 0);
  CHECK(report.find("fail") == std::string::npos);
}

TEST_CASE("the relation check reports the obstruction and matches expectations") {
  EngineHandle h;
  lgq_options options{};
  options.pair = "-1,0";
  options.scales = "1,2,3/2,5";
  lgq_status status = LGQ_ERROR;
  int exit_code = -1;
  const std::string report =
      run_report(h.engine, "check-parthasarathy", &options, status, exit_code);
  CHECK(status == LGQ_OK);
  CHECK(exit_code == 0);
  CHECK(report.find("Gamma_- Gamma_0^*: obstructed") != std::string::npos);
  CHECK(report.find("q^4 - (2)\xc2\xb7q^2 + (1)\xc2\xb7q^0") != std::string::npos);
  CHECK(report.find("1 tried, 1 keep every forcing residual nonzero") != std::string::npos);
}

TEST_CASE("classical specialization flips the check to solvable") {
  EngineHandle h;
  lgq_options options{};
  options.at_q = "1";
  options.json = 1;
  lgq_status status = LGQ_ERROR;
  int exit_code = -1;
  const std::string report =
      run_report(h.engine, "check-parthasarathy", &options, status, exit_code);
  CHECK(status == LGQ_OK);
  CHECK(exit_code == 0);
  CHECK(report.find("\"q\": \"1\"") != std::string::npos);
  CHECK(report.find("\"status\": \"admissible\"") != std::string::npos);
  CHECK(report.find("obstructed") == std::string::npos);
}

TEST_CASE("JSON reports are byte deterministic across engines") {
  lgq_options options{};
  options.json = 1;
  std::string first;
  std::string second;
  for (std::string* target : {&first, &second}) {
    EngineHandle h;
    lgq_status status = LGQ_ERROR;
    int exit_code = -1;
    *target = run_report(h.engine, "braiding", &options, status, exit_code);
    CHECK(status == LGQ_OK);
    CHECK(exit_code == 0);
  }
  CHECK(first == second);
  CHECK(first.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("argument validation surfaces as status codes with messages") {
  EngineHandle h;
  lgq_status status = lgq_run(h.engine, "bogus", nullptr, nullptr, nullptr);
  CHECK(status == LGQ_BAD_ARGUMENT);
  CHECK(!std::string(lgq_last_error(h.engine)).empty());

  lgq_options options{};
  options.at_q = "0";
  CHECK(lgq_run(h.engine, "braiding", &options, nullptr, nullptr) == LGQ_BAD_ARGUMENT);
  options.at_q = "seven";
  CHECK(lgq_run(h.engine, "braiding", &options, nullptr, nullptr) == LGQ_PARSE_ERROR);
  options.at_q = nullptr;

  options.pair = "2,1";
  CHECK(lgq_run(h.engine, "check-parthasarathy", &options, nullptr, nullptr) ==
        LGQ_BAD_ARGUMENT);
  options.pair = "0,0";
  CHECK(lgq_run(h.engine, "check-parthasarathy", &options, nullptr, nullptr) ==
        LGQ_BAD_ARGUMENT);
  options.pair = nullptr;

  options.scales = "1,2,3";
  CHECK(lgq_run(h.engine, "check-parthasarathy", &options, nullptr, nullptr) ==
        LGQ_BAD_ARGUMENT);
  options.scales = "1,2,3,-4";
  CHECK(lgq_run(h.engine, "check-parthasarathy", &options, nullptr, nullptr) ==
        LGQ_BAD_ARGUMENT);

  CHECK(lgq_run(nullptr, "braiding", nullptr, nullptr, nullptr) == LGQ_BAD_ARGUMENT);
  CHECK(lgq_run(h.engine, nullptr, nullptr, nullptr, nullptr) == LGQ_BAD_ARGUMENT);
}

TEST_CASE("scalar text round-trips through the canonical grammar") {
  EngineHandle h;
  const auto canon = [&](const char* text) {
    char* out = nullptr;
    const lgq_status status = lgq_scalar_roundtrip(h.engine, text, &out);
    std::string result = status == LGQ_OK && out ? out : "<" + std::to_string(status) + ">";
    lgq_string_free(out);
    return result;
  };
  CHECK(canon("q^2-q^-2") == "q^2 - q^-2");
  CHECK(canon("q^2 - q^-2") == "q^2 - q^-2");
  CHECK(canon("3/4") == "(3/4)\xc2\xb7q^0");
  CHECK(canon("(1/2)\xc2\xb7q^0 + (1)\xc2\xb7s") == "(1/2)\xc2\xb7q^0 + (1)\xc2\xb7s");
  CHECK(canon("(q^2)/(q^4 + (1)\xc2\xb7q^0)") == "(q^2)/(q^4 + (1)\xc2\xb7q^0)");

  char* out = nullptr;
  CHECK(lgq_scalar_roundtrip(h.engine, "q^^2", &out) == LGQ_PARSE_ERROR);
  CHECK(!std::string(lgq_last_error(h.engine)).empty());
  CHECK(lgq_scalar_roundtrip(h.engine, nullptr, &out) == LGQ_BAD_ARGUMENT);
  CHECK(lgq_scalar_roundtrip(nullptr, "1", &out) == LGQ_BAD_ARGUMENT);
}
