#include "lgq/lgq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "lgq/engine.hpp"
#include "lgq/errors.hpp"

struct lgq_engine {
  lgq::Engine engine;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

/* Contraction indices are addressed by weight label: w_1 carries weight +1
 * (Gamma_+), w_0 weight 0, w_-1 weight -1 (Gamma_-). */
bool parse_weight_label(const std::string& token, std::size_t& index) {
  if (token == "+1" || token == "1" || token == "+") {
    index = 0;
    return true;
  }
  if (token == "0") {
    index = 1;
    return true;
  }
  if (token == "-1" || token == "-") {
    index = 2;
    return true;
  }
  return false;
}

lgq_status fill_config(lgq_engine& handle, const std::string& command,
                       const lgq_options* options, lgq::RunConfig& config) {
  const auto parsed = lgq::Engine::parse_command(command);
  if (!parsed) {
    handle.last_error = "unknown command: " + command;
    return LGQ_BAD_ARGUMENT;
  }
  config.command = *parsed;
  if (options == nullptr) return LGQ_OK;

  config.json = options->json != 0;
  config.structure_check = options->structure_check != 0;

  if (options->at_q != nullptr) {
    lgq::Rational q0;
    try {
      q0 = lgq::parse_rational(options->at_q);
    } catch (const lgq::ParseError& e) {
      handle.last_error = e.what();
      return LGQ_PARSE_ERROR;
    }
    if (sgn(q0) <= 0) {
      handle.last_error = "q specialization must be a positive rational";
      return LGQ_BAD_ARGUMENT;
    }
    config.at_q = q0;
  }

  if (options->pair != nullptr) {
    const std::vector<std::string> parts = split_commas(options->pair);
    std::size_t i = 0;
    std::size_t j = 0;
    if (parts.size() != 2 || !parse_weight_label(parts[0], i) ||
        !parse_weight_label(parts[1], j)) {
      handle.last_error =
          "pair must be two weight labels from {+1, 0, -1} separated by a comma";
      return LGQ_BAD_ARGUMENT;
    }
    if (i == j) {
      handle.last_error = "pair must name two distinct contractions";
      return LGQ_BAD_ARGUMENT;
    }
    config.pair = std::make_pair(i, j);
  }

  if (options->scales != nullptr) {
    const std::vector<std::string> parts = split_commas(options->scales);
    if (parts.size() != 4) {
      handle.last_error = "scales must list exactly four positive rationals";
      return LGQ_BAD_ARGUMENT;
    }
    std::array<lgq::Rational, 4> c;
    for (std::size_t k = 0; k < 4; ++k) {
      try {
        c[k] = lgq::parse_rational(parts[k]);
      } catch (const lgq::ParseError& e) {
        handle.last_error = e.what();
        return LGQ_PARSE_ERROR;
      }
      if (sgn(c[k]) <= 0) {
        handle.last_error = "scales must be positive";
        return LGQ_BAD_ARGUMENT;
      }
    }
    config.scale_scans.push_back(c);
  }
  return LGQ_OK;
}

}  // namespace

extern "C" {

const char* lgq_version(void) { return "0.1.0"; }

lgq_engine* lgq_engine_new(void) {
  try {
    return new lgq_engine();
  } catch (...) {
    return nullptr;
  }
}

void lgq_engine_free(lgq_engine* engine) { delete engine; }

const char* lgq_last_error(const lgq_engine* engine) {
  if (engine == nullptr) return "";
  return engine->last_error.c_str();
}

lgq_status lgq_run(lgq_engine* engine, const char* command, const lgq_options* options,
                   char** report_out, int* exit_code_out) {
  if (engine == nullptr) return LGQ_BAD_ARGUMENT;
  engine->last_error.clear();
  if (command == nullptr) {
    engine->last_error = "command must not be NULL";
    return LGQ_BAD_ARGUMENT;
  }

  lgq::RunConfig config;
  const lgq_status prep = fill_config(*engine, command, options, config);
  if (prep != LGQ_OK) return prep;

  try {
    const lgq::RunResult result = engine->engine.run(config);
    if (report_out != nullptr) {
      char* report = dup_string(result.report);
      if (report == nullptr) {
        engine->last_error = "out of memory";
        return LGQ_ERROR;
      }
      *report_out = report;
    }
    if (exit_code_out != nullptr) *exit_code_out = result.exit_code;
    return result.exit_code == 0 ? LGQ_OK : LGQ_UNEXPECTED_RESULT;
  } catch (const lgq::PoleError& e) {
    engine->last_error = e.what();
    return LGQ_POLE;
  } catch (const lgq::DivisionByZeroError& e) {
    engine->last_error = e.what();
    return LGQ_POLE;
  } catch (const lgq::ParseError& e) {
    engine->last_error = e.what();
    return LGQ_PARSE_ERROR;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return LGQ_ERROR;
  }
}

lgq_status lgq_scalar_roundtrip(lgq_engine* engine, const char* text, char** canonical_out) {
  if (engine == nullptr) return LGQ_BAD_ARGUMENT;
  engine->last_error.clear();
  if (text == nullptr || canonical_out == nullptr) {
    engine->last_error = "text and canonical_out must not be NULL";
    return LGQ_BAD_ARGUMENT;
  }
  try {
    const std::string canonical = lgq::Scalar::parse(text).str();
    char* out = dup_string(canonical);
    if (out == nullptr) {
      engine->last_error = "out of memory";
      return LGQ_ERROR;
    }
    *canonical_out = out;
    return LGQ_OK;
  } catch (const lgq::ParseError& e) {
    engine->last_error = e.what();
    return LGQ_PARSE_ERROR;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return LGQ_ERROR;
  }
}

void lgq_string_free(char* text) { std::free(text); }

}  // extern "C"
