#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgq/braid.hpp"
#include "lgq/clifford.hpp"
#include "lgq/exterior.hpp"
#include "lgq/pairing.hpp"
#include "lgq/relations.hpp"
#include "lgq/uqsl2.hpp"

namespace lgq {

/// Pipeline stages exposed to front ends. The names double as the command
/// words of the report interface.
enum class Command {
  Braiding,
  Exterior,
  Pairing,
  Clifford,
  CheckParthasarathy,
  ReproducePaper,
};

struct RunConfig {
  Command command = Command::ReproducePaper;
  /// Specialize q to a positive rational instead of working symbolically.
  std::optional<Rational> at_q;
  /// Restrict the relation check to one contraction pair (row index, column
  /// index in the contraction ordering +, 0, -).
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  /// Extra positive scale assignments (c_0, c_1, c_2, c_3) to scan.
  std::vector<std::array<Rational, 4>> scale_scans;
  /// Emit the machine-readable report instead of plain text.
  bool json = false;
  /// For the clifford command: run the structural verifier and gate the exit
  /// code on it.
  bool structure_check = false;
};

struct ReportItem {
  std::string name;
  std::string status;
  std::string detail;
};

struct RunResult {
  std::vector<ReportItem> items;
  /// 0 expected outcome, 2 a check completed but contradicted the frozen
  /// expectation, 1 internal failure (set by front ends on exceptions).
  int exit_code = 0;
  /// Rendered report, text or JSON per the config. Identical configs render
  /// byte-identical reports.
  std::string report;
};

/// Caches the derivation pipeline stage by stage so repeated commands on one
/// engine reuse the expensive symbolic work. All cached values are immutable
/// once built; the engine itself is not safe for concurrent mutation.
class Engine {
 public:
  const UqModule& adjoint_module();
  const UqModule& dual_module();
  const Matrix& braiding();
  const EigenSplit& split();
  const ExteriorAlgebra& plus();
  const ExteriorAlgebra& minus();
  const CliffordData& clifford();

  RunResult run(const RunConfig& config);

  static std::string command_name(Command command);
  static std::optional<Command> parse_command(const std::string& name);

 private:
  std::optional<UqModule> adjoint_;
  std::optional<UqModule> dual_;
  std::optional<Matrix> braiding_;
  std::optional<EigenSplit> split_;
  std::optional<ExteriorAlgebra> plus_;
  std::optional<ExteriorAlgebra> minus_;
  std::optional<CliffordData> clifford_;
};

}  // namespace lgq
