#include "lgq/engine.hpp"

#include <cstdio>
#include <utility>

#include "lgq/errors.hpp"
#include "lgq/reference.hpp"

namespace lgq {

namespace {

std::string gamma_symbol(std::size_t a) {
  if (a == 0) return "Gamma_+";
  if (a == 1) return "Gamma_0";
  return "Gamma_-";
}

std::string show_scalar(const Scalar& x, const std::optional<Rational>& q0) {
  if (!q0) return x.str();
  return rational_str(x.evaluate_rational(*q0));
}

std::string show_matrix(const Matrix& m, const std::optional<Rational>& q0) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += show_scalar(m.at(r, c), q0);
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string show_combination(const Vec& v, const std::vector<std::string>& labels,
                             const std::optional<Rational>& q0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + show_scalar(v[i], q0) + ")\xc2\xb7" + labels[i];
  }
  return out.empty() ? "0" : out;
}

Rational eval_poly(const LaurentPoly& p, const Rational& q0) {
  Rational acc(0);
  if (p.is_zero()) return acc;
  for (int e = p.lowest_exponent(); e <= p.highest_exponent(); ++e) {
    const Rational c = p.coeff(e);
    if (sgn(c) != 0) acc += c * pow_rational(q0, e);
  }
  return acc;
}

Matrix diagonal_from(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(ch));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string q_field(const RunConfig& config) {
  return config.at_q ? rational_str(*config.at_q) : std::string("generic");
}

std::string render_text(const RunConfig& config, const std::vector<ReportItem>& items) {
  std::string out = "command: " + Engine::command_name(config.command) + "\n";
  out += "q: " + q_field(config) + "\n";
  for (const ReportItem& item : items) {
    out += item.name + ": ";
    if (item.status == "ok") {
      out += item.detail.empty() ? std::string("ok") : item.detail;
    } else {
      out += item.status;
      if (!item.detail.empty()) out += " (" + item.detail + ")";
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const RunConfig& config, const std::vector<ReportItem>& items) {
  std::string out = "{\n";
  out += "  \"schema_version\": 1,\n";
  out += "  \"command\": \"" + json_escape(Engine::command_name(config.command)) + "\",\n";
  out += "  \"q\": \"" + json_escape(q_field(config)) + "\",\n";
  out += "  \"results\": [";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "{\"name\": \"" + json_escape(items[i].name) + "\", \"status\": \"" +
           json_escape(items[i].status) + "\", \"detail\": \"" + json_escape(items[i].detail) +
           "\"}";
  }
  out += items.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

void braiding_items(Engine& engine, const RunConfig& config, std::vector<ReportItem>& items) {
  const Matrix& r = engine.braiding();
  const UqModule vv = tensor(engine.adjoint_module(), engine.adjoint_module());
  for (std::size_t row = 0; row < r.rows(); ++row) {
    std::string entries;
    for (std::size_t col = 0; col < r.cols(); ++col) {
      if (col) entries += ", ";
      entries += show_scalar(r.at(row, col), config.at_q);
    }
    items.push_back({"R row " + vv.labels[row], "ok", "[" + entries + "]"});
  }
  const EigenSplit& split = engine.split();
  for (std::size_t i = 0; i < split.eigenvalues.size(); ++i) {
    items.push_back({"eigenvalue " + show_scalar(split.eigenvalues[i], config.at_q), "ok",
                     "multiplicity " + std::to_string(split.multiplicities[i])});
  }
  items.push_back({"symmetric span dimension", "ok", std::to_string(split.S2.cols())});
  items.push_back({"antisymmetric span dimension", "ok", std::to_string(split.Lambda2.cols())});
}

void exterior_side_items(const std::string& tag, const ExteriorAlgebra& alg,
                         const std::optional<Rational>& q0, std::vector<ReportItem>& items) {
  const std::vector<std::size_t> dims = alg.dims();
  std::string dims_text;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) dims_text += ", ";
    dims_text += std::to_string(dims[k]);
  }
  items.push_back({tag + " graded dimensions", "ok", dims_text});
  for (const auto& [k, l] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
    for (std::size_t i = 0; i < dims[k]; ++i) {
      for (std::size_t j = 0; j < dims[l]; ++j) {
        const Vec prod = alg.wedge(k, unit_vec(dims[k], i), l, unit_vec(dims[l], j));
        items.push_back({tag + ": " + alg.graded[k].labels[i] + " \xe2\x88\xa7 " +
                             alg.graded[l].labels[j],
                         "ok", show_combination(prod, alg.graded[k + l].labels, q0)});
      }
    }
  }
}

void pairing_items(Engine& engine, const RunConfig& config, std::vector<ReportItem>& items) {
  const ExteriorAlgebra& plus = engine.plus();
  const ExteriorAlgebra& minus = engine.minus();
  const std::vector<Scalar> ones(4, Scalar::one());
  const PairingData unscaled = build_pairing(minus, plus, ones);
  const PairingData& standard = engine.clifford().pairing;
  const std::vector<std::size_t> dims = plus.dims();
  for (const auto& [tag, pd] :
       {std::pair<const char*, const PairingData*>{"unscaled", &unscaled},
        {"standard", &standard}}) {
    for (std::size_t k = 0; k < dims.size(); ++k) {
      for (std::size_t i = 0; i < dims[k]; ++i) {
        items.push_back({std::string(tag) + " degree " + std::to_string(k) +
                             " \xe2\x9f\xa8" + minus.graded[k].labels[i] + ", " +
                             plus.graded[k].labels[i] + "\xe2\x9f\xa9",
                         "ok", show_scalar(pd->gram[k].at(i, i), config.at_q)});
      }
    }
  }
  for (std::size_t k = 0; k < standard.scales.size(); ++k) {
    items.push_back({"standard scale degree " + std::to_string(k), "ok",
                     show_scalar(standard.scales[k], config.at_q)});
  }
}

int clifford_items(Engine& engine, const RunConfig& config, std::vector<ReportItem>& items) {
  const CliffordData& cd = engine.clifford();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t k = 1; k < cd.gamma[a].blocks.size(); ++k) {
      items.push_back({gamma_symbol(a) + " block degree " + std::to_string(k), "ok",
                       show_matrix(cd.gamma[a].blocks[k], config.at_q)});
    }
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t k = 1; k < cd.gamma_adjoint[a].blocks.size(); ++k) {
      items.push_back({gamma_symbol(a) + "^* block into degree " + std::to_string(k), "ok",
                       show_matrix(cd.gamma_adjoint[a].blocks[k - 1], config.at_q)});
    }
  }
  for (std::size_t k = 0; k < cd.inner.size(); ++k) {
    items.push_back({"inner product degree " + std::to_string(k), "ok",
                     show_matrix(cd.inner[k], config.at_q)});
  }
  if (!config.structure_check) return 0;
  const AxiomReport report = verify_clifford_structure(cd);
  for (const auto& [name, ok] : report.checks) {
    items.push_back({name, ok ? "pass" : "fail", ""});
  }
  return report.all_ok() ? 0 : 1;
}

int check_parthasarathy_items(Engine& engine, const RunConfig& config,
                              std::vector<ReportItem>& items) {
  const CliffordData& cd = engine.clifford();
  const std::vector<int>& wexp = cd.minus.graded[1].k_exp;

  // The frozen expectation: the two extreme-weight pairs always admit a
  // solution, the four mixed pairs are ruled out exactly when the symbolic
  // obstruction survives the requested specialization.
  const auto expected_obstructed = [&](std::size_t i, std::size_t j) {
    int diff = wexp[i] - wexp[j];
    if (diff < 0) diff = -diff;
    if (diff == 4) return false;
    if (!config.at_q) return true;
    const LaurentPoly symbolic = solve_relation(cd, i, j).obstruction;
    return sgn(eval_poly(symbolic, *config.at_q)) != 0;
  };

  const auto pair_item = [&](const SolveReport& r) {
    ReportItem item;
    item.name = gamma_symbol(r.i) + " " + gamma_symbol(r.j) + "^*";
    item.status = r.status == SolveStatus::Obstructed ? "obstructed" : "solvable";
    if (r.status == SolveStatus::Obstructed) {
      item.detail = config.at_q ? std::string("forcing rows stay nonzero")
                                : "obstruction " + r.obstruction.str();
    } else if (r.coupling) {
      item.detail = "kappa2/kappa1 = " + r.coupling->str();
    }
    if (!r.scans.empty()) {
      std::size_t residual_ok = 0;
      for (const ScanAnnotation& s : r.scans) {
        if (s.forced_residuals_nonzero) ++residual_ok;
      }
      item.detail += "; scale scans: " + std::to_string(r.scans.size()) + " tried, " +
                     std::to_string(residual_ok) + " keep every forcing residual nonzero";
    }
    return item;
  };

  bool matches = true;
  if (config.pair) {
    const auto [i, j] = *config.pair;
    const SolveReport r = solve_relation(cd, i, j, config.scale_scans, config.at_q);
    items.push_back(pair_item(r));
    matches = (r.status == SolveStatus::Obstructed) == expected_obstructed(i, j);
  } else {
    const Verdict verdict = parthasarathy_verdict(cd, config.scale_scans, config.at_q);
    for (const SolveReport& r : verdict.reports) {
      items.push_back(pair_item(r));
      if ((r.status == SolveStatus::Obstructed) != expected_obstructed(r.i, r.j)) {
        matches = false;
      }
    }
    ReportItem verdict_item;
    verdict_item.name = "verdict";
    verdict_item.status = verdict.relations_exist ? "admissible" : "impossible";
    if (verdict.witness) {
      verdict_item.detail = "witness " + gamma_symbol(verdict.witness->first) + " " +
                            gamma_symbol(verdict.witness->second) + "^*";
    }
    items.push_back(verdict_item);
  }
  return matches ? 0 : 2;
}

int reproduce_items(Engine& engine, std::vector<ReportItem>& items) {
  const auto push = [&items](const std::string& name, bool ok, const std::string& detail) {
    items.push_back({name, ok ? "pass" : "fail", detail});
  };

  const Matrix& r = engine.braiding();
  push("braiding matrix matches the tabulated operator", r == reference::braiding_matrix(), "");
  push("Yang-Baxter identity holds on the tensor cube", yang_baxter_residual(r).is_zero(), "");

  const EigenSplit& split = engine.split();
  const bool mults = split.multiplicities == std::vector<std::size_t>{5, 3, 1};
  push("braiding eigenvalues carry multiplicities 5, 3, 1", mults, "");

  const Matrix id = Matrix::identity(r.rows());
  const Matrix f1 = r - id.scaled(Scalar::q_power(2));
  const Matrix f2 = r + id.scaled(Scalar::q_power(-2));
  const Matrix f3 = r - id.scaled(Scalar::q_power(-4));
  const bool cubic = (f1 * f2 * f3).is_zero() && !(f1 * f2).is_zero() &&
                     !(f1 * f3).is_zero() && !(f2 * f3).is_zero();
  push("minimal polynomial of the braiding is the full cubic", cubic, "");

  const ExteriorAlgebra& plus = engine.plus();
  const ExteriorAlgebra& minus = engine.minus();
  const std::vector<std::size_t> expected_dims{1, 3, 3, 1};
  push("graded dimensions are 1, 3, 3, 1",
       plus.dims() == expected_dims && minus.dims() == expected_dims, "");

  bool wedges = true;
  const Matrix table_plus = reference::wedge_table_plus();
  const Matrix table_minus = reference::wedge_table_minus();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (plus.wedge(1, unit_vec(3, a), 1, unit_vec(3, b)) != table_plus.column(3 * a + b)) {
        wedges = false;
      }
      if (minus.wedge(1, unit_vec(3, a), 1, unit_vec(3, b)) != table_minus.column(3 * a + b)) {
        wedges = false;
      }
    }
  }
  push("wedge relations match the tabulated constants", wedges, "");

  const Vec w0_sq = minus.wedge(1, unit_vec(3, 1), 1, unit_vec(3, 1));
  const bool kill = !is_zero(w0_sq) && is_zero(minus.wedge(1, unit_vec(3, 2), 2, w0_sq));
  push("the weight zero square is nonzero yet dies against a third factor", kill, "");

  const std::vector<Scalar> ones(4, Scalar::one());
  const PairingData unscaled = build_pairing(minus, plus, ones);
  push("unscaled degree 2 pairings match",
       unscaled.gram[2] == diagonal_from(reference::unscaled_deg2_diag()), "");

  const CliffordData& cd = engine.clifford();
  const bool standard_table =
      cd.pairing.gram[0] == Matrix::identity(1) && cd.pairing.gram[1] == Matrix::identity(3) &&
      cd.pairing.gram[2] == diagonal_from(reference::scaled_deg2_diag()) &&
      cd.pairing.gram[3] == Matrix::identity(1);
  push("standard pairing table matches", standard_table, "");

  bool inner = true;
  for (int k = 0; k <= 3; ++k) {
    if (cd.inner[static_cast<std::size_t>(k)] != reference::inner_product_matrix(k)) {
      inner = false;
    }
  }
  push("inner product matrices match", inner, "");

  bool blocks = true;
  for (std::size_t a = 0; a < 3; ++a) {
    for (int k = 1; k <= 3; ++k) {
      if (cd.gamma[a].blocks[static_cast<std::size_t>(k)] !=
          reference::gamma_block(static_cast<int>(a), k)) {
        blocks = false;
      }
      if (cd.gamma_adjoint[a].blocks[static_cast<std::size_t>(k) - 1] !=
          reference::gamma_adjoint_block(static_cast<int>(a), k)) {
        blocks = false;
      }
    }
  }
  push("contraction and adjoint blocks match the tabulated matrices", blocks, "");

  push("duality and adjointness identities hold", verify_clifford_structure(cd).all_ok(), "");
  push("classical limit obeys canonical anticommutation", verify_car_at_one(cd).all_ok(), "");

  const SolveReport headline = solve_relation(cd, 2, 1);
  push("exchange obstruction equals the square of q minus its inverse",
       headline.status == SolveStatus::Obstructed &&
           headline.obstruction == reference::obstruction_poly(),
       reference::obstruction_text());

  const Verdict verdict = parthasarathy_verdict(cd);
  const bool no_go = !verdict.relations_exist && verdict.witness &&
                     *verdict.witness == std::make_pair(std::size_t{2}, std::size_t{1});
  push("no quadratic exchange scheme exists at generic q", no_go,
       "witness Gamma_- Gamma_0^*");

  for (const ReportItem& item : items) {
    if (item.status != "pass") return 1;
  }
  return 0;
}

}  // namespace

const UqModule& Engine::adjoint_module() {
  if (!adjoint_) adjoint_ = make_adjoint_module();
  return *adjoint_;
}

const UqModule& Engine::dual_module() {
  if (!dual_) dual_ = make_dual_module();
  return *dual_;
}

const Matrix& Engine::braiding() {
  if (!braiding_) braiding_ = derive_braiding(adjoint_module());
  return *braiding_;
}

const EigenSplit& Engine::split() {
  if (!split_) {
    split_ = eigensplit(braiding(),
                        {Scalar::q_power(2), -Scalar::q_power(-2), Scalar::q_power(-4)});
  }
  return *split_;
}

const ExteriorAlgebra& Engine::plus() {
  if (!plus_) {
    plus_ = build_exterior(adjoint_module(), split().S2, split().Lambda2, plus_basis_plan());
  }
  return *plus_;
}

const ExteriorAlgebra& Engine::minus() {
  if (!minus_) {
    const Matrix psi2 = Matrix::kron(iso_psi(), iso_psi());
    minus_ = build_exterior(dual_module(), psi2 * split().S2, psi2 * split().Lambda2,
                            minus_basis_plan());
  }
  return *minus_;
}

const CliffordData& Engine::clifford() {
  if (!clifford_) {
    clifford_ = build_clifford(plus(), minus(), build_standard_pairing(minus(), plus()));
  }
  return *clifford_;
}

RunResult Engine::run(const RunConfig& config) {
  if (config.at_q && sgn(*config.at_q) <= 0) {
    throw StructureError("q specialization must be a positive rational");
  }
  RunResult result;
  switch (config.command) {
    case Command::Braiding:
      braiding_items(*this, config, result.items);
      break;
    case Command::Exterior:
      exterior_side_items("u_+", plus(), config.at_q, result.items);
      exterior_side_items("u_-", minus(), config.at_q, result.items);
      break;
    case Command::Pairing:
      pairing_items(*this, config, result.items);
      break;
    case Command::Clifford:
      result.exit_code = clifford_items(*this, config, result.items);
      break;
    case Command::CheckParthasarathy:
      result.exit_code = check_parthasarathy_items(*this, config, result.items);
      break;
    case Command::ReproducePaper:
      result.exit_code = reproduce_items(*this, result.items);
      break;
  }
  result.report = config.json ? render_json(config, result.items)
                              : render_text(config, result.items);
  return result;
}

std::string Engine::command_name(Command command) {
  switch (command) {
    case Command::Braiding: return "braiding";
    case Command::Exterior: return "exterior";
    case Command::Pairing: return "pairing";
    case Command::Clifford: return "clifford";
    case Command::CheckParthasarathy: return "check-parthasarathy";
    case Command::ReproducePaper: return "reproduce-paper";
  }
  return "unknown";
}

std::optional<Command> Engine::parse_command(const std::string& name) {
  if (name == "braiding") return Command::Braiding;
  if (name == "exterior") return Command::Exterior;
  if (name == "pairing") return Command::Pairing;
  if (name == "clifford") return Command::Clifford;
  if (name == "check-parthasarathy") return Command::CheckParthasarathy;
  if (name == "reproduce-paper") return Command::ReproducePaper;
  return std::nullopt;
}

}  // namespace lgq
