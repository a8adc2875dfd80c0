#include "lgq/relations.hpp"

#include <utility>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

std::string gamma_symbol(std::size_t a) {
  if (a == 0) return "Gamma_+";
  if (a == 1) return "Gamma_0";
  return "Gamma_-";
}

Matrix specialize_matrix(const Matrix& m, const Rational& q0) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(r, c) = Scalar::from_rational(m.at(r, c).evaluate_rational(q0));
    }
  }
  return out;
}

GradedOperator specialize_op(const GradedOperator& t, const Rational& q0) {
  GradedOperator out = t;
  for (Matrix& blk : out.blocks) blk = specialize_matrix(blk, q0);
  return out;
}

LaurentPoly forcing_numerator(const Scalar& coeff) {
  if (coeff.has_s_part()) {
    throw DerivationError("relation coefficients unexpectedly leave the q-line");
  }
  return coeff.a().num();
}

}  // namespace

std::string SolveReport::summary() const {
  std::string out = gamma_symbol(i) + " " + gamma_symbol(j) + "^*";
  if (at_q) out += " at q = " + rational_str(*at_q);
  out += ": ";
  out += status == SolveStatus::Obstructed ? "obstructed" : "solvable for generic scales";
  out += "\n  terms:";
  if (terms.empty()) out += " (none admissible)";
  for (const auto& [k, l] : terms) out += " " + gamma_symbol(k) + "^* " + gamma_symbol(l) + ";";
  out += "\n  degree-0 face consistent: ";
  out += degree0_consistent ? "yes" : "no";
  if (status == SolveStatus::Obstructed) {
    out += "\n  obstruction: " + obstruction.str();
  }
  if (coupling) {
    out += "\n  kappa2/kappa1 = " + coupling->str();
  }
  if (!deg1_solution.empty()) {
    out += "\n  degree-1 solution at kappa1 = 1:";
    for (std::size_t t = 0; t < terms.size(); ++t) {
      out += " t[" + gamma_symbol(terms[t].first) + "^* " + gamma_symbol(terms[t].second) +
             "] = " + deg1_solution[t].str() + ";";
    }
  }
  if (!scans.empty()) {
    std::size_t residual_ok = 0;
    std::size_t compatible = 0;
    for (const ScanAnnotation& s : scans) {
      if (s.forced_residuals_nonzero) ++residual_ok;
      if (s.scales_compatible) ++compatible;
    }
    out += "\n  scale scans: " + std::to_string(scans.size()) + " tried, " +
           std::to_string(residual_ok) + " keep every forcing residual nonzero, " +
           std::to_string(compatible) + " satisfy all constraints identically";
  }
  return out;
}

SolveReport solve_relation(const CliffordData& cd, std::size_t i, std::size_t j,
                           const std::vector<std::array<Rational, 4>>& c_scans,
                           const std::optional<Rational>& at_q) {
  if (i > 2 || j > 2 || i == j) {
    throw StructureError("relation solve expects two distinct contraction indices");
  }
  SolveReport report;
  report.i = i;
  report.j = j;
  report.at_q = at_q;

  const std::vector<int>& wexp = cd.minus.graded[1].k_exp;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) {
      if (wexp[l] - wexp[k] == wexp[i] - wexp[j]) report.terms.emplace_back(k, l);
    }
  }
  const std::size_t nt = report.terms.size();

  GradedOperator lhs = compose(cd.gamma[i], cd.gamma_adjoint[j]);
  std::vector<GradedOperator> rhs;
  for (const auto& [k, l] : report.terms) {
    rhs.push_back(compose(cd.gamma_adjoint[k], cd.gamma[l]));
  }
  if (at_q) {
    lhs = specialize_op(lhs, *at_q);
    for (GradedOperator& op : rhs) op = specialize_op(op, *at_q);
  }

  report.degree0_consistent = lhs.blocks[0].is_zero();

  // One homogeneous equation per degree and matrix entry, in the unknowns
  // (t_1, ..., t_nt, kappa1, kappa2). Degree 1 carries kappa1, degree 2
  // kappa2; the degree-3 face has an identically zero left side, so its rows
  // constrain only the t's.
  const std::vector<std::size_t> dims = cd.plus.dims();
  std::vector<Vec> rows;
  for (std::size_t deg = 1; deg < dims.size(); ++deg) {
    for (std::size_t r = 0; r < dims[deg]; ++r) {
      for (std::size_t c = 0; c < dims[deg]; ++c) {
        Vec row(nt + 2, Scalar::zero());
        for (std::size_t t = 0; t < nt; ++t) row[t] = -rhs[t].blocks[deg].at(r, c);
        if (deg == 1) row[nt] = lhs.blocks[deg].at(r, c);
        if (deg == 2) row[nt + 1] = lhs.blocks[deg].at(r, c);
        bool nonzero = false;
        for (const Scalar& v : row) {
          if (!v.is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  // Eliminate the t columns with exact pivots.
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < nt; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][col].is_zero()) continue;
      if (pivot == rows.size() || complexity(rows[r][col]) < complexity(rows[pivot][col])) {
        pivot = r;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    const Scalar inv = rows[pivot][col].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col] * inv;
      for (std::size_t c2 = 0; c2 < nt + 2; ++c2) {
        rows[r][c2] -= factor * rows[pivot][c2];
      }
    }
  }

  // Rows that received no t pivot now constrain only the two kappas.
  std::vector<Scalar> forced;
  std::vector<std::pair<Scalar, Scalar>> coupling_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (used[r]) continue;
    for (std::size_t c2 = 0; c2 < nt; ++c2) {
      if (!rows[r][c2].is_zero()) {
        throw DerivationError("elimination left a mixed row behind");
      }
    }
    const Scalar& alpha = rows[r][nt];
    const Scalar& beta = rows[r][nt + 1];
    if (alpha.is_zero() && beta.is_zero()) continue;
    if (alpha.is_zero() || beta.is_zero()) {
      forced.push_back(alpha.is_zero() ? beta : alpha);
    } else {
      coupling_rows.emplace_back(alpha, beta);
    }
  }

  bool coupling_consistent = true;
  if (!coupling_rows.empty()) {
    const auto& [a0, b0] = coupling_rows[0];
    std::vector<Scalar> minors;
    for (std::size_t r = 1; r < coupling_rows.size(); ++r) {
      const Scalar minor = a0 * coupling_rows[r].second - coupling_rows[r].first * b0;
      if (!minor.is_zero()) {
        coupling_consistent = false;
        minors.push_back(minor);
      }
    }
    if (coupling_consistent) {
      const Scalar ratio = -(a0 * b0.inverse());
      if (ratio.has_s_part()) {
        throw DerivationError("scale coupling unexpectedly leaves the q-line");
      }
      report.coupling = ratio.a();
    } else if (forced.empty()) {
      LaurentPoly g;
      for (const Scalar& minor : minors) g = poly_gcd(g, forcing_numerator(minor));
      report.status = SolveStatus::Obstructed;
      report.obstruction = g;
    }
  }
  if (!forced.empty()) {
    LaurentPoly g;
    for (const Scalar& f : forced) g = poly_gcd(g, forcing_numerator(f));
    report.status = SolveStatus::Obstructed;
    report.obstruction = g;
  } else if (coupling_consistent) {
    report.status = SolveStatus::SolvableGeneric;
  }

  // Degree-1 face on its own, normalized to kappa1 = 1.
  {
    Matrix bmat(dims[1] * dims[1], nt);
    Vec target(dims[1] * dims[1], Scalar::zero());
    std::size_t row = 0;
    for (std::size_t r = 0; r < dims[1]; ++r) {
      for (std::size_t c = 0; c < dims[1]; ++c) {
        for (std::size_t t = 0; t < nt; ++t) bmat.at(row, t) = rhs[t].blocks[1].at(r, c);
        target[row] = lhs.blocks[1].at(r, c);
        ++row;
      }
    }
    const auto sol = solve_linear(bmat, target);
    if (sol && sol->homogeneous.empty()) report.deg1_solution = sol->particular;
  }

  for (const auto& c : c_scans) {
    for (const Rational& ck : c) {
      if (sgn(ck) <= 0) throw StructureError("scale assignments must be positive");
    }
    ScanAnnotation ann;
    ann.c = c;
    ann.kappa1 = c[2] * c[0] / (c[1] * c[1]);
    ann.kappa2 = c[3] * c[1] / (c[2] * c[2]);
    const Scalar k1 = Scalar::from_rational(ann.kappa1);
    const Scalar k2 = Scalar::from_rational(ann.kappa2);
    for (const Scalar& f : forced) {
      if (f.is_zero()) ann.forced_residuals_nonzero = false;
      ann.scales_compatible = false;
    }
    for (const auto& [alpha, beta] : coupling_rows) {
      if (!(alpha * k1 + beta * k2).is_zero()) ann.scales_compatible = false;
    }
    report.scans.push_back(std::move(ann));
  }
  return report;
}

std::string Verdict::summary() const {
  std::string out = "quadratic exchange scheme at ";
  out += at_q ? ("q = " + rational_str(*at_q)) : std::string("generic q");
  out += ": ";
  out += relations_exist ? "admissible" : "impossible";
  if (witness) {
    out += "\nwitness pair: " + gamma_symbol(witness->first) + " " +
           gamma_symbol(witness->second) + "^*";
  }
  for (const SolveReport& r : reports) {
    out += "\n- " + gamma_symbol(r.i) + " " + gamma_symbol(r.j) + "^*: ";
    if (r.status == SolveStatus::Obstructed) {
      out += "obstructed, needs " + r.obstruction.str() + " = 0";
    } else {
      out += "solvable";
      if (r.coupling) out += ", kappa2/kappa1 = " + r.coupling->str();
    }
  }
  return out;
}

Verdict parthasarathy_verdict(const CliffordData& cd,
                              const std::vector<std::array<Rational, 4>>& c_scans,
                              const std::optional<Rational>& at_q) {
  Verdict verdict;
  verdict.at_q = at_q;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      verdict.reports.push_back(solve_relation(cd, i, j, c_scans, at_q));
    }
  }
  verdict.relations_exist = true;
  for (const SolveReport& r : verdict.reports) {
    if (r.status == SolveStatus::Obstructed) {
      verdict.relations_exist = false;
      if (!verdict.witness) verdict.witness = std::make_pair(r.i, r.j);
      if (r.i == 2 && r.j == 1) verdict.witness = std::make_pair(r.i, r.j);
    }
  }
  return verdict;
}

CliffordData rescale_clifford(const CliffordData& cd, const std::array<Rational, 4>& lambda,
                              const std::array<Rational, 4>& lambda_prime) {
  for (const Rational& v : lambda) {
    if (sgn(v) <= 0) throw StructureError("pairing rescale factors must be positive");
  }
  for (const Rational& v : lambda_prime) {
    if (sgn(v) <= 0) throw StructureError("inner product rescale factors must be positive");
  }
  CliffordData out = cd;
  for (std::size_t k = 0; k < 4; ++k) {
    const Scalar lk = Scalar::from_rational(lambda[k]);
    out.pairing.scales[k] = cd.pairing.scales[k] * lk;
    out.pairing.gram[k] = cd.pairing.gram[k].scaled(lk);
    const Scalar lpk = Scalar::from_rational(lambda_prime[k]);
    out.inner[k] = cd.inner[k].scaled(lpk);
    out.inner_scales[k] = cd.inner_scales[k] * lpk;
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t k = 1; k < 4; ++k) {
      const Scalar gfac = Scalar::from_rational(lambda[k] / lambda[k - 1]);
      const Scalar afac =
          Scalar::from_rational(lambda[k] / lambda[k - 1] * lambda_prime[k - 1] /
                                lambda_prime[k]);
      out.gamma[a].blocks[k] = cd.gamma[a].blocks[k].scaled(gfac);
      out.gamma_adjoint[a].blocks[k - 1] = cd.gamma_adjoint[a].blocks[k - 1].scaled(afac);
    }
  }
  return out;
}

}  // namespace lgq
