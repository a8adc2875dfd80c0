#include "lgq/uqsl2.hpp"

#include <cstddef>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

Scalar qp(int e) { return Scalar::q_power(e); }

}  // namespace

UqModule make_adjoint_module() {
  UqModule m;
  m.labels = {"v_1", "v_0", "v_-1"};
  m.k_exp = {2, 0, -2};
  m.K = Matrix::diagonal({qp(2), qp(0), qp(-2)});
  m.Kinv = Matrix::diagonal({qp(-2), qp(0), qp(2)});
  m.E = Matrix(3, 3);
  m.E.at(0, 1) = Scalar::s();
  m.E.at(1, 2) = Scalar::s();
  m.F = Matrix(3, 3);
  m.F.at(1, 0) = Scalar::s();
  m.F.at(2, 1) = Scalar::s();
  return m;
}

UqModule make_dual_module() {
  UqModule m;
  m.labels = {"w_1", "w_0", "w_-1"};
  m.k_exp = {-2, 0, 2};
  m.K = Matrix::diagonal({qp(-2), qp(0), qp(2)});
  m.Kinv = Matrix::diagonal({qp(2), qp(0), qp(-2)});
  m.F = Matrix(3, 3);
  m.F.at(1, 2) = -Scalar::s();
  m.F.at(0, 1) = -(Scalar::s() * qp(2));

  // Derive E from invariance of the dual pairing <w_i, v_j> = delta_ij.
  // With the coproduct E (x) 1 + K (x) E and counit 0 this reads
  // <E w_b, v_j> + <K w_b, E v_j> = 0 for all b, j. The unknowns are the
  // entries X[a][b] of E on the w-basis; since the pairing is the identity
  // Gram matrix, row (b, j) of the system is X[j][b] + kappa_b E_V[b][j] = 0
  // with kappa_b the K-eigenvalue of w_b. Solved generically and checked to
  // be unique rather than substituted by hand.
  const UqModule v = make_adjoint_module();
  Matrix sys(9, 9);
  Vec rhs(9, Scalar::zero());
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t eq = 3 * b + j;
      for (std::size_t a = 0; a < 3; ++a) {
        // Coefficient of X[a][b]: the pairing <w_a, v_j>.
        if (a == j) sys.at(eq, 3 * a + b) = Scalar::one();
      }
      rhs[eq] = -(m.K.at(b, b) * v.E.at(b, j));
    }
  }
  const auto sol = solve_linear(sys, rhs);
  if (!sol) throw DerivationError("dual module: invariance system inconsistent");
  if (!sol->homogeneous.empty())
    throw DerivationError("dual module: invariance system underdetermined");
  m.E = Matrix(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) m.E.at(a, b) = sol->particular[3 * a + b];
  return m;
}

UqModule make_trivial_module() {
  UqModule m;
  m.labels = {"1"};
  m.k_exp = {0};
  m.K = Matrix::identity(1);
  m.Kinv = Matrix::identity(1);
  m.E = Matrix(1, 1);
  m.F = Matrix(1, 1);
  return m;
}

Matrix iso_psi() {
  Matrix psi(3, 3);
  psi.at(2, 0) = Scalar::one();
  psi.at(1, 1) = -Scalar::one();
  psi.at(0, 2) = qp(2);
  return psi;
}

UqModule tensor(const UqModule& a, const UqModule& b) {
  UqModule m;
  m.labels.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      m.labels.push_back(a.labels[i] + "⊗" + b.labels[j]);
      m.k_exp.push_back(a.k_exp[i] + b.k_exp[j]);
    }
  const Matrix ia = Matrix::identity(a.dim());
  const Matrix ib = Matrix::identity(b.dim());
  m.K = Matrix::kron(a.K, b.K);
  m.Kinv = Matrix::kron(a.Kinv, b.Kinv);
  m.E = Matrix::kron(a.E, ib) + Matrix::kron(a.K, b.E);
  m.F = Matrix::kron(a.F, b.Kinv) + Matrix::kron(ia, b.F);
  return m;
}

bool AxiomReport::all_ok() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::string out;
  for (const auto& [name, ok] : checks) {
    out += name;
    out += ok ? ": ok\n" : ": FAIL\n";
  }
  return out;
}

AxiomReport verify_module_axioms(const UqModule& m) {
  AxiomReport report;
  const std::size_t n = m.dim();
  const Matrix id = Matrix::identity(n);

  report.checks.emplace_back("K K^-1 = 1", (m.K * m.Kinv) == id);

  bool k_diag_power = m.k_exp.size() == n;
  for (std::size_t r = 0; r < n && k_diag_power; ++r)
    for (std::size_t c = 0; c < n && k_diag_power; ++c) {
      if (r == c)
        k_diag_power = m.K.at(r, c) == qp(m.k_exp[r]);
      else
        k_diag_power = m.K.at(r, c).is_zero();
    }
  report.checks.emplace_back("K diagonal with pure q-power eigenvalues", k_diag_power);

  report.checks.emplace_back("K E K^-1 = q^2 E",
                             (m.K * m.E * m.Kinv) == m.E.scaled(qp(2)));
  report.checks.emplace_back("K F K^-1 = q^-2 F",
                             (m.K * m.F * m.Kinv) == m.F.scaled(qp(-2)));

  const Scalar denom = qp(1) - qp(-1);
  const Matrix cartan = (m.K - m.Kinv).scaled(denom.inverse());
  report.checks.emplace_back("E F - F E = (K - K^-1)/(q - q^-1)",
                             (m.E * m.F - m.F * m.E) == cartan);

  bool e_raises = true, f_lowers = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!m.E.at(r, c).is_zero() && m.k_exp[r] != m.k_exp[c] + 2) e_raises = false;
      if (!m.F.at(r, c).is_zero() && m.k_exp[r] != m.k_exp[c] - 2) f_lowers = false;
    }
  report.checks.emplace_back("E raises the weight exponent by 2", e_raises);
  report.checks.emplace_back("F lowers the weight exponent by 2", f_lowers);
  return report;
}

StarData star_action_data(const UqModule& m) {
  return StarData{m.K, m.K * m.F, m.E * m.Kinv};
}

}  // namespace lgq
