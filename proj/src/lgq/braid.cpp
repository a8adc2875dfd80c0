#include "lgq/braid.hpp"

#include <cstddef>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

bool commutes(const Matrix& r, const Matrix& x) {
  return (r * x) == (x * r);
}

}  // namespace

Matrix derive_braiding(const UqModule& v) {
  if (v.dim() != 3) throw StructureError("derive_braiding: expected a 3-dimensional module");
  const UqModule vv = tensor(v, v);
  const std::size_t n = 9;

  // Unknowns: the 81 entries of the braiding, index r * 9 + c.
  std::vector<Vec> rows;
  Vec rhs;
  const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };

  // Commutation with the F action on the tensor square:
  // (R F - F R)[r][c] = sum_k R[r][k] F[k][c] - F[r][k] R[k][c] = 0.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Vec eq(n * n, Scalar::zero());
      for (std::size_t k = 0; k < n; ++k) {
        if (!vv.F.at(k, c).is_zero()) eq[var(r, k)] = eq[var(r, k)] + vv.F.at(k, c);
        if (!vv.F.at(r, k).is_zero()) eq[var(k, c)] = eq[var(k, c)] - vv.F.at(r, k);
      }
      rows.push_back(std::move(eq));
      rhs.push_back(Scalar::zero());
    }
  }

  // Triangularity anchors. Basis index 0 is the highest weight vector and
  // index 2 the lowest. For an input (i, j) with j highest or i lowest, the
  // braiding swaps the factors with coefficient q^(e_i e_j / 2).
  std::vector<std::pair<std::size_t, std::size_t>> anchors = {
      {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}};
  for (const auto& [i, j] : anchors) {
    const int exp_prod = v.k_exp[i] * v.k_exp[j];
    if (exp_prod % 2 != 0) throw DerivationError("derive_braiding: odd anchor exponent");
    const Scalar coeff = Scalar::q_power(exp_prod / 2);
    const std::size_t in_col = 3 * i + j;
    const std::size_t out_row = 3 * j + i;
    for (std::size_t r = 0; r < n; ++r) {
      Vec eq(n * n, Scalar::zero());
      eq[var(r, in_col)] = Scalar::one();
      rows.push_back(std::move(eq));
      rhs.push_back(r == out_row ? coeff : Scalar::zero());
    }
  }

  Matrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys.at(r, c) = rows[r][c];
  const auto sol = solve_linear(sys, rhs);
  if (!sol) throw DerivationError("derive_braiding: anchor and commutation system inconsistent");
  if (!sol->homogeneous.empty())
    throw DerivationError("derive_braiding: braiding not unique, kernel dimension " +
                          std::to_string(sol->homogeneous.size()));

  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& entry = sol->particular[var(i, j)];
      if (entry.has_s_part())
        throw DerivationError("derive_braiding: entry outside the q-line");
      r.at(i, j) = entry;
    }

  if (!commutes(r, vv.K)) throw DerivationError("derive_braiding: K commutation failed");
  if (!commutes(r, vv.E)) throw DerivationError("derive_braiding: E commutation failed");
  if (!commutes(r, vv.F)) throw DerivationError("derive_braiding: F commutation failed");
  return r;
}

Matrix yang_baxter_residual(const Matrix& r) {
  if (r.rows() != 9 || r.cols() != 9)
    throw StructureError("yang_baxter_residual: expected a 9x9 operator");
  const Matrix i3 = Matrix::identity(3);
  const Matrix r12 = Matrix::kron(r, i3);
  const Matrix r23 = Matrix::kron(i3, r);
  return r12 * r23 * r12 - r23 * r12 * r23;
}

EigenSplit eigensplit(const Matrix& r, const std::vector<Scalar>& candidates) {
  if (r.rows() != r.cols()) throw StructureError("eigensplit: matrix not square");
  const std::size_t n = r.rows();
  const Matrix id = Matrix::identity(n);

  Matrix annihilator = id;
  for (const Scalar& lam : candidates) annihilator = annihilator * (r - id.scaled(lam));
  if (!annihilator.is_zero())
    throw DerivationError("eigensplit: candidate eigenvalues do not annihilate the operator");

  EigenSplit split;
  split.eigenvalues = candidates;
  std::vector<Vec> pos_cols, neg_cols;
  std::size_t total = 0;
  const Rational probe = rational(1, 2);
  for (const Scalar& lam : candidates) {
    const std::vector<Vec> basis = kernel_basis(r - id.scaled(lam));
    split.multiplicities.push_back(basis.size());
    split.eigenbases.push_back(Matrix::from_columns(n, basis));
    total += basis.size();
    const Rational sign_value = lam.evaluate_rational(probe);
    if (sign_value == 0) throw StructureError("eigensplit: zero candidate eigenvalue");
    auto& target = is_positive(sign_value) ? pos_cols : neg_cols;
    for (const Vec& b : basis) target.push_back(b);
  }
  if (total != n)
    throw StructureError("eigensplit: eigenspace dimensions sum to " + std::to_string(total) +
                         " instead of " + std::to_string(n));
  split.S2 = Matrix::from_columns(n, pos_cols);
  split.Lambda2 = Matrix::from_columns(n, neg_cols);
  return split;
}

}  // namespace lgq
