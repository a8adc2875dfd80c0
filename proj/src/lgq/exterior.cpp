#include "lgq/exterior.hpp"

#include <string>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

std::vector<std::size_t> digits_base3(std::size_t idx, std::size_t len) {
  std::vector<std::size_t> d(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = idx % 3;
    idx /= 3;
  }
  return d;
}

std::string monomial_label(const UqModule& m, std::size_t idx, std::size_t len) {
  if (len == 0) return "1";
  std::string out;
  for (std::size_t i : digits_base3(idx, len)) {
    if (!out.empty()) out += "∧";
    out += m.labels[i];
  }
  return out;
}

/// Conjugates the tensor-power action through the quotient/section pair and
/// checks that K stays diagonal with the representative weights. A
/// non-diagonal K means the section does not respect the grading by weight,
/// which can only happen with a bad representative choice.
UqModule induced_module(const UqModule& big, const Matrix& q, const Matrix& l,
                        std::vector<std::string> labels, std::vector<int> k_exp) {
  UqModule g;
  g.labels = std::move(labels);
  g.k_exp = std::move(k_exp);
  g.K = q * big.K * l;
  g.Kinv = q * big.Kinv * l;
  g.E = q * big.E * l;
  g.F = q * big.F * l;
  const std::size_t n = g.labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar expected = (i == j) ? Scalar::q_power(g.k_exp[i]) : Scalar::zero();
      if (g.K.at(i, j) != expected) {
        throw StructureError("induced K action is not diagonal in the chosen representatives");
      }
    }
  }
  return g;
}

}  // namespace

std::vector<std::size_t> ExteriorAlgebra::dims() const {
  std::vector<std::size_t> out;
  for (const UqModule& g : graded) out.push_back(g.dim());
  return out;
}

Vec ExteriorAlgebra::wedge(std::size_t k, const Vec& x, std::size_t l, const Vec& y) const {
  if (k > top_degree() || l > top_degree()) {
    throw StructureError("wedge factor degree out of range");
  }
  if (x.size() != graded[k].dim() || y.size() != graded[l].dim()) {
    throw StructureError("wedge coordinate size does not match the degree");
  }
  if (k + l > top_degree()) return Vec{};
  const Vec xt = lift[k].apply(x);
  const Vec yt = lift[l].apply(y);
  return quotient[k + l].apply(kron(xt, yt));
}

ExteriorAlgebra build_exterior(const UqModule& m, const Matrix& sym_span, const Matrix& alt_span,
                               const BasisPlan& plan) {
  if (m.dim() != 3) throw StructureError("exterior construction expects a 3-dimensional module");
  if (sym_span.rows() != 9 || alt_span.rows() != 9) {
    throw StructureError("tensor square spans must live in dimension 9");
  }
  if (plan.deg2.size() != 3 || plan.deg3 >= 27) {
    throw StructureError("representative plan must name three degree-2 monomials and one degree-3 monomial");
  }

  ExteriorAlgebra ext;
  ext.tensor_pow.push_back(make_trivial_module());
  ext.tensor_pow.push_back(m);
  ext.tensor_pow.push_back(tensor(m, m));
  ext.tensor_pow.push_back(tensor(ext.tensor_pow[2], m));

  ext.quotient.push_back(Matrix::identity(1));
  ext.lift.push_back(Matrix::identity(1));
  ext.quotient.push_back(Matrix::identity(3));
  ext.lift.push_back(Matrix::identity(3));

  // Degree 2: coordinates modulo the symmetric span are read off against a
  // basis made of that span followed by the representative monomials.
  const Matrix sym_basis = column_space_basis(sym_span);
  if (sym_basis.cols() + 3 != 9) {
    throw DerivationError("symmetric span has dimension " + std::to_string(sym_basis.cols()) +
                          ", expected 6");
  }
  std::vector<Vec> rep_cols;
  for (std::size_t r : plan.deg2) rep_cols.push_back(unit_vec(9, r));
  const Matrix change2 = inverse(hcat(sym_basis, Matrix::from_columns(9, rep_cols)));
  const Matrix q2 = rows_slice(change2, sym_basis.cols(), 9);
  if (!(q2 * sym_span).is_zero()) {
    throw StructureError("degree-2 quotient fails to kill the symmetric span");
  }
  const Matrix l2 = alt_span * inverse(q2 * alt_span);

  // Degree 3: the ideal is the symmetric span placed in either adjacent slot.
  std::vector<Vec> ideal3_cols;
  for (std::size_t c = 0; c < sym_basis.cols(); ++c) {
    const Vec s = sym_basis.column(c);
    for (std::size_t j = 0; j < 3; ++j) {
      ideal3_cols.push_back(kron(s, unit_vec(3, j)));
      ideal3_cols.push_back(kron(unit_vec(3, j), s));
    }
  }
  const Matrix ideal3 = Matrix::from_columns(27, ideal3_cols);
  const Matrix ideal3_basis = column_space_basis(ideal3);
  if (ideal3_basis.cols() != 26) {
    throw DerivationError("degree-3 ideal has dimension " + std::to_string(ideal3_basis.cols()) +
                          ", expected 26");
  }
  const Matrix change3 =
      inverse(hcat(ideal3_basis, Matrix::from_columns(27, {unit_vec(27, plan.deg3)})));
  const Matrix q3 = rows_slice(change3, 26, 27);
  if (!(q3 * ideal3).is_zero()) {
    throw StructureError("degree-3 quotient fails to kill the ideal");
  }

  // Canonical degree-3 lift: the unique line inside both alt (x) V and
  // V (x) alt, scaled so its class has coordinate 1.
  const Matrix i3 = Matrix::identity(3);
  const Matrix left = Matrix::kron(alt_span, i3);
  const Matrix right = Matrix::kron(i3, alt_span);
  const std::vector<Vec> kern = kernel_basis(hcat(left, -right));
  if (kern.size() != 1) {
    throw DerivationError("canonical degree-3 line has dimension " + std::to_string(kern.size()) +
                          ", expected 1");
  }
  const Vec xpart(kern[0].begin(), kern[0].begin() + 9);
  const Vec u = left.apply(xpart);
  const Scalar norm = q3.apply(u)[0];
  if (norm.is_zero()) throw StructureError("canonical degree-3 tensor lies in the ideal");
  const Matrix l3 = Matrix::from_columns(27, {norm.inverse() * u});

  // Degree 4: the ideal fills the whole space, so the algebra stops at 3.
  std::vector<Vec> ideal4_cols;
  for (std::size_t c = 0; c < sym_basis.cols(); ++c) {
    const Vec s = sym_basis.column(c);
    for (std::size_t j = 0; j < 9; ++j) {
      ideal4_cols.push_back(kron(s, unit_vec(9, j)));
      ideal4_cols.push_back(kron(unit_vec(9, j), s));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        ideal4_cols.push_back(kron(unit_vec(3, a), kron(s, unit_vec(3, b))));
      }
    }
  }
  const std::size_t rank4 = rank(Matrix::from_columns(81, ideal4_cols));
  if (rank4 != 81) {
    throw DerivationError("degree-4 ideal has dimension " + std::to_string(rank4) +
                          ", expected to fill all 81");
  }

  ext.quotient.push_back(q2);
  ext.lift.push_back(l2);
  ext.quotient.push_back(q3);
  ext.lift.push_back(l3);

  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<std::size_t> reps;
    if (k == 0) {
      reps = {0};
    } else if (k == 1) {
      reps = {0, 1, 2};
    } else if (k == 2) {
      reps = plan.deg2;
    } else {
      reps = {plan.deg3};
    }
    std::vector<std::string> labels;
    std::vector<int> k_exp;
    for (std::size_t r : reps) {
      labels.push_back(monomial_label(m, r, k));
      k_exp.push_back(ext.tensor_pow[k].k_exp[r]);
    }
    ext.graded.push_back(induced_module(ext.tensor_pow[k], ext.quotient[k], ext.lift[k],
                                        std::move(labels), std::move(k_exp)));
  }
  return ext;
}

}  // namespace lgq
