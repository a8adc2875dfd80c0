#pragma once

#include <string>
#include <vector>

#include "lgq/matrix.hpp"

// Hand-tabulated expected values for the whole pipeline. Everything here was
// worked out independently of the construction code (by hand, from the module
// definitions and the defining properties), so the tests that compare engine
// output against these tables are genuine golden tests rather than circular
// ones. Basis index conventions throughout: the 3-dimensional module bases
// are ordered from highest to lowest weight, (v_1, v_0, v_-1) with indices
// (0, 1, 2) and (w_1, w_0, w_-1) with indices (0, 1, 2); tensor index (a, b)
// is 3a + b; the degree-2 exterior bases are [v_1^v_0, v_1^v_-1, v_0^v_-1]
// and [w_0^w_1, w_-1^w_1, w_-1^w_0].

namespace lgq::reference {

inline Scalar qp(int e) { return Scalar::q_power(e); }

/// The quantum integer [2] = q + q^-1.
inline Scalar qint2() { return qp(1) + qp(-1); }

/// The squared-parameter quantum integer [2] at q^2, that is q^2 + q^-2.
inline Scalar qint2_sq() { return qp(2) + qp(-2); }

/// The braiding on the tensor square of the adjoint-type module, as a 9x9
/// matrix. Column 3a + b holds the image of basis tensor (a, b).
inline Matrix braiding_matrix() {
  Matrix r(9, 9);
  const auto set = [&r](int a, int b, int c, int d, const Scalar& coeff) {
    r.at(3 * c + d, 3 * a + b) = coeff;
  };
  const Scalar one = Scalar::one();
  const Scalar d2 = qp(2) - qp(-2);  // q^2 - q^-2
  const Scalar d1 = qp(1) - qp(-1);  // q - q^-1
  set(0, 0, 0, 0, qp(2));
  set(0, 1, 1, 0, one);
  set(0, 1, 0, 1, d2);
  set(0, 2, 2, 0, qp(-2));
  set(0, 2, 0, 2, qp(-1) * d1 * d2);
  set(0, 2, 1, 1, d2);
  set(1, 0, 0, 1, one);
  set(1, 1, 1, 1, one);
  set(1, 1, 0, 2, qp(-2) * d2);
  set(1, 2, 2, 1, one);
  set(1, 2, 1, 2, d2);
  set(2, 0, 0, 2, qp(-2));
  set(2, 1, 1, 2, one);
  set(2, 2, 2, 2, qp(2));
  return r;
}

struct EigenPair {
  Vec vector;
  Scalar value;
};

/// The nine eigenvectors of the braiding with their eigenvalues.
inline std::vector<EigenPair> braiding_eigenpairs() {
  const auto e = [](int i) { return unit_vec(9, static_cast<std::size_t>(i)); };
  const Scalar d1 = qp(1) - qp(-1);
  std::vector<EigenPair> out;
  out.push_back({e(0), qp(2)});
  out.push_back({e(1) + qp(-2) * e(3), qp(2)});
  out.push_back({e(1) - qp(2) * e(3), -qp(-2)});
  out.push_back({e(2) + qp(-4) * e(6) + (qp(-1) * qint2()) * e(4), qp(2)});
  out.push_back({e(2) - e(6) - (qp(1) * d1) * e(4), -qp(-2)});
  out.push_back({e(2) + qp(2) * e(6) - qp(2) * e(4), qp(-4)});
  out.push_back({e(5) + qp(-2) * e(7), qp(2)});
  out.push_back({e(5) - qp(2) * e(7), -qp(-2)});
  out.push_back({e(8), qp(2)});
  return out;
}

/// Expected generator actions on the dual module basis (w_1, w_0, w_-1).
inline Matrix dual_K() {
  return Matrix::diagonal({qp(-2), qp(0), qp(2)});
}

inline Matrix dual_F() {
  Matrix f(3, 3);
  f.at(0, 1) = -(Scalar::s() * qp(2));
  f.at(1, 2) = -Scalar::s();
  return f;
}

/// The E action on the dual basis forced by pairing invariance:
/// E w_1 = -q^-2 s w_0, E w_0 = -s w_-1, E w_-1 = 0.
inline Matrix dual_E() {
  Matrix e(3, 3);
  e.at(1, 0) = -(qp(-2) * Scalar::s());
  e.at(2, 1) = -Scalar::s();
  return e;
}

/// Degree-2 normal forms for products of degree-1 elements of the exterior
/// algebra over the adjoint module: column 3a + b holds the coordinates of
/// basis_a ^ basis_b in the ordered degree-2 basis.
inline Matrix wedge_table_plus() {
  Matrix t(3, 9);
  const auto e = [](int i) { return unit_vec(3, static_cast<std::size_t>(i)); };
  const auto set = [&t](int a, int b, const Vec& coords) {
    for (int i = 0; i < 3; ++i) t.at(i, 3 * a + b) = coords[static_cast<std::size_t>(i)];
  };
  const Scalar d1 = qp(1) - qp(-1);
  set(0, 1, e(0));
  set(0, 2, e(1));
  set(1, 0, (-qp(2)) * e(0));
  set(1, 1, (-(qp(-1) * d1)) * e(1));
  set(1, 2, e(2));
  set(2, 0, (-Scalar::one()) * e(1));
  set(2, 1, (-qp(2)) * e(2));
  return t;
}

/// Same table for the exterior algebra over the dual module.
inline Matrix wedge_table_minus() {
  Matrix t(3, 9);
  const auto e = [](int i) { return unit_vec(3, static_cast<std::size_t>(i)); };
  const auto set = [&t](int a, int b, const Vec& coords) {
    for (int i = 0; i < 3; ++i) t.at(i, 3 * a + b) = coords[static_cast<std::size_t>(i)];
  };
  const Scalar d1 = qp(1) - qp(-1);
  set(1, 0, e(0));
  set(2, 0, e(1));
  set(2, 1, e(2));
  set(0, 1, (-qp(2)) * e(0));
  set(1, 1, (-(qp(1) * d1)) * e(1));
  set(0, 2, (-Scalar::one()) * e(1));
  set(1, 2, (-qp(2)) * e(2));
  return t;
}

/// The canonical antisymmetric 2-tensors over the adjoint module, as columns:
/// the lifts of the three degree-2 basis elements into the tensor square.
inline Matrix lift2_plus() {
  const auto e = [](int i) { return unit_vec(9, static_cast<std::size_t>(i)); };
  const Scalar d1 = qp(1) - qp(-1);
  const Scalar inv = qint2_sq().inverse();
  const Vec big_v1 = e(1) - qp(2) * e(3);
  const Vec big_v0 = e(2) - e(6) - (qp(1) * d1) * e(4);
  const Vec big_vm1 = e(5) - qp(2) * e(7);
  std::vector<Vec> cols = {(qp(-2) * inv) * big_v1, inv * big_v0, (qp(-2) * inv) * big_vm1};
  return Matrix::from_columns(9, cols);
}

/// The corresponding lifts over the dual module, in the ordered degree-2
/// basis [w_0^w_1, w_-1^w_1, w_-1^w_0].
inline Matrix lift2_minus() {
  const auto e = [](int i) { return unit_vec(9, static_cast<std::size_t>(i)); };
  const Scalar d1 = qp(1) - qp(-1);
  const Scalar inv = qint2_sq().inverse();
  const Vec big_w1 = e(3) - qp(2) * e(1);
  const Vec big_w0 = e(6) - e(2) - (qp(-1) * d1) * e(4);
  const Vec big_wm1 = e(7) - qp(2) * e(5);
  std::vector<Vec> cols = {(qp(-2) * inv) * big_w1, inv * big_w0, (qp(-2) * inv) * big_wm1};
  return Matrix::from_columns(9, cols);
}

/// Unscaled degree-2 pairing diagonal between the ordered degree-2 bases.
inline Vec unscaled_deg2_diag() {
  const Scalar inv = qint2_sq().inverse();
  return {qp(-2) * inv, inv, qp(-2) * inv};
}

/// Rescaled degree-2 pairing diagonal under the standard scale convention.
inline Vec scaled_deg2_diag() {
  return {qp(-2), Scalar::one(), qp(-2)};
}

/// F action on the degree-2 basis of the exterior algebra over the adjoint
/// module: F(v_1^v_0) = s q^-2 v_1^v_-1, F(v_1^v_-1) = s q^2 v_0^v_-1,
/// F(v_0^v_-1) = 0.
inline Matrix deg2_F_plus() {
  Matrix f(3, 3);
  f.at(1, 0) = Scalar::s() * qp(-2);
  f.at(2, 1) = Scalar::s() * qp(2);
  return f;
}

/// Contraction operator blocks. which: 0 = w_1, 1 = w_0, 2 = w_-1 (the
/// operators written Gamma_+, Gamma_0, Gamma_- respectively); degree k block
/// maps the degree-k coordinates to degree k-1.
inline Matrix gamma_block(int which, int degree) {
  const Scalar d1 = qp(1) - qp(-1);
  if (degree == 1) {
    Matrix m(1, 3);
    m.at(0, static_cast<std::size_t>(which)) = Scalar::one();
    return m;
  }
  if (degree == 2) {
    Matrix m(3, 3);
    if (which == 0) {
      m.at(1, 0) = qp(-2);
      m.at(2, 1) = Scalar::one();
    } else if (which == 1) {
      m.at(0, 0) = -Scalar::one();
      m.at(1, 1) = -(qp(1) * d1);
      m.at(2, 2) = qp(-2);
    } else {
      m.at(0, 1) = -Scalar::one();
      m.at(1, 2) = -Scalar::one();
    }
    return m;
  }
  Matrix m(3, 1);
  if (which == 0) m.at(2, 0) = qp(2);
  if (which == 1) m.at(1, 0) = -qp(2);
  if (which == 2) m.at(0, 0) = qp(4);
  return m;
}

/// Adjoint blocks with respect to the invariant inner product below; the
/// degree-k adjoint block maps degree k-1 coordinates to degree k.
inline Matrix gamma_adjoint_block(int which, int degree) {
  const Scalar d1 = qp(1) - qp(-1);
  if (degree == 1) {
    Matrix m(3, 1);
    if (which == 0) m.at(0, 0) = Scalar::one();
    if (which == 1) m.at(1, 0) = Scalar::one();
    if (which == 2) m.at(2, 0) = qp(-2);
    return m;
  }
  if (degree == 2) {
    Matrix m(3, 3);
    if (which == 0) {
      m.at(0, 1) = qp(-2);
      m.at(1, 2) = qp(-2);
    } else if (which == 1) {
      m.at(0, 0) = -Scalar::one();
      m.at(1, 1) = -(qp(-3) * d1);
      m.at(2, 2) = qp(-2);
    } else {
      m.at(1, 0) = -qp(-4);
      m.at(2, 1) = -qp(-2);
    }
    return m;
  }
  Matrix m(1, 3);
  if (which == 0) m.at(0, 2) = qp(4);
  if (which == 1) m.at(0, 1) = -qp(6);
  if (which == 2) m.at(0, 0) = qp(4);
  return m;
}

/// The invariant inner product matrices per degree, normalized so the first
/// diagonal entry is 1.
inline Matrix inner_product_matrix(int degree) {
  if (degree == 0 || degree == 3) return Matrix::identity(1);
  if (degree == 1) return Matrix::diagonal({Scalar::one(), Scalar::one(), qp(2)});
  return Matrix::diagonal({Scalar::one(), qp(4), qp(2)});
}

/// Canonical form of the obstruction polynomial (q - q^-1)^2: monic, lowest
/// exponent 0, so q^4 - 2 q^2 + 1.
inline LaurentPoly obstruction_poly() {
  LaurentPoly p = LaurentPoly::q_power(4);
  p += LaurentPoly::term(rational(-2), 2);
  p += LaurentPoly(Rational(1));
  return p;
}

inline std::string obstruction_text() {
  return "q^4 - (2)·q^2 + (1)·q^0";
}

/// Degree-1 solution of the headline relation system: with kappa_1 the scale
/// combination c_2 c_0 / c_1^2, the unknowns are t = -kappa_1 q^-2 and
/// t' = kappa_1 q^-3 (q - q^-1). Returned as the coefficients of kappa_1.
inline Scalar deg1_solution_t_coeff() { return -qp(-2); }
inline Scalar deg1_solution_tp_coeff() { return qp(-3) * (qp(1) - qp(-1)); }

/// Scale coupling forced on the two solvable extreme pairs:
/// kappa2 = kappa1 q^-12.
inline RationalFn solvable_coupling() { return RationalFn::q_power(-12); }

/// Scale coupling reported alongside the obstruction of the headline pair:
/// kappa2 q^10 = kappa1 (q^-2 + q^-4 (q - q^-1)^2).
inline RationalFn headline_coupling() {
  const Scalar d1 = qp(1) - qp(-1);
  return ((qp(-2) + qp(-4) * d1 * d1) * qp(-10)).a();
}

}  // namespace lgq::reference
