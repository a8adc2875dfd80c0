#pragma once

#include <cstddef>
#include <vector>

#include "lgq/exterior.hpp"
#include "lgq/matrix.hpp"
#include "lgq/pairing.hpp"
#include "lgq/uqsl2.hpp"

namespace lgq {

/// Degree-homogeneous linear operator on a graded space. blocks[k] maps the
/// degree-k coordinates to degree k + shift; degrees outside the grading are
/// the zero space, represented by matrices with zero rows or columns.
struct GradedOperator {
  int shift = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> blocks;
};

GradedOperator make_graded_zero(int shift, const std::vector<std::size_t>& dims);
GradedOperator graded_identity(const std::vector<std::size_t>& dims);

/// a after b; the shifts add.
GradedOperator compose(const GradedOperator& a, const GradedOperator& b);

/// Sum of two operators with equal shift.
GradedOperator add(const GradedOperator& a, const GradedOperator& b);

GradedOperator scale(const Scalar& c, const GradedOperator& a);
bool graded_is_zero(const GradedOperator& a);
bool graded_equal(const GradedOperator& a, const GradedOperator& b);

/// Left multiplication by a degree-1 element: x maps to v ^ x. Shift +1.
GradedOperator gamma_plus(const ExteriorAlgebra& plus, const Vec& v);

/// Contraction by a degree-1 element w of the dual-side algebra, the operator
/// dual to appending w under the degreewise pairing:
///   <z, gamma(w) x> = <z ^ w, x>  for all z of matching degree.
/// Shift -1.
GradedOperator gamma_minus(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus,
                           const PairingData& pd, const Vec& w);

/// Solves for the invariant sesquilinear form degree by degree: the matrix M
/// with M rho(X) = rho(X^*)^T M for X in {K, E, F}, where the star uses
/// K^* = K, E^* = K F, F^* = E K^{-1}. The solution space must be a line;
/// the result is normalized so the first diagonal entry is 1, must come out
/// diagonal, and its diagonal is checked positive at each sample point.
std::vector<Matrix> classify_inner_products(const ExteriorAlgebra& plus,
                                            const std::vector<Rational>& positivity_points);

/// Adjoint with respect to per-degree inner product matrices: the operator
/// with (T x, y) = (x, T^* y), so the shift flips sign.
GradedOperator adjoint_of(const GradedOperator& t, const std::vector<Matrix>& inner);

/// Quantum adjoint action of the generators on a graded operator, with the
/// module action taken from the graded pieces of alg:
///   K . T = K T K^{-1},  E . T = E T - K T K^{-1} E,  F . T = F T K - T F K.
GradedOperator ad_K(const ExteriorAlgebra& alg, const GradedOperator& t);
GradedOperator ad_E(const ExteriorAlgebra& alg, const GradedOperator& t);
GradedOperator ad_F(const ExteriorAlgebra& alg, const GradedOperator& t);

/// The full package: both algebras, the pairing, the inner products, and the
/// three contraction operators with their adjoints. Index a of gamma matches
/// basis vector w_a of the dual-side degree-1 space, so with the standard
/// labels a = 0 contracts by w_1, a = 1 by w_0, a = 2 by w_-1.
struct CliffordData {
  ExteriorAlgebra plus;
  ExteriorAlgebra minus;
  PairingData pairing;
  std::vector<Matrix> inner;         ///< effective inner product matrix per degree
  std::vector<Scalar> inner_scales;  ///< scale applied to each classified matrix
  std::vector<GradedOperator> gamma;
  std::vector<GradedOperator> gamma_adjoint;
};

CliffordData build_clifford(const ExteriorAlgebra& plus, const ExteriorAlgebra& minus,
                            const PairingData& pd);

/// Checks the structural identities tying the pieces together: duality of
/// contraction against the wedge, adjointness against the inner products,
/// equivariance of contraction and creation, the composition rule
/// <z, gamma_a gamma_b x> = <z ^ w_a ^ w_b, x>, and the induced quadratic
/// identity between gamma_0^2 and gamma_- gamma_+.
AxiomReport verify_clifford_structure(const CliffordData& cd);

/// Checks the classical anticommutation relations after specializing q to 1:
/// gamma_i gamma_j^* + gamma_j^* gamma_i = delta_ij identity in every degree.
AxiomReport verify_car_at_one(const CliffordData& cd);

}  // namespace lgq
