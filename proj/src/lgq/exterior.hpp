#pragma once

#include <cstddef>
#include <vector>

#include "lgq/matrix.hpp"
#include "lgq/uqsl2.hpp"

namespace lgq {

/// Graded quotient of the tensor algebra of a 3-dimensional weight module by
/// the two-sided ideal generated by a 6-dimensional subspace of the tensor
/// square (the "symmetric" eigenspace span of the braiding). The quotient is
/// finite dimensional with graded dimensions (1, 3, 3, 1); everything in
/// degree 4 and above collapses to zero, which the builder verifies.
///
/// Coordinates in degree k are taken with respect to the classes of chosen
/// representative monomials. quotient[k] sends a tensor to the coordinates of
/// its class; lift[k] is the canonical section whose image is the invariant
/// complement of the ideal (the "antisymmetric" span in degree 2 and the line
/// it generates in degree 3), so quotient[k] * lift[k] is the identity.
struct ExteriorAlgebra {
  std::vector<UqModule> tensor_pow;  ///< tensor powers of the base module, degrees 0..3
  std::vector<UqModule> graded;      ///< induced generator actions on each graded piece
  std::vector<Matrix> quotient;      ///< quotient[k]: 3^k tensor coords -> degree-k coords
  std::vector<Matrix> lift;          ///< lift[k]: canonical section of quotient[k]

  std::size_t top_degree() const { return graded.size() - 1; }
  std::vector<std::size_t> dims() const;

  /// Product of a degree-k class and a degree-l class, computed on canonical
  /// lifts. Degrees beyond the top return the empty coordinate vector, the
  /// representation of the zero space.
  Vec wedge(std::size_t k, const Vec& x, std::size_t l, const Vec& y) const;
};

/// Representative monomials used for coordinates: tensor-square indices for
/// degree 2 and a tensor-cube index for degree 3.
struct BasisPlan {
  std::vector<std::size_t> deg2;
  std::size_t deg3;
};

/// Plan for the algebra over the adjoint-type module: degree-2 basis
/// [v_1^v_0, v_1^v_-1, v_0^v_-1], degree-3 basis [v_1^v_0^v_-1].
inline BasisPlan plus_basis_plan() { return {{1, 2, 5}, 5}; }

/// Plan for the algebra over the dual module: degree-2 basis
/// [w_0^w_1, w_-1^w_1, w_-1^w_0], degree-3 basis [w_-1^w_0^w_1].
inline BasisPlan minus_basis_plan() { return {{3, 6, 7}, 21}; }

/// Builds the graded quotient. sym_span columns span the degree-2 part of the
/// ideal inside the 9-dimensional tensor square; alt_span columns span its
/// invariant complement. Throws StructureError when the representative plan
/// fails to give coordinates and DerivationError when the ideal dimensions
/// come out different from the expected (1, 3, 3, 1) pattern.
ExteriorAlgebra build_exterior(const UqModule& m, const Matrix& sym_span, const Matrix& alt_span,
                               const BasisPlan& plan);

}  // namespace lgq
