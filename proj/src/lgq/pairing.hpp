#pragma once

#include <cstddef>
#include <vector>

#include "lgq/exterior.hpp"
#include "lgq/matrix.hpp"
#include "lgq/uqsl2.hpp"

namespace lgq {

/// Pairing of two pure tensors of the same length, reading the left factor
/// against the right factor in reverse slot order:
///   <a_1 (x) ... (x) a_k, b_1 (x) ... (x) b_k> = prod_i <a_i, b_{k+1-i}>
/// where degree-1 basis vectors pair as <w_i, v_j> = delta_ij. In
/// coordinates this contracts index I of the left vector with the base-3
/// digit-reversed index of the right vector. Both arguments must have length
/// a power of 3.
Scalar tensor_pairing(const Vec& w_coords, const Vec& v_coords);

/// Degreewise pairing between the two graded algebras, evaluated on the
/// canonical lifts and rescaled degree by degree.
struct PairingData {
  std::vector<Matrix> gram;    ///< gram[k](i, j) = scales[k] * <lift w_i, lift v_j>
  std::vector<Scalar> scales;  ///< one nonzero scale per degree
};

/// Builds the degreewise pairing with the given per-degree scales. Checks
/// that every Gram matrix comes out diagonal with nonzero diagonal, which is
/// what makes the pairing perfect degree by degree.
PairingData build_pairing(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus,
                          const std::vector<Scalar>& scales);

/// Standard scale choice: degrees 0 and 1 stay as defined, degree 2 clears
/// the common denominator q^2 + q^-2, and degree 3 normalizes the pairing of
/// the two top classes to 1.
PairingData build_standard_pairing(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus);

/// <w, v> for degree-k coordinate vectors.
Scalar exterior_pairing(const PairingData& pd, std::size_t degree, const Vec& w, const Vec& v);

/// Checks the defining invariance identities degree by degree: with G the
/// degree-k Gram matrix and subscripts marking the two algebras,
///   K-^T G K+ = G,   E-^T G + K-^T G E+ = 0,   F-^T G K+^{-1} + G F+ = 0.
AxiomReport verify_pairing_invariance(const PairingData& pd, const ExteriorAlgebra& minus,
                                      const ExteriorAlgebra& plus);

}  // namespace lgq
