#pragma once

#include <vector>

#include "lgq/matrix.hpp"
#include "lgq/uqsl2.hpp"

namespace lgq {

/// Derives the braiding on the tensor square of a 3-dimensional weight module
/// whose basis is ordered from highest to lowest weight. The operator is the
/// unique solution of a linear system combining
///   (i) the five triangularity anchors: for inputs with a highest-weight
///       second factor or a lowest-weight first factor, the braiding swaps the
///       factors with coefficient q^(e_a e_b / 2) where e are the stored
///       K-exponents, and
///   (ii) commutation with the coproduct action of F on the tensor square.
/// Uniqueness is certified (the homogeneous system has trivial kernel), and
/// commutation with K and E is verified on the result as a cross-check.
/// Throws DerivationError on inconsistency, non-uniqueness, or a failed
/// cross-check, and enforces that every entry lies in the q-line (no s part).
Matrix derive_braiding(const UqModule& v);

/// The Yang-Baxter residual R12 R23 R12 - R23 R12 R23 on the tensor cube;
/// the braiding passes iff this is the zero 27x27 matrix.
Matrix yang_baxter_residual(const Matrix& r);

struct EigenSplit {
  std::vector<Scalar> eigenvalues;
  std::vector<std::size_t> multiplicities;
  std::vector<Matrix> eigenbases;  // columns span the eigenspace per value
  Matrix S2;                       // positive-eigenvalue span (columns)
  Matrix Lambda2;                  // negative-eigenvalue span (columns)
};

/// Splits the braiding into eigenspaces for the candidate eigenvalues.
/// The candidate list is certified by annihilation: the product of
/// (R - lambda) over all candidates must vanish, otherwise a DerivationError
/// reports an incomplete eigenvalue list. Eigenspace dimensions must sum to
/// the full dimension. Signs are decided by exact evaluation at q = 1/2:
/// positive eigenvalues span S2, negative ones span Lambda2.
EigenSplit eigensplit(const Matrix& r, const std::vector<Scalar>& candidates);

}  // namespace lgq
