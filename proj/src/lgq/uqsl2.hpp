#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgq/matrix.hpp"

namespace lgq {

/// Finite-dimensional weight module over the quantized enveloping algebra of
/// sl2, generators K, E, F with K E K^-1 = q^2 E, K F K^-1 = q^-2 F and
/// [E, F] = (K - K^-1)/(q - q^-1). The generator action is stored as dense
/// matrices on an ordered weight basis; K is diagonal with pure q-power
/// eigenvalues and k_exp[i] records the exponent, so K acts on basis vector i
/// by q^(k_exp[i]).
struct UqModule {
  std::vector<std::string> labels;
  std::vector<int> k_exp;
  Matrix K, Kinv, E, F;

  std::size_t dim() const { return labels.size(); }
};

/// The 3-dimensional adjoint-type module on the ordered basis (v1, v0, v-1):
/// K acts by (q^2, 1, q^-2), E v0 = s v1, E v-1 = s v0, F v1 = s v0,
/// F v0 = s v-1, where s is the square root of the quantum integer [2].
UqModule make_adjoint_module();

/// The dual 3-dimensional module on the ordered basis (w1, w0, w-1):
/// K acts by (q^-2, 1, q^2) and F w-1 = -s w0, F w0 = -s q^2 w1, F w1 = 0.
/// The E action is not postulated: it is derived as the unique matrix making
/// the dual pairing <w_i, v_j> = delta_ij invariant, via the coproduct
/// condition <E w, v> + <K w, E v> = 0 solved as a linear system.
UqModule make_dual_module();

/// The 1-dimensional trivial module (counit action).
UqModule make_trivial_module();

/// Matrix of the module isomorphism from the adjoint module to the dual one:
/// v1 -> w-1, v0 -> -w0, v-1 -> q^2 w1. Column j holds the coordinates of
/// the image of basis vector j.
Matrix iso_psi();

/// Tensor product module on the lexicographic product basis, with the action
/// given by the coproduct: K -> K (x) K, E -> E (x) 1 + K (x) E,
/// F -> F (x) K^-1 + 1 (x) F.
UqModule tensor(const UqModule& a, const UqModule& b);

struct AxiomReport {
  std::vector<std::pair<std::string, bool>> checks;

  bool all_ok() const;
  std::string summary() const;
};

/// Checks the defining relations on the stored matrices, exactly:
/// K K^-1 = 1, K E K^-1 = q^2 E, K F K^-1 = q^-2 F,
/// E F - F E = (K - K^-1)/(q - q^-1), plus the structural invariants that K
/// is diagonal with pure q-power eigenvalues and that E raises / F lowers
/// the stored weight exponents by 2.
AxiomReport verify_module_axioms(const UqModule& m);

/// Matrices representing the compact real form's star involution on the
/// generators in this module: K* = K, E* = K F, F* = E K^-1.
struct StarData {
  Matrix k, e, f;
};

StarData star_action_data(const UqModule& m);

}  // namespace lgq
