#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgq/clifford.hpp"

namespace lgq {

/// Outcome of the search for a quadratic exchange relation
///   gamma_i gamma_j^* = sum t_{kl} gamma_k^* gamma_l
/// between one mixed product and the reversed-order products, allowing an
/// arbitrary positive rescaling of the operators degree by degree.
enum class SolveStatus {
  /// Some equation forces a degree-scale combination to vanish, which no
  /// admissible set of scales can do; the relation cannot hold at generic q.
  Obstructed,
  /// The system is solvable with suitable field-valued scale combinations.
  SolvableGeneric,
};

/// One numeric scale assignment checked against the symbolic conclusion.
/// kappa1 = c2 c0 / c1^2 and kappa2 = c3 c1 / c2^2 are the only combinations
/// the equations see.
struct ScanAnnotation {
  std::array<Rational, 4> c;
  Rational kappa1;
  Rational kappa2;
  /// Every forcing equation keeps a nonzero residual under these scales.
  bool forced_residuals_nonzero = true;
  /// The remaining scale constraints hold identically in q under these
  /// (constant) scales.
  bool scales_compatible = true;
};

struct SolveReport {
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Rational> at_q;  ///< set when the blocks were specialized first
  /// Admissible reversed-order terms (k, l), filtered by weight.
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  /// The degree-0 face of the ansatz holds (both sides vanish there).
  bool degree0_consistent = true;
  SolveStatus status = SolveStatus::SolvableGeneric;
  /// When obstructed: the normalized polynomial whose vanishing would be
  /// needed to rescue the relation (monic, lowest exponent 0).
  LaurentPoly obstruction;
  /// kappa2 / kappa1 whenever the non-forcing constraints pin the ratio down.
  std::optional<RationalFn> coupling;
  /// Solution of the degree-1 face alone at kappa1 = 1, listed per term;
  /// empty when that face does not determine the coefficients uniquely.
  std::vector<Scalar> deg1_solution;
  std::vector<ScanAnnotation> scans;

  std::string summary() const;
};

/// Solves the exchange ansatz for the pair (i, j), i != j, working degree by
/// degree. The scale freedom enters only through kappa1 and kappa2; the
/// status always comes from exact symbolic elimination, and the optional
/// numeric scale assignments merely annotate it. Passing at_q specializes
/// every operator entry to the given rational value first, which is how the
/// classical limit q = 1 is examined.
SolveReport solve_relation(const CliffordData& cd, std::size_t i, std::size_t j,
                           const std::vector<std::array<Rational, 4>>& c_scans = {},
                           const std::optional<Rational>& at_q = std::nullopt);

/// Scan of all six mixed pairs.
struct Verdict {
  std::optional<Rational> at_q;
  std::vector<SolveReport> reports;
  /// True only if every pair admits a relation; a single obstructed pair
  /// sinks the whole quadratic scheme.
  bool relations_exist = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string summary() const;
};

/// Runs solve_relation over every off-diagonal pair. When obstructed pairs
/// exist the witness is pair (2, 1) if that one is obstructed (its two-term
/// system displays the obstruction most directly), otherwise the first
/// obstructed pair in scan order.
Verdict parthasarathy_verdict(const CliffordData& cd,
                              const std::vector<std::array<Rational, 4>>& c_scans = {},
                              const std::optional<Rational>& at_q = std::nullopt);

/// Applies a per-degree rescaling to the whole package: pairing scales gain
/// the factors lambda, inner products the factors lambda_prime, and the
/// operators transform as
///   gamma block (k -> k-1): factor lambda_k / lambda_{k-1},
///   adjoint block (k-1 -> k): that factor times lambda'_{k-1} / lambda'_k.
/// Rebuilding the operators from the rescaled pairing and inner products
/// gives the same result, which the tests confirm on random tuples.
CliffordData rescale_clifford(const CliffordData& cd, const std::array<Rational, 4>& lambda,
                              const std::array<Rational, 4>& lambda_prime);

}  // namespace lgq
