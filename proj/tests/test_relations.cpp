#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "lgq/braid.hpp"
#include "lgq/clifford.hpp"
#include "lgq/errors.hpp"
#include "lgq/reference.hpp"
#include "lgq/relations.hpp"
#include "lgq/uqsl2.hpp"

using namespace lgq;

namespace {

Scalar qp(int e) { return Scalar::q_power(e); }

struct Setup {
  CliffordData cd;

  Setup() {
    const UqModule v = make_adjoint_module();
    const EigenSplit split = eigensplit(derive_braiding(v), {qp(2), -qp(-2), qp(-4)});
    const ExteriorAlgebra plus = build_exterior(v, split.S2, split.Lambda2, plus_basis_plan());
    const Matrix psi2 = Matrix::kron(iso_psi(), iso_psi());
    const ExteriorAlgebra minus = build_exterior(make_dual_module(), psi2 * split.S2,
                                                 psi2 * split.Lambda2, minus_basis_plan());
    const PairingData pd = build_standard_pairing(minus, plus);
    cd = build_clifford(plus, minus, pd);
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

std::vector<std::array<Rational, 4>> seeded_scale_tuples(std::size_t count) {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<long> pick(1, 9);
  std::vector<std::array<Rational, 4>> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::array<Rational, 4> c;
    for (auto& ck : c) ck = rational(pick(rng), pick(rng));
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("the mixed second order products come out as the hand-checked matrices") {
  const CliffordData& cd = setup().cd;
  const GradedOperator lhs = compose(cd.gamma[2], cd.gamma_adjoint[1]);
  const GradedOperator rhs1 = compose(cd.gamma_adjoint[1], cd.gamma[2]);
  const GradedOperator rhs2 = compose(cd.gamma_adjoint[0], cd.gamma[1]);

  CHECK(lhs.shift == 0);
  CHECK(lhs.blocks[0].is_zero());
  CHECK(lhs.blocks[3].rows() == 1);
  CHECK(lhs.blocks[3].is_zero());

  Matrix lhs1(3, 3);
  lhs1.at(0, 1) = qp(-2) - qp(-4);
  lhs1.at(1, 2) = -qp(-2);
  CHECK(lhs.blocks[1] == lhs1);

  Matrix lhs2(3, 3);
  lhs2.at(0, 1) = -qp(10);
  CHECK(lhs.blocks[2] == lhs2);

  Matrix r1b1(3, 3);
  r1b1.at(1, 2) = Scalar::one();
  CHECK(rhs1.blocks[1] == r1b1);

  Matrix r1b2(3, 3);
  r1b2.at(0, 1) = Scalar::one();
  r1b2.at(1, 2) = qp(-2) - qp(-4);
  CHECK(rhs1.blocks[2] == r1b2);

  Matrix r2b1(3, 3);
  r2b1.at(0, 1) = Scalar::one();
  CHECK(rhs2.blocks[1] == r2b1);

  Matrix r2b2(3, 3);
  r2b2.at(0, 1) = qp(-2) - Scalar::one();
  r2b2.at(1, 2) = qp(-4);
  CHECK(rhs2.blocks[2] == r2b2);
}

TEST_CASE("the weight filter admits exactly the expected exchange terms") {
  const CliffordData& cd = setup().cd;
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(solve_relation(cd, 2, 1).terms == Pairs{{0, 1}, {1, 2}});
  CHECK(solve_relation(cd, 1, 2).terms == Pairs{{1, 0}, {2, 1}});
  CHECK(solve_relation(cd, 0, 2).terms == Pairs{{2, 0}});
  CHECK(solve_relation(cd, 2, 0).terms == Pairs{{0, 2}});
  CHECK(solve_relation(cd, 0, 1).terms == Pairs{{1, 0}, {2, 1}});
  CHECK(solve_relation(cd, 1, 0).terms == Pairs{{0, 1}, {1, 2}});
}

TEST_CASE("the weight zero by lowering pair is obstructed by the square of q minus its inverse") {
  const SolveReport r = solve_relation(setup().cd, 2, 1);
  CHECK(r.status == SolveStatus::Obstructed);
  CHECK(r.degree0_consistent);
  CHECK(r.obstruction == reference::obstruction_poly());
  CHECK(r.obstruction.str() == reference::obstruction_text());
  REQUIRE(r.coupling.has_value());
  CHECK(*r.coupling == reference::headline_coupling());
  REQUIRE(r.deg1_solution.size() == 2);
  CHECK(r.deg1_solution[0] == reference::deg1_solution_tp_coeff());
  CHECK(r.deg1_solution[1] == reference::deg1_solution_t_coeff());
  CHECK(r.summary().find("obstructed") != std::string::npos);
  CHECK(r.summary().find(reference::obstruction_text()) != std::string::npos);
}

TEST_CASE("every mixed weight pair is obstructed and both extreme pairs are solvable") {
  const CliffordData& cd = setup().cd;
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 1},
                             {1, 0},
                             {1, 2},
                             {2, 1}}) {
    const SolveReport r = solve_relation(cd, i, j);
    CAPTURE(i);
    CAPTURE(j);
    CHECK(r.status == SolveStatus::Obstructed);
    CHECK(r.obstruction == reference::obstruction_poly());
    CHECK(r.degree0_consistent);
  }
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {2, 0}}) {
    const SolveReport r = solve_relation(cd, i, j);
    CAPTURE(i);
    CAPTURE(j);
    CHECK(r.status == SolveStatus::SolvableGeneric);
    CHECK(r.degree0_consistent);
    REQUIRE(r.coupling.has_value());
    CHECK(*r.coupling == reference::solvable_coupling());
  }
}

TEST_CASE("specializing q flips the verdict exactly at the classical point") {
  const CliffordData& cd = setup().cd;

  const SolveReport at_one = solve_relation(cd, 2, 1, {}, rational(1));
  CHECK(at_one.status == SolveStatus::SolvableGeneric);
  REQUIRE(at_one.coupling.has_value());
  CHECK(*at_one.coupling == RationalFn::constant(rational(1)));
  REQUIRE(at_one.deg1_solution.size() == 2);
  CHECK(at_one.deg1_solution[0] == Scalar::zero());
  CHECK(at_one.deg1_solution[1] == -Scalar::one());

  const SolveReport at_two = solve_relation(cd, 2, 1, {}, rational(2));
  CHECK(at_two.status == SolveStatus::Obstructed);
  CHECK(at_two.obstruction == LaurentPoly::term(rational(1), 0));
  REQUIRE(at_two.coupling.has_value());
  CHECK(*at_two.coupling == RationalFn::constant(rational(25, 65536)));

  const Verdict classical = parthasarathy_verdict(cd, {}, rational(1));
  CHECK(classical.relations_exist);
  CHECK(!classical.witness.has_value());
  REQUIRE(classical.at_q.has_value());
  CHECK(*classical.at_q == rational(1));
  for (const SolveReport& r : classical.reports) {
    CHECK(r.status == SolveStatus::SolvableGeneric);
    REQUIRE(r.coupling.has_value());
    CHECK(*r.coupling == RationalFn::constant(rational(1)));
  }
}

TEST_CASE("the generic verdict rules out every exchange scheme and names a witness") {
  const Verdict v = parthasarathy_verdict(setup().cd);
  CHECK(!v.at_q.has_value());
  REQUIRE(v.reports.size() == 6);
  CHECK(!v.relations_exist);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == std::make_pair(std::size_t{2}, std::size_t{1}));
  CHECK(v.summary().find("impossible") != std::string::npos);
  CHECK(v.summary().find("Gamma_- Gamma_0^*") != std::string::npos);
  std::size_t obstructed = 0;
  for (const SolveReport& r : v.reports) {
    if (r.status == SolveStatus::Obstructed) ++obstructed;
  }
  CHECK(obstructed == 4);
}

TEST_CASE("random positive scale assignments never clear the forcing residuals") {
  const auto tuples = seeded_scale_tuples(5);
  const SolveReport r = solve_relation(setup().cd, 2, 1, tuples);
  REQUIRE(r.scans.size() == 5);
  for (const ScanAnnotation& s : r.scans) {
    CHECK(sgn(s.kappa1) > 0);
    CHECK(sgn(s.kappa2) > 0);
    CHECK(s.forced_residuals_nonzero);
    CHECK(!s.scales_compatible);
  }
  CHECK(r.summary().find("5 tried, 5 keep every forcing residual nonzero") != std::string::npos);
}

TEST_CASE("rescaling the pairing and inner products acts on the operators as predicted") {
  const CliffordData& cd = setup().cd;
  std::mt19937 rng(77031u);
  std::uniform_int_distribution<long> pick(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<Rational, 4> lambda;
    std::array<Rational, 4> lambda_prime;
    for (auto& v : lambda) v = rational(pick(rng), pick(rng));
    for (auto& v : lambda_prime) v = rational(pick(rng), pick(rng));

    const CliffordData fast = rescale_clifford(cd, lambda, lambda_prime);

    std::vector<Scalar> scales;
    for (std::size_t k = 0; k < 4; ++k) {
      scales.push_back(cd.pairing.scales[k] * Scalar::from_rational(lambda[k]));
    }
    const PairingData pd2 = build_pairing(cd.minus, cd.plus, scales);
    std::vector<Matrix> inner2;
    for (std::size_t k = 0; k < 4; ++k) {
      inner2.push_back(cd.inner[k].scaled(Scalar::from_rational(lambda_prime[k])));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      const GradedOperator slow = gamma_minus(cd.minus, cd.plus, pd2, unit_vec(3, a));
      CAPTURE(trial);
      CAPTURE(a);
      CHECK(graded_equal(fast.gamma[a], slow));
      CHECK(graded_equal(fast.gamma_adjoint[a], adjoint_of(slow, inner2)));
    }
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(fast.pairing.gram[k] == pd2.gram[k]);
      CHECK(fast.inner[k] == inner2[k]);
    }
  }
}

TEST_CASE("the rescaled family still satisfies the structure checks and the same verdict") {
  const std::array<Rational, 4> lambda = {rational(2), rational(3), rational(5, 2),
                                          rational(7, 3)};
  const std::array<Rational, 4> lambda_prime = {rational(1), rational(4, 3), rational(2),
                                                rational(9, 5)};
  const CliffordData rescaled = rescale_clifford(setup().cd, lambda, lambda_prime);
  CHECK(verify_clifford_structure(rescaled).all_ok());
  const SolveReport r = solve_relation(rescaled, 2, 1);
  CHECK(r.status == SolveStatus::Obstructed);
  CHECK(r.obstruction == reference::obstruction_poly());

  // The coupling tracks the normalization: each mu_k = lambda_k^2 / lambda'_k
  // multiplies the implicit structure scale c_k, so the required ratio picks
  // up the rational factor kappa1[mu] / kappa2[mu].
  std::array<Rational, 4> mu;
  for (std::size_t k = 0; k < 4; ++k) mu[k] = lambda[k] * lambda[k] / lambda_prime[k];
  const Rational k1mu = mu[2] * mu[0] / (mu[1] * mu[1]);
  const Rational k2mu = mu[3] * mu[1] / (mu[2] * mu[2]);
  const SolveReport s = solve_relation(rescaled, 0, 2);
  CHECK(s.status == SolveStatus::SolvableGeneric);
  REQUIRE(s.coupling.has_value());
  CHECK(*s.coupling == reference::solvable_coupling() * RationalFn::constant(k1mu / k2mu));
}

TEST_CASE("degenerate requests are rejected") {
  const CliffordData& cd = setup().cd;
  CHECK_THROWS_AS(solve_relation(cd, 1, 1), StructureError);
  CHECK_THROWS_AS(solve_relation(cd, 0, 3), StructureError);
  CHECK_THROWS_AS(solve_relation(cd, 2, 1, {{rational(1), rational(0), rational(1), rational(1)}}),
                  StructureError);
  CHECK_THROWS_AS(solve_relation(cd, 2, 1, {{rational(1), rational(-2), rational(1), rational(1)}}),
                  StructureError);
  CHECK_THROWS_AS(
      rescale_clifford(cd, {rational(0), rational(1), rational(1), rational(1)},
                       {rational(1), rational(1), rational(1), rational(1)}),
      StructureError);
}
