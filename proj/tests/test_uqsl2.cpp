#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgq/reference.hpp"
#include "lgq/uqsl2.hpp"

using namespace lgq;

namespace {

Scalar qp(int e) { return Scalar::q_power(e); }

}  // namespace

TEST_CASE("adjoint-type module matches its defining action table") {
  const UqModule v = make_adjoint_module();
  REQUIRE(v.dim() == 3);
  CHECK(v.labels == std::vector<std::string>{"v_1", "v_0", "v_-1"});
  CHECK(v.k_exp == std::vector<int>{2, 0, -2});

  CHECK(v.K == Matrix::diagonal({qp(2), qp(0), qp(-2)}));
  CHECK(v.Kinv == Matrix::diagonal({qp(-2), qp(0), qp(2)}));

  Matrix e(3, 3);
  e.at(0, 1) = Scalar::s();
  e.at(1, 2) = Scalar::s();
  CHECK(v.E == e);

  Matrix f(3, 3);
  f.at(1, 0) = Scalar::s();
  f.at(2, 1) = Scalar::s();
  CHECK(v.F == f);

  const AxiomReport report = verify_module_axioms(v);
  INFO(report.summary());
  CHECK(report.all_ok());
}

TEST_CASE("dual module has the stated K and F actions and the forced E") {
  const UqModule w = make_dual_module();
  REQUIRE(w.dim() == 3);
  CHECK(w.labels == std::vector<std::string>{"w_1", "w_0", "w_-1"});
  CHECK(w.k_exp == std::vector<int>{-2, 0, 2});

  CHECK(w.K == reference::dual_K());
  CHECK(w.F == reference::dual_F());
  CHECK(w.E == reference::dual_E());

  const AxiomReport report = verify_module_axioms(w);
  INFO(report.summary());
  CHECK(report.all_ok());
}

TEST_CASE("dual E is the unique solution of pairing invariance") {
  // <E w_j, v_b> + <K w_j, E v_b> = 0 with <w_i, v_j> = delta_ij.
  const UqModule v = make_adjoint_module();
  const UqModule w = make_dual_module();
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t b = 0; b < 3; ++b) {
      const Scalar lhs = w.E.at(b, j) + w.K.at(j, j) * v.E.at(j, b);
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("the twist map intertwines the two 3-dimensional modules") {
  const UqModule v = make_adjoint_module();
  const UqModule w = make_dual_module();
  const Matrix psi = iso_psi();

  // psi(v_1) = w_-1, psi(v_0) = -w_0, psi(v_-1) = q^2 w_1.
  Matrix expected(3, 3);
  expected.at(2, 0) = Scalar::one();
  expected.at(1, 1) = -Scalar::one();
  expected.at(0, 2) = qp(2);
  CHECK(psi == expected);

  CHECK(psi * v.K == w.K * psi);
  CHECK(psi * v.E == w.E * psi);
  CHECK(psi * v.F == w.F * psi);

  // The same works for the tensor squares via psi (x) psi.
  const UqModule vv = tensor(v, v);
  const UqModule ww = tensor(w, w);
  const Matrix psi2 = Matrix::kron(psi, psi);
  CHECK(psi2 * vv.K == ww.K * psi2);
  CHECK(psi2 * vv.E == ww.E * psi2);
  CHECK(psi2 * vv.F == ww.F * psi2);
}

TEST_CASE("tensor products follow the coproduct") {
  const UqModule v = make_adjoint_module();
  const UqModule vv = tensor(v, v);
  REQUIRE(vv.dim() == 9);
  CHECK(vv.k_exp == std::vector<int>{4, 2, 0, 2, 0, -2, 0, -2, -4});
  CHECK(vv.labels[1] == "v_1⊗v_0");

  // F(v_1 (x) v_1) = s (q^-2 v_0 (x) v_1 + v_1 (x) v_0).
  Vec expected(9, Scalar::zero());
  expected[3] = Scalar::s() * qp(-2);
  expected[1] = Scalar::s();
  CHECK(vv.F.column(0) == expected);

  // K fixes the weight-0 tensor v_1 (x) v_-1.
  CHECK(vv.K.at(2, 2) == Scalar::one());

  // F kills the lowest weight tensor.
  CHECK(is_zero(vv.F.column(8)));

  const AxiomReport report = verify_module_axioms(vv);
  INFO(report.summary());
  CHECK(report.all_ok());

  const UqModule w = make_dual_module();
  const AxiomReport report_ww = verify_module_axioms(tensor(w, w));
  INFO(report_ww.summary());
  CHECK(report_ww.all_ok());
}

TEST_CASE("the trivial module is a unit for the tensor product") {
  const UqModule triv = make_trivial_module();
  REQUIRE(triv.dim() == 1);
  CHECK(verify_module_axioms(triv).all_ok());

  const UqModule v = make_adjoint_module();
  const UqModule tv = tensor(triv, v);
  CHECK(tv.K == v.K);
  CHECK(tv.E == v.E);
  CHECK(tv.F == v.F);
}

TEST_CASE("axiom checker flags a corrupted module") {
  UqModule v = make_adjoint_module();
  v.E = v.E.scaled(qp(1));
  const AxiomReport report = verify_module_axioms(v);
  CHECK_FALSE(report.all_ok());
  bool commutator_failed = false;
  for (const auto& [name, ok] : report.checks) {
    if (!ok && name.find("E F - F E") != std::string::npos) commutator_failed = true;
  }
  CHECK(commutator_failed);
}

TEST_CASE("star structure data matches the defining relations") {
  const UqModule v = make_adjoint_module();
  const StarData sd = star_action_data(v);
  CHECK(sd.k == v.K);
  CHECK(sd.e == v.K * v.F);
  CHECK(sd.f == v.E * v.Kinv);

  // Star is an involution on the generators: (E*)* acts as E again, since
  // (K F)* = F* K* = (E K^-1) K = E.
  CHECK(sd.f * sd.k == v.E);
  // And (F*)* = (E K^-1)* = (K^-1)* E* = K^-1 (K F) = F.
  CHECK(v.Kinv * sd.e == v.F);
}
