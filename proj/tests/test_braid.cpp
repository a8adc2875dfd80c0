#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgq/braid.hpp"
#include "lgq/errors.hpp"
#include "lgq/reference.hpp"
#include "lgq/uqsl2.hpp"

using namespace lgq;

namespace {

Scalar qp(int e) { return Scalar::q_power(e); }

const Matrix& braiding() {
  static const Matrix r = derive_braiding(make_adjoint_module());
  return r;
}

std::vector<Scalar> candidate_eigenvalues() {
  return {qp(2), -qp(-2), qp(-4)};
}

}  // namespace

TEST_CASE("derived braiding matches the golden 9x9 table") {
  CHECK(braiding() == reference::braiding_matrix());
}

TEST_CASE("braiding commutes with the tensor square actions") {
  const UqModule vv = tensor(make_adjoint_module(), make_adjoint_module());
  const Matrix& r = braiding();
  CHECK(r * vv.K == vv.K * r);
  CHECK(r * vv.E == vv.E * r);
  CHECK(r * vv.F == vv.F * r);
}

TEST_CASE("braiding satisfies the braid relation") {
  CHECK(yang_baxter_residual(braiding()).is_zero());
}

TEST_CASE("braid relation fails after perturbing one entry") {
  Matrix r = braiding();
  r.at(0, 1) += qp(1) - qp(-1);
  CHECK_FALSE(yang_baxter_residual(r).is_zero());
}

TEST_CASE("braiding specializes to the flip at q = 1") {
  const Matrix& r = braiding();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = 0; d < 3; ++d) {
          const Rational val = r.at(3 * c + d, 3 * a + b).evaluate_rational(rational(1));
          const Rational expected = (c == b && d == a) ? rational(1) : rational(0);
          CHECK(val == expected);
        }
      }
    }
  }
}

TEST_CASE("eigen decomposition has multiplicities (5, 3, 1)") {
  const EigenSplit split = eigensplit(braiding(), candidate_eigenvalues());
  REQUIRE(split.eigenvalues.size() == 3);
  CHECK(split.multiplicities == std::vector<std::size_t>{5, 3, 1});
  CHECK(split.S2.cols() == 6);
  CHECK(split.Lambda2.cols() == 3);
  CHECK(split.S2.rows() == 9);
  CHECK(split.Lambda2.rows() == 9);

  // The symmetric part collects the positive eigenvalues q^2 and q^-4, the
  // antisymmetric part the negative eigenvalue -q^-2.
  CHECK(rank(split.S2) == 6);
  CHECK(rank(split.Lambda2) == 3);
  CHECK(rank(hcat(split.S2, split.Lambda2)) == 9);
}

TEST_CASE("golden eigenvectors are reproduced") {
  const Matrix& r = braiding();
  for (const auto& pair : reference::braiding_eigenpairs()) {
    const Vec image = r.apply(pair.vector);
    CHECK(image == pair.value * pair.vector);
  }
}

TEST_CASE("a cubic annihilates the braiding but no quadratic does") {
  const Matrix& r = braiding();
  const Matrix id = Matrix::identity(9);
  const std::vector<Scalar> lams = candidate_eigenvalues();
  const Matrix f0 = r - id.scaled(lams[0]);
  const Matrix f1 = r - id.scaled(lams[1]);
  const Matrix f2 = r - id.scaled(lams[2]);
  CHECK((f0 * f1 * f2).is_zero());
  CHECK_FALSE((f0 * f1).is_zero());
  CHECK_FALSE((f0 * f2).is_zero());
  CHECK_FALSE((f1 * f2).is_zero());
}

TEST_CASE("eigen split rejects an incomplete candidate list") {
  CHECK_THROWS_AS(eigensplit(braiding(), {qp(2), -qp(-2)}), DerivationError);
}

TEST_CASE("braiding derivation demands a 3-dimensional module") {
  CHECK_THROWS_AS(derive_braiding(make_trivial_module()), StructureError);
}
