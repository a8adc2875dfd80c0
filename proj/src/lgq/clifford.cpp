#include "lgq/clifford.hpp"

#include <string>
#include <utility>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

std::size_t dim_at(const std::vector<std::size_t>& dims, int degree) {
  if (degree < 0 || degree >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(degree)];
}

void require_same_grading(const GradedOperator& a, const GradedOperator& b) {
  if (a.dims != b.dims) throw StructureError("graded operators live on different gradings");
}

/// Exact sign of a + b * sqrt(t) for rational a, b and positive rational t.
int value_sign(const Scalar::Value& v, const Rational& t) {
  const int sa = sgn(v.a);
  const int sb = sgn(v.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rational diff = v.a * v.a - v.b * v.b * t;
  const int sd = sgn(diff);
  if (sd == 0) return 0;
  return sd > 0 ? sa : sb;
}

}  // namespace

GradedOperator make_graded_zero(int shift, const std::vector<std::size_t>& dims) {
  GradedOperator t;
  t.shift = shift;
  t.dims = dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    t.blocks.emplace_back(dim_at(dims, static_cast<int>(k) + shift), dims[k]);
  }
  return t;
}

GradedOperator graded_identity(const std::vector<std::size_t>& dims) {
  GradedOperator t = make_graded_zero(0, dims);
  for (std::size_t k = 0; k < dims.size(); ++k) t.blocks[k] = Matrix::identity(dims[k]);
  return t;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  require_same_grading(a, b);
  GradedOperator out = make_graded_zero(a.shift + b.shift, a.dims);
  for (std::size_t k = 0; k < out.dims.size(); ++k) {
    const int mid = static_cast<int>(k) + b.shift;
    if (mid < 0 || mid >= static_cast<int>(a.dims.size())) continue;
    out.blocks[k] = a.blocks[static_cast<std::size_t>(mid)] * b.blocks[k];
  }
  return out;
}

GradedOperator add(const GradedOperator& a, const GradedOperator& b) {
  require_same_grading(a, b);
  if (a.shift != b.shift) throw StructureError("cannot add operators of different shifts");
  GradedOperator out = a;
  for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] = out.blocks[k] + b.blocks[k];
  return out;
}

GradedOperator scale(const Scalar& c, const GradedOperator& a) {
  GradedOperator out = a;
  for (Matrix& blk : out.blocks) blk = blk.scaled(c);
  return out;
}

bool graded_is_zero(const GradedOperator& a) {
  for (const Matrix& blk : a.blocks) {
    if (!blk.is_zero()) return false;
  }
  return true;
}

bool graded_equal(const GradedOperator& a, const GradedOperator& b) {
  if (a.shift != b.shift || a.dims != b.dims) return false;
  return a.blocks == b.blocks;
}

GradedOperator gamma_plus(const ExteriorAlgebra& plus, const Vec& v) {
  const std::vector<std::size_t> dims = plus.dims();
  GradedOperator t = make_graded_zero(+1, dims);
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    for (std::size_t j = 0; j < dims[k]; ++j) {
      const Vec img = plus.wedge(1, v, k, unit_vec(dims[k], j));
      for (std::size_t i = 0; i < dims[k + 1]; ++i) t.blocks[k].at(i, j) = img[i];
    }
  }
  return t;
}

GradedOperator gamma_minus(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus,
                           const PairingData& pd, const Vec& w) {
  const std::vector<std::size_t> dims = plus.dims();
  GradedOperator t = make_graded_zero(-1, dims);
  for (std::size_t k = 1; k < dims.size(); ++k) {
    Matrix& blk = t.blocks[k];
    for (std::size_t i = 0; i < dims[k - 1]; ++i) {
      // Coefficient of basis vector i in the contraction of basis vector j:
      // <z_i ^ w, x_j> divided by the pairing of the degree-(k-1) basis pair.
      const Vec zw = minus.wedge(k - 1, unit_vec(dims[k - 1], i), 1, w);
      const Scalar denom_inv = pd.gram[k - 1].at(i, i).inverse();
      for (std::size_t j = 0; j < dims[k]; ++j) {
        blk.at(i, j) = exterior_pairing(pd, k, zw, unit_vec(dims[k], j)) * denom_inv;
      }
    }
  }
  return t;
}

std::vector<Matrix> classify_inner_products(const ExteriorAlgebra& plus,
                                            const std::vector<Rational>& positivity_points) {
  std::vector<Matrix> out;
  for (const UqModule& g : plus.graded) {
    const std::size_t d = g.dim();
    const StarData sd = star_action_data(g);
    const std::vector<std::pair<Matrix, Matrix>> action_pairs = {
        {g.K, sd.k}, {g.E, sd.e}, {g.F, sd.f}};
    // Unknown entries m_{ij} flattened as i * d + j; one equation per entry of
    // M X - X*^T M for each generator.
    Matrix sys(3 * d * d, d * d);
    std::size_t row = 0;
    for (const auto& [x, xstar] : action_pairs) {
      const Matrix xst = xstar.transpose();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t c = 0; c < d; ++c) {
            sys.at(row, i * d + c) += x.at(c, j);
            sys.at(row, c * d + j) -= xst.at(i, c);
          }
          ++row;
        }
      }
    }
    const std::vector<Vec> kern = kernel_basis(sys);
    if (kern.size() != 1) {
      throw DerivationError("invariant inner product space has dimension " +
                            std::to_string(kern.size()) + ", expected a line");
    }
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = kern[0][i * d + j];
    }
    if (m.at(0, 0).is_zero()) {
      throw StructureError("cannot normalize the inner product to a unit leading entry");
    }
    m = m.scaled(m.at(0, 0).inverse());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i != j && !m.at(i, j).is_zero()) {
          throw StructureError("invariant inner product is not diagonal in the weight basis");
        }
      }
    }
    for (const Rational& q0 : positivity_points) {
      const Rational t = q0 + Rational(1) / q0;
      for (std::size_t i = 0; i < d; ++i) {
        if (value_sign(m.at(i, i).evaluate(q0), t) <= 0) {
          throw StructureError("inner product diagonal is not positive at a sample point");
        }
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

GradedOperator adjoint_of(const GradedOperator& t, const std::vector<Matrix>& inner) {
  if (inner.size() != t.dims.size()) {
    throw StructureError("need one inner product matrix per degree");
  }
  GradedOperator out = make_graded_zero(-t.shift, t.dims);
  for (std::size_t j = 0; j < t.dims.size(); ++j) {
    const int src = static_cast<int>(j) - t.shift;
    if (src < 0 || src >= static_cast<int>(t.dims.size())) continue;
    const Matrix& block = t.blocks[static_cast<std::size_t>(src)];
    out.blocks[j] =
        inverse(inner[static_cast<std::size_t>(src)]) * block.transpose() * inner[j];
  }
  return out;
}

namespace {

GradedOperator ad_generic(const ExteriorAlgebra& alg, const GradedOperator& t,
                          char generator) {
  GradedOperator out = make_graded_zero(t.shift, t.dims);
  for (std::size_t k = 0; k < t.dims.size(); ++k) {
    const int tgt = static_cast<int>(k) + t.shift;
    if (tgt < 0 || tgt >= static_cast<int>(t.dims.size())) continue;
    const UqModule& src = alg.graded[k];
    const UqModule& dst = alg.graded[static_cast<std::size_t>(tgt)];
    const Matrix& blk = t.blocks[k];
    if (generator == 'K') {
      out.blocks[k] = dst.K * blk * src.Kinv;
    } else if (generator == 'E') {
      out.blocks[k] = dst.E * blk - dst.K * blk * src.Kinv * src.E;
    } else {
      out.blocks[k] = dst.F * blk * src.K - blk * src.F * src.K;
    }
  }
  return out;
}

}  // namespace

GradedOperator ad_K(const ExteriorAlgebra& alg, const GradedOperator& t) {
  return ad_generic(alg, t, 'K');
}
GradedOperator ad_E(const ExteriorAlgebra& alg, const GradedOperator& t) {
  return ad_generic(alg, t, 'E');
}
GradedOperator ad_F(const ExteriorAlgebra& alg, const GradedOperator& t) {
  return ad_generic(alg, t, 'F');
}

CliffordData build_clifford(const ExteriorAlgebra& plus, const ExteriorAlgebra& minus,
                            const PairingData& pd) {
  CliffordData cd;
  cd.plus = plus;
  cd.minus = minus;
  cd.pairing = pd;
  cd.inner = classify_inner_products(plus, {rational(1, 2), rational(3, 4), rational(9, 10)});
  cd.inner_scales.assign(cd.inner.size(), Scalar::one());
  for (std::size_t a = 0; a < 3; ++a) {
    cd.gamma.push_back(gamma_minus(minus, plus, pd, unit_vec(3, a)));
    cd.gamma_adjoint.push_back(adjoint_of(cd.gamma[a], cd.inner));
  }
  return cd;
}

AxiomReport verify_clifford_structure(const CliffordData& cd) {
  AxiomReport report;
  const std::vector<std::size_t> dims = cd.plus.dims();
  const std::size_t top = dims.size() - 1;

  bool duality = true;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t k = 1; k <= top; ++k) {
      for (std::size_t i = 0; i < dims[k - 1]; ++i) {
        const Vec zw = cd.minus.wedge(k - 1, unit_vec(dims[k - 1], i), 1, unit_vec(3, a));
        for (std::size_t j = 0; j < dims[k]; ++j) {
          const Scalar lhs = exterior_pairing(cd.pairing, k, zw, unit_vec(dims[k], j));
          const Scalar rhs = exterior_pairing(cd.pairing, k - 1, unit_vec(dims[k - 1], i),
                                              cd.gamma[a].blocks[k].column(j));
          if (lhs != rhs) duality = false;
        }
      }
    }
  }
  report.checks.emplace_back("contraction is dual to appending the contractor", duality);

  bool adjointness = true;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t k = 1; k <= top; ++k) {
      const Matrix lhs = cd.gamma[a].blocks[k].transpose() * cd.inner[k - 1];
      const Matrix rhs = cd.inner[k] * cd.gamma_adjoint[a].blocks[k - 1];
      if (!(lhs == rhs)) adjointness = false;
    }
  }
  report.checks.emplace_back("starred operators are inner product adjoints", adjointness);

  bool contraction_equiv = true;
  bool creation_equiv = true;
  const UqModule& wmod = cd.minus.graded[1];
  const UqModule& vmod = cd.plus.graded[1];
  for (std::size_t a = 0; a < 3; ++a) {
    const GradedOperator ga =
        gamma_minus(cd.minus, cd.plus, cd.pairing, unit_vec(3, a));
    if (!graded_equal(ad_K(cd.plus, ga),
                      gamma_minus(cd.minus, cd.plus, cd.pairing, wmod.K.column(a))) ||
        !graded_equal(ad_E(cd.plus, ga),
                      gamma_minus(cd.minus, cd.plus, cd.pairing, wmod.E.column(a))) ||
        !graded_equal(ad_F(cd.plus, ga),
                      gamma_minus(cd.minus, cd.plus, cd.pairing, wmod.F.column(a)))) {
      contraction_equiv = false;
    }
    const GradedOperator pa = gamma_plus(cd.plus, unit_vec(3, a));
    if (!graded_equal(ad_K(cd.plus, pa), gamma_plus(cd.plus, vmod.K.column(a))) ||
        !graded_equal(ad_E(cd.plus, pa), gamma_plus(cd.plus, vmod.E.column(a))) ||
        !graded_equal(ad_F(cd.plus, pa), gamma_plus(cd.plus, vmod.F.column(a)))) {
      creation_equiv = false;
    }
  }
  report.checks.emplace_back("contraction transforms like the dual module", contraction_equiv);
  report.checks.emplace_back("creation transforms like the base module", creation_equiv);

  bool composition = true;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const GradedOperator gab = compose(cd.gamma[a], cd.gamma[b]);
      for (std::size_t k = 2; k <= top; ++k) {
        for (std::size_t i = 0; i < dims[k - 2]; ++i) {
          const Vec za = cd.minus.wedge(k - 2, unit_vec(dims[k - 2], i), 1, unit_vec(3, a));
          const Vec zab = cd.minus.wedge(k - 1, za, 1, unit_vec(3, b));
          for (std::size_t j = 0; j < dims[k]; ++j) {
            const Scalar lhs = exterior_pairing(cd.pairing, k - 2, unit_vec(dims[k - 2], i),
                                                gab.blocks[k].column(j));
            const Scalar rhs = exterior_pairing(cd.pairing, k, zab, unit_vec(dims[k], j));
            if (lhs != rhs) composition = false;
          }
        }
      }
    }
  }
  report.checks.emplace_back("compositions contract by the wedge of contractors", composition);

  const Scalar coeff = -(Scalar::q_power(1) * (Scalar::q_power(1) - Scalar::q_power(-1)));
  report.checks.emplace_back(
      "square of the weight-zero contraction matches the mixed product",
      graded_equal(compose(cd.gamma[1], cd.gamma[1]),
                   scale(coeff, compose(cd.gamma[2], cd.gamma[0]))));
  return report;
}

AxiomReport verify_car_at_one(const CliffordData& cd) {
  AxiomReport report;
  const Rational one = rational(1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const GradedOperator anti = add(compose(cd.gamma[i], cd.gamma_adjoint[j]),
                                      compose(cd.gamma_adjoint[j], cd.gamma[i]));
      bool ok = true;
      for (std::size_t k = 0; k < anti.blocks.size(); ++k) {
        const Matrix& blk = anti.blocks[k];
        for (std::size_t r = 0; r < blk.rows(); ++r) {
          for (std::size_t c = 0; c < blk.cols(); ++c) {
            const Scalar::Value val = blk.at(r, c).evaluate(one);
            const Rational expected = (i == j && r == c) ? rational(1) : rational(0);
            if (val.b != 0 || val.a != expected) ok = false;
          }
        }
      }
      report.checks.emplace_back("anticommutator (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") at q = 1",
                                 ok);
    }
  }
  return report;
}

}  // namespace lgq
