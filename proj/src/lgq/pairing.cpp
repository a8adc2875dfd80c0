#include "lgq/pairing.hpp"

#include <string>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

std::size_t reversed_base3(std::size_t idx, std::size_t len) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < len; ++i) {
    out = out * 3 + idx % 3;
    idx /= 3;
  }
  return out;
}

}  // namespace

Scalar tensor_pairing(const Vec& w_coords, const Vec& v_coords) {
  if (w_coords.size() != v_coords.size()) {
    throw StructureError("tensor pairing needs equal lengths");
  }
  std::size_t len = 0;
  for (std::size_t n = w_coords.size(); n > 1; n /= 3, ++len) {
    if (n % 3 != 0) throw StructureError("tensor pairing length must be a power of 3");
  }
  Scalar out = Scalar::zero();
  for (std::size_t i = 0; i < w_coords.size(); ++i) {
    if (w_coords[i].is_zero()) continue;
    out += w_coords[i] * v_coords[reversed_base3(i, len)];
  }
  return out;
}

PairingData build_pairing(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus,
                          const std::vector<Scalar>& scales) {
  if (minus.dims() != plus.dims()) {
    throw StructureError("pairing needs algebras with matching graded dimensions");
  }
  const std::size_t degrees = minus.graded.size();
  if (scales.size() != degrees) {
    throw StructureError("need one pairing scale per degree");
  }
  PairingData pd;
  pd.scales = scales;
  for (std::size_t k = 0; k < degrees; ++k) {
    if (scales[k].is_zero()) throw StructureError("pairing scales must be nonzero");
    const std::size_t dim = minus.graded[k].dim();
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        g.at(i, j) =
            scales[k] * tensor_pairing(minus.lift[k].column(i), plus.lift[k].column(j));
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == j && g.at(i, j).is_zero()) {
          throw StructureError("degree-" + std::to_string(k) + " pairing is degenerate");
        }
        if (i != j && !g.at(i, j).is_zero()) {
          throw StructureError("degree-" + std::to_string(k) +
                               " Gram matrix is not diagonal in the chosen bases");
        }
      }
    }
    pd.gram.push_back(std::move(g));
  }
  return pd;
}

PairingData build_standard_pairing(const ExteriorAlgebra& minus, const ExteriorAlgebra& plus) {
  const Scalar one = Scalar::one();
  const Scalar top = tensor_pairing(minus.lift[3].column(0), plus.lift[3].column(0));
  if (top.is_zero()) throw StructureError("top classes pair to zero");
  const Scalar two_sq = Scalar::q_power(2) + Scalar::q_power(-2);
  return build_pairing(minus, plus, {one, one, two_sq, top.inverse()});
}

Scalar exterior_pairing(const PairingData& pd, std::size_t degree, const Vec& w, const Vec& v) {
  if (degree >= pd.gram.size()) throw StructureError("pairing degree out of range");
  const Matrix& g = pd.gram[degree];
  if (w.size() != g.rows() || v.size() != g.cols()) {
    throw StructureError("pairing coordinate size mismatch");
  }
  Scalar out = Scalar::zero();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      out += w[i] * g.at(i, j) * v[j];
    }
  }
  return out;
}

AxiomReport verify_pairing_invariance(const PairingData& pd, const ExteriorAlgebra& minus,
                                      const ExteriorAlgebra& plus) {
  AxiomReport report;
  const std::size_t degrees = pd.gram.size();
  for (std::size_t k = 0; k < degrees; ++k) {
    const Matrix& g = pd.gram[k];
    const UqModule& a = minus.graded[k];
    const UqModule& b = plus.graded[k];
    const std::string tag = "degree " + std::to_string(k) + ": ";
    report.checks.emplace_back(tag + "K invariance", a.K.transpose() * g * b.K == g);
    report.checks.emplace_back(tag + "E invariance",
                               (a.E.transpose() * g + a.K.transpose() * g * b.E).is_zero());
    report.checks.emplace_back(tag + "F invariance",
                               (a.F.transpose() * g * b.Kinv + g * b.F).is_zero());
    bool perfect = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (g.at(i, i).is_zero()) perfect = false;
    }
    report.checks.emplace_back(tag + "diagonal and nondegenerate", perfect);
  }
  return report;
}

}  // namespace lgq
