#include "lgq/matrix.hpp"

#include "lgq/errors.hpp"

namespace lgq {

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw StructureError("Vec: dimension mismatch in +");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw StructureError("Vec: dimension mismatch in -");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

bool is_zero(const Vec& x) {
  for (const Scalar& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Vec kron(const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

Vec unit_vec(std::size_t dim, std::size_t index) {
  Vec out(dim);
  out.at(index) = Scalar::one();
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw StructureError("Matrix: column has the wrong dimension");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw StructureError("Matrix: index out of range");
  return data_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw StructureError("Matrix: index out of range");
  return data_[r * cols_ + c];
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw StructureError("Matrix: shape mismatch in +");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw StructureError("Matrix: shape mismatch in -");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw StructureError("Matrix: shape mismatch in *");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& f = at(r, k);
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& g = rhs.at(k, c);
        if (!g.is_zero()) out.at(r, c) += f * g;
      }
    }
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::is_zero() const {
  for (const Scalar& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw StructureError("Matrix: dimension mismatch in apply");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = at(r, c);
      if (!m.is_zero()) out[r] += m * x[c];
    }
  }
  return out;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Scalar& f = a.at(ra, ca);
      if (f.is_zero()) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          const Scalar& g = b.at(rb, cb);
          if (!g.is_zero())
            out.at(ra * b.rows() + rb, ca * b.cols() + cb) = f * g;
        }
    }
  return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Choose the simplest nonzero pivot candidate in this column.
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      const std::size_t cost = complexity(m.at(r, col));
      if (best == m.rows() || cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
    const Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) = inv * m.at(row, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m.at(row, c).is_zero()) continue;
        m.at(r, c) = m.at(r, c) - f * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) {
  return rref_in_place(m).size();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols());
    x[free] = Scalar::one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw StructureError("solve_linear: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(a.cols(), Scalar::zero());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular[pivots[i]] = aug.at(i, a.cols());
  Matrix strip(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) strip.at(r, c) = aug.at(r, c);
  sol.homogeneous = kernel_basis(strip);
  return sol;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructureError("hcat: row count mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

Matrix rows_slice(const Matrix& m, std::size_t r0, std::size_t r1) {
  if (r0 > r1 || r1 > m.rows()) throw StructureError("rows_slice: bad range");
  Matrix out(r1 - r0, m.cols());
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r - r0, c) = m.at(r, c);
  return out;
}

Matrix column_space_basis(const Matrix& m) {
  Matrix work = m;
  const std::vector<std::size_t> pivots = rref_in_place(work);
  std::vector<Vec> cols;
  cols.reserve(pivots.size());
  for (std::size_t c : pivots) cols.push_back(m.column(c));
  return Matrix::from_columns(m.rows(), cols);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw StructureError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one();
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw StructureError("inverse: singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

}  // namespace lgq
