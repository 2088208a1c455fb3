#include "symrank/matrix.hpp"

#include <stdexcept>

namespace symrank {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (int v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (auto e : data_)
    if (e.v != 0) return false;
  return true;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem s = a(i, k);
      if (s.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(s, b(k, j)));
    }
  return c;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Field& F, Elem s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

std::vector<std::size_t> rref(const Field& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col).v == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(r, k));
    const Elem s = F.inv(a(r, col));
    for (std::size_t k = col; k < a.cols(); ++k) a(r, k) = F.mul(a(r, k), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem t = a(i, col);
      if (t.v == 0) continue;
      for (std::size_t k = col; k < a.cols(); ++k) a(i, k) = F.sub(a(i, k), F.mul(t, a(r, k)));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix a) { return rref(F, a).size(); }

Elem determinant(const Field& F, Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Elem det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).v == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(col, k));
      det = F.neg(det);
    }
    det = F.mul(det, a(col, col));
    const Elem s = F.inv(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const Elem t = F.mul(a(i, col), s);
      if (t.v == 0) continue;
      for (std::size_t k = col; k < n; ++k) a(i, k) = F.sub(a(i, k), F.mul(t, a(col, k)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Elem{1};
  }
  const auto piv = rref(F, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Elem> x(n, Elem{0});
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

std::string format_digits(const Matrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(a(i, j).v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace symrank
