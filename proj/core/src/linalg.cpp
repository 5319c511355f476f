#include "ccodes/linalg.hpp"

#include <algorithm>

#include "ccodes/error.hpp"

namespace ccodes {

Matrix::Matrix(std::initializer_list<std::initializer_list<Felt>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Felt>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<Felt>> Matrix::to_rows() const {
  std::vector<std::vector<Felt>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(r, cols[c]);
  return s;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimension mismatch in multiply");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Felt x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  return out;
}

std::vector<Felt> vec_mul(const Field& f, std::span<const Felt> v, const Matrix& m) {
  if (v.size() != m.rows()) throw InvalidInput("vector length does not match matrix rows");
  std::vector<Felt> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Felt scale = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Felt factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref_in_place(f, m).size(); }

Matrix left_nullspace(const Field& f, const Matrix& m) {
  // h * m = 0  <=>  m^T * h^T = 0: the right nullspace of the transpose.
  Matrix t = m.transpose();
  const auto pivots = rref_in_place(f, t);
  const std::size_t dim = m.rows();
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(free_cols.size(), dim);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    basis(b, free_cols[b]) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(b, pivots[r]) = f.neg(t(r, free_cols[b]));
  }
  return basis;
}

Matrix inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw InvalidInput("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace ccodes
