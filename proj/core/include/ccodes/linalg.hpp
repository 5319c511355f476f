#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ccodes/field.hpp"

namespace ccodes {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Felt fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<Felt>> rows);
  static Matrix from_rows(const std::vector<std::vector<Felt>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Felt& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Felt> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Felt> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  std::vector<std::vector<Felt>> to_rows() const;
  Matrix transpose() const;
  /// Sub-matrix with the given columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

/// Row vector times matrix.
std::vector<Felt> vec_mul(const Field& f, std::span<const Felt> v, const Matrix& m);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of {h : h * m = 0}, one basis vector per row of the result. Each
/// vector has a 1 in one free coordinate and 0 in the others.
Matrix left_nullspace(const Field& f, const Matrix& m);

/// Inverse of a square matrix; throws InvalidInput when singular.
Matrix inverse(const Field& f, const Matrix& m);

}  // namespace ccodes
