#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symrank/field.hpp"

namespace symrank {

/// Dense row-major matrix of field elements. Which field the entries live in
/// (F_q or F_{q^m}) is decided by the caller; arithmetic is always done with
/// the handle passed to the algorithms below.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);
  /// Builds a matrix from small integers (prime subfield entries).
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, Elem s, const Matrix& a);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& a);
std::size_t rank(const Field& F, Matrix a);
Elem determinant(const Field& F, Matrix a);
std::optional<Matrix> inverse(const Field& F, const Matrix& a);

/// A x = b. Free variables are set to zero; nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& a, std::span<const Elem> b);

/// Rows of entries; F_q elements print as their index (0..q-1).
std::string format_digits(const Matrix& a);

}  // namespace symrank
