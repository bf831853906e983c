#pragma once

// Small dense matrices over the ground field.

#include <cstddef>
#include <string>
#include <vector>

#include "exactfield.hpp"

namespace skv {

using exactfield::FieldElem;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<FieldElem>& d);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(const std::vector<std::vector<FieldElem>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<FieldElem> column(std::size_t j) const;
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix& operator*=(const FieldElem& s);

  /// Throws Error(DivisionByZero) on singular input.
  Matrix inverse() const;
  Matrix pow(long e) const;
  Matrix transpose() const;
  FieldElem trace() const;
  std::size_t rank() const;
  bool is_identity() const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace skv
