#include "matrix.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace skv {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw Error(ErrorCode::Precondition, "matrix entry count");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem(1L);
  return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElem>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<FieldElem>>& cols) {
  const std::size_t r = cols.empty() ? 0 : cols[0].size();
  Matrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw Error(ErrorCode::Precondition, "ragged columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<FieldElem> Matrix::column(std::size_t j) const {
  std::vector<FieldElem> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::Precondition, "dimension mismatch");
  std::vector<FieldElem> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::Precondition, "dimension mismatch");
  Matrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const auto& y = rhs(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::Precondition, "dimension mismatch");
  }
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += rhs.a_[k];
  return r;
}

Matrix& Matrix::operator*=(const FieldElem& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::Precondition, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const FieldElem f = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const FieldElem g = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j).submul(g, a(c, j));
        inv(i, j).submul(g, inv(c, j));
      }
    }
  }
  return inv;
}

Matrix Matrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

FieldElem Matrix::trace() const {
  FieldElem t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(r, j));
    const FieldElem f = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c).is_zero()) continue;
      const FieldElem g = a(i, c) * f;
      for (std::size_t j = c; j < cols_; ++j) a(i, j).submul(g, a(r, j));
    }
    ++r;
  }
  return r;
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const auto& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

}  // namespace skv
