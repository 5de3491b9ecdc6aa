#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lefkit/fields.hpp"

namespace lefkit {

// Dense matrix over an exact field. Immutable in spirit: algorithms take
// copies and callers never see partially eliminated state.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() : field_(), rows_(0), cols_(0) {}
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_int_rows(F field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Element> row(std::size_t r) const {
    return std::vector<Element>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  std::vector<Element> col(std::size_t c) const {
    std::vector<Element> v(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  // y = M x
  std::vector<Element> apply(const std::vector<Element>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix: apply size mismatch");
    std::vector<Element> y(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      Element acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero((*this)(i, j)) && !field_.is_zero(x[j]))
          acc = field_.add(acc, field_.mul((*this)(i, j), x[j]));
      }
      y[i] = acc;
    }
    return y;
  }

  Matrix mul(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix: mul size mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (field_.is_zero((*this)(i, k))) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out(i, j) = field_.add(out(i, j), field_.mul((*this)(i, k), other(k, j)));
      }
    return out;
  }

  bool operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!field_.equal(a_[i], other.a_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

using QMatrix = Matrix<RationalField>;
using PMatrix = Matrix<PrimeField>;

}  // namespace lefkit
