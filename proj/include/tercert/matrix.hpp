#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tercert/errors.hpp"
#include "tercert/field.hpp"

namespace tercert {

/// Dense row-major matrix over an exact field. Every entry belongs to field().
template <ExactField F>
class Matrix {
 public:
  using scalar = scalar_t<F>;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<scalar> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ShapeError("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                       std::to_string(entries_.size()));
    for (const auto& e : entries_) field_.check(e);
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// All rows must share one length; an empty row list gives a 0 x cols matrix.
  static Matrix from_rows(F field, const std::vector<Vec<F>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<scalar> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw ShapeError("ragged rows");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(entries));
  }

  static Matrix from_columns(F field, const std::vector<Vec<F>>& columns, std::size_t rows = 0) {
    return from_rows(field, columns, rows).transpose();
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<scalar>& entries() const { return entries_; }

  scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<F> operator*(const Vec<F>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar> entries_;
};

}  // namespace tercert
