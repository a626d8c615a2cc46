#pragma once

#include <chanorder/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chanorder {

// Dense rational matrix, row-major, at least 1x1. Plain value type: copies
// are deep, equality is entrywise and exact.
class RMatrix {
 public:
  RMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols)) {}

  RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != checked_size(rows, cols)) {
      throw std::invalid_argument("entry count does not match matrix shape");
    }
  }

  static RMatrix identity(std::size_t n) {
    RMatrix eye(n, n);
    for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1;
    return eye;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool operator==(const RMatrix&) const = default;

  RMatrix operator*(const RMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& left = (*this)(i, k);
        if (left == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out(i, j) += left * rhs(k, j);
        }
      }
    }
    return out;
  }

  RMatrix operator+(const RMatrix& rhs) const {
    require_same_shape(rhs);
    RMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
  }

  RMatrix operator-(const RMatrix& rhs) const {
    require_same_shape(rhs);
    RMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
  }

  RMatrix scaled(const Rational& factor) const {
    RMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
    return out;
  }

  RMatrix transposed() const {
    RMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Rational trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Rational sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
  }

  Rational column_sum(std::size_t j) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, j);
    return sum;
  }

 private:
  void require_same_shape(const RMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw std::invalid_argument("matrix shape mismatch");
    }
  }

  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }
    return rows * cols;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

// Literal helper: rmx({{"9/10", "0"}, {"1/10", "1"}}). Rows must be equal length.
inline RMatrix rmx(std::initializer_list<std::initializer_list<const char*>> rows) {
  const std::size_t nrows = rows.size();
  if (nrows == 0) throw std::invalid_argument("empty matrix literal");
  const std::size_t ncols = rows.begin()->size();
  std::vector<Rational> entries;
  entries.reserve(nrows * ncols);
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix literal");
    for (const char* cell : row) entries.push_back(parse_rational(cell));
  }
  return RMatrix(nrows, ncols, std::move(entries));
}

}  // namespace chanorder
