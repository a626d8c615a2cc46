#pragma once

#include <chanorder/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chanorder {

// Dimension guard for d^d deterministic-matrix enumerations.
inline constexpr std::size_t kDefaultMaxEnum = 6;
// Hard cap on the joint (post, pre) vertex enumeration used by convexified
// membership; 4x4 channels (256 * 256 products) stay well inside.
inline constexpr std::size_t kMaxEnumeratedProducts = std::size_t{1} << 20;

// True iff all entries are >= 0 and every column sums to exactly 1.
inline bool is_column_stochastic(const RMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) < 0) return false;
      sum += m(i, j);
    }
    if (sum != 1) return false;
  }
  return true;
}

// True iff every column is a coordinate vector (the vertices of the
// column-stochastic polytope).
inline bool is_deterministic(const RMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1) {
        ++ones;
      } else if (m(i, j) != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

enum class StochasticKind { General, Deterministic };

inline StochasticKind stochastic_kind(const RMatrix& m) {
  return is_deterministic(m) ? StochasticKind::Deterministic : StochasticKind::General;
}

// Column-stochastic rational matrix; entry (i, j) is the probability of
// output letter i given input letter j.
class Channel {
 public:
  explicit Channel(RMatrix matrix) : matrix_(std::move(matrix)) {
    if (!is_column_stochastic(matrix_)) {
      throw std::invalid_argument("channel matrix is not column-stochastic");
    }
  }

  const RMatrix& matrix() const { return matrix_; }
  std::size_t outputs() const { return matrix_.rows(); }
  std::size_t inputs() const { return matrix_.cols(); }

  bool operator==(const Channel&) const = default;

 private:
  RMatrix matrix_;
};

// Strictly positive input weights. Normalization to sum 1 is required by
// default; `allow_unnormalized` keeps only the positivity check.
class InputDistribution {
 public:
  explicit InputDistribution(std::vector<Rational> weights, bool allow_unnormalized = false)
      : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("input distribution must be nonempty");
    Rational sum = 0;
    for (const Rational& w : weights_) {
      if (w <= 0) throw std::invalid_argument("input distribution weights must be positive");
      sum += w;
    }
    if (!allow_unnormalized && sum != 1) {
      throw std::invalid_argument("input distribution weights must sum to 1");
    }
  }

  static InputDistribution uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("input distribution must be nonempty");
    return InputDistribution(std::vector<Rational>(n, Rational(1) / Rational(n)));
  }

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

  bool is_uniform() const {
    for (const Rational& w : weights_) {
      if (w != weights_.front()) return false;
    }
    return true;
  }

  bool operator==(const InputDistribution&) const = default;

 private:
  std::vector<Rational> weights_;
};

// Utility matrix; entry (j, i) is the utility of taking action i when the
// input letter was j. Dimensions are dual to the channel it is scored
// against (inputs x actions); use sites check the agreement.
class UtilityMatrix {
 public:
  explicit UtilityMatrix(RMatrix matrix) : matrix_(std::move(matrix)) {}

  const RMatrix& matrix() const { return matrix_; }
  std::size_t inputs() const { return matrix_.rows(); }
  std::size_t actions() const { return matrix_.cols(); }

  bool operator==(const UtilityMatrix&) const = default;

 private:
  RMatrix matrix_;
};

// rows^cols, guarded. This is the number of deterministic column-stochastic
// matrices of that shape.
inline std::size_t deterministic_count(std::size_t rows, std::size_t cols,
                                       std::size_t max_dim = kDefaultMaxEnum) {
  if (rows > max_dim || cols > max_dim) {
    throw enumeration_limit_error("deterministic enumeration of a " + std::to_string(rows) + "x" +
                                  std::to_string(cols) +
                                  " shape exceeds the configured limit of " +
                                  std::to_string(max_dim));
  }
  std::size_t count = 1;
  for (std::size_t j = 0; j < cols; ++j) count *= rows;
  return count;
}

// index-th deterministic matrix in canonical order: column j carries the
// coordinate vector selected by the j-th base-`rows` digit of index. This
// order is the tie-break order used throughout the library.
inline RMatrix deterministic_matrix(std::size_t rows, std::size_t cols, std::size_t index) {
  RMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    out(index % rows, j) = 1;
    index /= rows;
  }
  return out;
}

inline void require_same_shape(const Channel& c, const Channel& cbar) {
  if (c.outputs() != cbar.outputs() || c.inputs() != cbar.inputs()) {
    throw std::invalid_argument("channels must share output and input alphabets");
  }
}

inline void require_compatible(const Channel& c, const UtilityMatrix& u,
                               const InputDistribution& pi) {
  if (u.inputs() != c.inputs() || u.actions() != c.outputs()) {
    throw std::invalid_argument("utility matrix dimensions must be dual to the channel");
  }
  if (pi.size() != c.inputs()) {
    throw std::invalid_argument("input distribution length must match the input alphabet");
  }
}

}  // namespace chanorder
