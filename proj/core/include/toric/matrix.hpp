#pragma once

#include <iosfwd>
#include <vector>

#include "toric/scalar.hpp"

namespace toric {

/// Dense big-integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  Integer determinant() const;
  bool is_unimodular() const;
  bool is_identity() const;
  bool is_nonnegative() const;
  /// Exact integer inverse; throws NotUnimodular unless |det| = 1.
  IntMatrix inverse() const;
  /// Integer power; negative exponents use the inverse.
  IntMatrix pow(long exponent) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);
ScalarVector operator*(const IntMatrix& m, const ScalarVector& v);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace toric
