#include "toric/matrix.hpp"

#include <ostream>

#include "toric/errors.hpp"

namespace toric {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorKind::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  std::vector<Integer> a = data_;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  Integer d = determinant();
  return d == 1 || d == -1;
}

bool IntMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

bool IntMatrix::is_nonnegative() const {
  for (const auto& x : data_) {
    if (x < 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::inverse() const {
  if (!is_unimodular()) throw Error(ErrorKind::kNotUnimodular, "matrix is not in GL_n(Z)");
  const std::size_t n = rows_;
  // Gauss-Jordan over Q; |det| = 1 guarantees an integral result.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational((*this)(r, c));
    aug[r][n + r] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (aug[pivot][k] == 0) ++pivot;
    std::swap(aug[k], aug[pivot]);
    Rational inv = 1 / aug[k][k];
    for (auto& x : aug[k]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || aug[r][k] == 0) continue;
      Rational f = aug[r][k];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[k][c];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug[r][n + c].get_num();
  }
  return out;
}

IntMatrix IntMatrix::pow(long exponent) const {
  if (!is_square()) throw Error(ErrorKind::kInvalidArgument, "power of a non-square matrix");
  IntMatrix base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                 : static_cast<unsigned long>(exponent);
  IntMatrix result = identity(rows_);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::kInvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::kInvalidArgument, "matrix-vector shape mismatch");
  std::vector<Integer> out(m.rows(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

ScalarVector operator*(const IntMatrix& m, const ScalarVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::kInvalidArgument, "matrix-vector shape mismatch");
  ScalarVector out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      out[i] = out[i] + Scalar(m(i, j)) * v[j];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << "]";
  }
  return os << "]";
}

}  // namespace toric
