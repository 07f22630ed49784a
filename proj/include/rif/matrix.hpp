#pragma once

#include "rif/error.hpp"
#include "rif/numeric.hpp"

#include <vector>

namespace rif {

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return d_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return d_[std::size_t(r) * cols_ + c]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

inline Mat<Rat> mat_mul(const Mat<Rat>& a, const Mat<Rat>& b) {
  Mat<Rat> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Rat acc = 0;
      for (int l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  return c;
}

// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
inline Mat<Rat> mat_inverse(const Mat<Rat>& m) {
  const int n = m.rows();
  Mat<Rat> a = m;
  Mat<Rat> inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) throw Error(ErrorCode::InvariantViolation, "singular matrix in exact inversion");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const Rat p = a(col, col);
    for (int c = 0; c < n; ++c) { a(col, c) /= p; inv(col, c) /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

} // namespace rif
