#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nilorbits {

// Exact rational scalar used throughout.
using Rat = mpq_class;

// Dense matrix over Q with exact arithmetic.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Mat identity(int n);
  static Mat diag(const std::vector<Rat>& entries);
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  friend Mat operator*(const Rat& s, const Mat& m) { return m * s; }
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat pow(int k) const;  // k >= 0, square only
  bool is_zero() const;
  Rat trace() const;
  Rat det() const;       // square only
  int rank() const;
  Mat inverse() const;   // throws std::invalid_argument when singular

  std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;
  std::vector<Rat> col(int j) const;
  std::vector<Rat> row(int i) const;

  // Copies b into this matrix with top-left corner at (i0, j0).
  void paste(const Mat& b, int i0, int j0);
  Mat block(int i0, int j0, int rows, int cols) const;
  static Mat direct_sum(const Mat& a, const Mat& b);
  static Mat kron(const Mat& a, const Mat& b);
  static Mat from_cols(const std::vector<std::vector<Rat>>& cols);

  void swap_rows(int i, int j);
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Mat& m);

// Basis of the right kernel of m, returned as columns.
Mat kernel_basis(const Mat& m);

// One solution of a x = b with all free variables set to zero,
// or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b);

// Incremental Gaussian elimination tracking the span of inserted vectors.
class SpanTracker {
 public:
  // Returns true when v is independent of the current span (and keeps it).
  bool add(std::vector<Rat> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<Rat>> rows_;  // reduced rows, leading entry 1
  std::vector<int> lead_;
};

}  // namespace nilorbits
