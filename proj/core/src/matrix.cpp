#include "nilorbits/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilorbits {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::diag(const std::vector<Rat>& entries) {
  int n = static_cast<int>(entries.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::from_cols(const std::vector<std::vector<Rat>>& cols) {
  int c = static_cast<int>(cols.size());
  int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  Mat m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r) throw std::invalid_argument("ragged cols");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in +");
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in -");
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Mat Mat::operator-() const {
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("shape mismatch in *");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int k = 0; k < c_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) m.at(i, j) += x * y;
      }
    }
  }
  return m;
}

Mat Mat::operator*(const Rat& s) const {
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::pow(int k) const {
  if (!square()) throw std::invalid_argument("pow of non-square matrix");
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Mat acc = identity(r_);
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Rat Mat::trace() const {
  if (!square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (int i = 0; i < r_; ++i) t += at(i, i);
  return t;
}

Rat Mat::det() const {
  if (!square()) throw std::invalid_argument("det of non-square matrix");
  Mat m = *this;
  Rat d = 1;
  for (int col = 0; col < m.c_; ++col) {
    int pr = -1;
    for (int i = col; i < m.r_; ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return 0;
    if (pr != col) {
      m.swap_rows(pr, col);
      d = -d;
    }
    const Rat pivot = m.at(col, col);
    d *= pivot;
    for (int i = col + 1; i < m.r_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / pivot;
      for (int j = col; j < m.c_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(rref(m).size());
}

Mat Mat::inverse() const {
  if (!square()) throw std::invalid_argument("inverse of non-square matrix");
  Mat aug(r_, 2 * c_);
  aug.paste(*this, 0, 0);
  aug.paste(identity(r_), 0, c_);
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != r_ || piv.back() >= c_)
    throw std::invalid_argument("singular matrix");
  return aug.block(0, c_, r_, c_);
}

std::vector<Rat> Mat::mul_vec(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("shape mismatch in mul_vec");
  std::vector<Rat> out(r_);
  for (int i = 0; i < r_; ++i) {
    Rat s = 0;
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<Rat> Mat::col(int j) const {
  std::vector<Rat> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Rat> Mat::row(int i) const {
  std::vector<Rat> v(c_);
  for (int j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::paste(const Mat& b, int i0, int j0) {
  if (i0 + b.r_ > r_ || j0 + b.c_ > c_) throw std::invalid_argument("paste out of range");
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Mat Mat::block(int i0, int j0, int rows, int cols) const {
  if (i0 + rows > r_ || j0 + cols > c_) throw std::invalid_argument("block out of range");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

Mat Mat::direct_sum(const Mat& a, const Mat& b) {
  Mat m(a.r_ + b.r_, a.c_ + b.c_);
  m.paste(a, 0, 0);
  m.paste(b, a.r_, a.c_);
  return m;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  Mat m(a.r_ * b.r_, a.c_ * b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.r_; ++k)
        for (int l = 0; l < b.c_; ++l)
          m.at(i * b.r_ + k, j * b.c_ + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(row, pr);
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> cols;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(static_cast<int>(k), f);
    cols.push_back(std::move(v));
  }
  return Mat::from_cols(cols);
}

std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("shape mismatch in solve");
  Mat aug(a.rows(), a.cols() + 1);
  aug.paste(a, 0, 0);
  for (int i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols());
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(static_cast<int>(k), a.cols());
  return x;
}

bool SpanTracker::add(std::vector<Rat> v) {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[lead_[k]];
    if (c == 0) continue;
    Rat f = c;
    for (size_t j = 0; j < v.size(); ++j)
      if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
  }
  int lead = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      lead = static_cast<int>(j);
      break;
    }
  if (lead < 0) return false;
  Rat inv = 1 / v[lead];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

}  // namespace nilorbits
