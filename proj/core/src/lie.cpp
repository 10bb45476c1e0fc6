#include "nilorbits/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilorbits {

Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat jordan_block(int j) {
  Mat m(j, j);
  for (int i = 0; i + 1 < j; ++i) m.at(i, i + 1) = 1;
  return m;
}

Mat jordan_nilpotent(const Partition& lambda) {
  Mat out(0, 0);
  for (int j : lambda.parts) out = Mat::direct_sum(out, jordan_block(j));
  return out;
}

Mat weight_diagonal(const Partition& lambda) {
  std::vector<Rat> d;
  for (int j : lambda.parts)
    for (int k = 0; k < j; ++k) d.push_back(j - 1 - 2 * k);
  return Mat::diag(d);
}

Mat lowering_matrix(const Partition& lambda) {
  Mat out(0, 0);
  for (int j : lambda.parts) {
    Mat y(j, j);
    for (int s = 1; s < j; ++s) y.at(s, s - 1) = Rat(s) * Rat(j - s);
    out = Mat::direct_sum(out, y);
  }
  return out;
}

bool is_lie_triple(const LieTriple& t) {
  return bracket(t.H, t.X) == t.X * Rat(2) && bracket(t.H, t.Y) == t.Y * Rat(-2) &&
         bracket(t.X, t.Y) == t.H;
}

Partition jordan_partition(const Mat& x) {
  if (!x.square()) throw std::invalid_argument("jordan type of non-square matrix");
  int n = x.rows();
  if (!x.pow(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
  // r[i] = rank(x^i); multiplicities follow from second differences.
  std::vector<int> r(n + 2, 0);
  r[0] = n;
  Mat p = Mat::identity(n);
  for (int i = 1; i <= n; ++i) {
    p = p * x;
    if (p.is_zero()) break;
    r[i] = p.rank();
  }
  std::vector<int> parts;
  for (int j = n; j >= 1; --j) {
    int m = r[j - 1] - 2 * r[j] + r[j + 1];
    for (int c = 0; c < m; ++c) parts.push_back(j);
  }
  return Partition(parts);
}

Mat jordan_basis(const Mat& x) {
  Partition lambda = jordan_partition(x);
  int n = x.rows();
  int top = lambda.max_part();
  // Kernel filtration of powers of x.
  std::vector<Mat> ker(top + 1, Mat(0, 0));
  Mat p = Mat::identity(n);
  for (int i = 1; i <= top; ++i) {
    p = p * x;
    ker[i] = kernel_basis(p);
  }
  // Chain tops at level j extend ker(x^(j-1)) together with the images of
  // higher chains pushed down by x.
  std::vector<std::vector<std::vector<Rat>>> chains;  // grouped by length, longest first
  std::vector<std::vector<Rat>> carried;
  for (int j = top; j >= 1; --j) {
    SpanTracker span;
    if (j >= 2)
      for (int c = 0; c < ker[j - 1].cols(); ++c) span.add(ker[j - 1].col(c));
    for (const auto& v : carried) span.add(v);
    std::vector<std::vector<Rat>> tops;
    for (int c = 0; c < ker[j].cols(); ++c) {
      std::vector<Rat> v = ker[j].col(c);
      if (span.add(v)) tops.push_back(v);
    }
    for (const auto& w : tops) {
      std::vector<std::vector<Rat>> chain(1, w);
      for (int s = 1; s < j; ++s) chain.push_back(x.mul_vec(chain.back()));
      chains.push_back(std::move(chain));
    }
    for (auto& v : carried) v = x.mul_vec(v);
    for (const auto& w : tops) carried.push_back(x.mul_vec(w));
  }
  // Basis columns per chain, bottom of the chain first, so that x acts as the
  // Jordan block on them; chains are already ordered longest first.
  std::vector<std::vector<Rat>> cols;
  for (const auto& chain : chains)
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) cols.push_back(*it);
  Mat c = Mat::from_cols(cols);
  if (c.rows() != n || c.cols() != n) throw std::logic_error("jordan chain count mismatch");
  return c;
}

Mat symplectic_form(int n) {
  Mat j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return j;
}

bool in_sp(const Mat& a) {
  if (!a.square() || a.rows() % 2 != 0) return false;
  Mat j = symplectic_form(a.rows() / 2);
  return (a.transpose() * j + j * a).is_zero();
}

bool in_sp_group(const Mat& g) {
  if (!g.square() || g.rows() % 2 != 0) return false;
  Mat j = symplectic_form(g.rows() / 2);
  return g.transpose() * j * g == j;
}

std::vector<Mat> sp_basis(int n) {
  std::vector<Mat> basis;
  // A-part: [[E_ij, 0], [0, -E_ji]].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m(2 * n, 2 * n);
      m.at(i, j) = 1;
      m.at(n + j, n + i) = -1;
      basis.push_back(m);
    }
  // B-part: symmetric upper-right block.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat m(2 * n, 2 * n);
      m.at(i, n + j) = 1;
      m.at(j, n + i) = 1;
      basis.push_back(m);
    }
  // C-part: symmetric lower-left block.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat m(2 * n, 2 * n);
      m.at(n + i, j) = 1;
      m.at(n + j, i) = 1;
      basis.push_back(m);
    }
  return basis;
}

namespace {

std::vector<Mat> gl_basis(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m(n, n);
      m.at(i, j) = 1;
      basis.push_back(m);
    }
  return basis;
}

std::vector<Rat> vec(const Mat& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat combine(const std::vector<Mat>& basis, const std::vector<Rat>& coeff) {
  Mat out(basis[0].rows(), basis[0].cols());
  for (size_t k = 0; k < basis.size(); ++k)
    if (coeff[k] != 0) out = out + basis[k] * coeff[k];
  return out;
}

// Centralizer of jordan_nilpotent(lambda): for each ordered pair of blocks,
// one partial shift map per shared diagonal.  Supports are pairwise disjoint
// and each element is constant on its diagonal, so coordinates of any
// centralizer element can be read off at the leading entries.
struct CentralizerBasis {
  std::vector<Mat> mats;
  std::vector<std::pair<int, int>> lead;
};

CentralizerBasis centralizer_basis(const Partition& lambda) {
  CentralizerBasis out;
  int n = lambda.sum();
  std::vector<int> off;
  for (int acc = 0; int part : lambda.parts) {
    off.push_back(acc);
    acc += part;
  }
  for (size_t a = 0; a < lambda.parts.size(); ++a)
    for (size_t b = 0; b < lambda.parts.size(); ++b) {
      int ra = lambda.parts[a], cb = lambda.parts[b];
      for (int s = 0; s < std::min(ra, cb); ++s) {
        int d = std::max(0, cb - ra) + s;
        Mat m(n, n);
        for (int i = 0; i + d < cb; ++i) m.at(off[a] + i, off[b] + i + d) = 1;
        out.mats.push_back(std::move(m));
        out.lead.emplace_back(off[a], off[b] + d);
      }
    }
  return out;
}

}  // namespace

LieTriple complete_triple(const Mat& x, const Mat& h, bool symplectic) {
  int n = x.rows();
  std::vector<Mat> basis = symplectic ? sp_basis(n / 2) : gl_basis(n);
  size_t dim = basis.size();
  size_t eq = static_cast<size_t>(n) * n;
  // Stacked system: [X, Y] = H over the first block, [H, Y] + 2Y = 0 below.
  Mat a(static_cast<int>(2 * eq), static_cast<int>(dim));
  std::vector<Rat> rhs(2 * eq);
  std::vector<Rat> hv = vec(h);
  for (size_t k = 0; k < dim; ++k) {
    std::vector<Rat> top = vec(bracket(x, basis[k]));
    std::vector<Rat> bot = vec(bracket(h, basis[k]) + basis[k] * Rat(2));
    for (size_t r = 0; r < eq; ++r) {
      a.at(static_cast<int>(r), static_cast<int>(k)) = top[r];
      a.at(static_cast<int>(eq + r), static_cast<int>(k)) = bot[r];
    }
  }
  for (size_t r = 0; r < eq; ++r) rhs[r] = hv[r];
  auto sol = solve(a, rhs);
  if (!sol) throw std::invalid_argument("no Y completes the given X, H to a triple");
  return LieTriple{combine(basis, *sol), h, x};
}

LieTriple jacobson_morozov(const Mat& x, bool symplectic) {
  if (!x.square()) throw std::invalid_argument("jacobson_morozov needs a square matrix");
  int n = x.rows();
  if (!x.pow(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
  if (symplectic && !in_sp(x)) throw std::invalid_argument("matrix is not in sp");
  if (x.is_zero()) return LieTriple{Mat(n, n), Mat(n, n), x};
  // Work in a Jordan frame g^-1 x g = J and conjugate the standard triple back.
  Partition lambda = jordan_partition(x);
  Mat g = jordan_basis(x);
  Mat gi = g.inverse();
  Mat w = weight_diagonal(lambda);
  Mat l = lowering_matrix(lambda);
  if (!symplectic) return LieTriple{g * l * gi, g * w * gi, x};
  // Averaging under the transported involution A -> -J2n^-1 A^T J2n (whose
  // fixed algebra is sp) keeps the bracket relations with x and lands H in
  // sp.  The leftover defect of the lowering part lies in the centralizer of
  // J, where ad H + 2 is invertible, so a small solve finishes the triple.
  Mat j2n = symplectic_form(n / 2);
  auto theta_frame = [&](const Mat& m) {
    return gi * (j2n * (g * m * gi).transpose() * j2n) * g;
  };
  Mat ht = (w + theta_frame(w)) * Rat(1, 2);
  Mat wt = (l + theta_frame(l)) * Rat(1, 2);
  Mat defect = bracket(ht, wt) + wt * Rat(2);
  Mat yt = std::move(wt);
  if (!defect.is_zero()) {
    CentralizerBasis cb = centralizer_basis(lambda);
    int z = static_cast<int>(cb.mats.size());
    Mat a(z, z);
    std::vector<Rat> rhs(z);
    for (int col = 0; col < z; ++col) {
      Mat img = bracket(ht, cb.mats[col]) + cb.mats[col] * Rat(2);
      for (int row = 0; row < z; ++row)
        a.at(row, col) = img.at(cb.lead[row].first, cb.lead[row].second);
    }
    for (int row = 0; row < z; ++row)
      rhs[row] = defect.at(cb.lead[row].first, cb.lead[row].second);
    auto sol = solve(a, rhs);
    if (!sol) throw std::logic_error("centralizer correction system is inconsistent");
    yt = yt - combine(cb.mats, *sol);
  }
  return LieTriple{g * yt * gi, g * ht * gi, x};
}

std::pair<Mat, Mat> random_sl_element(int n, std::mt19937_64& rng, int factors) {
  static const Rat coeffs[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
  Mat g = Mat::identity(n);
  Mat ginv = Mat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), cpick(0, 5);
  for (int t = 0; t < factors; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const Rat& c = coeffs[cpick(rng)];
    Mat e = Mat::identity(n);
    e.at(i, j) = c;
    Mat einv = Mat::identity(n);
    einv.at(i, j) = -c;
    g = g * e;
    ginv = einv * ginv;
  }
  return {g, ginv};
}

std::pair<Mat, Mat> random_sp_element(int n, std::mt19937_64& rng, int factors) {
  static const Rat coeffs[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
  Mat j = symplectic_form(n);
  Mat g = Mat::identity(2 * n);
  Mat ginv = Mat::identity(2 * n);
  std::uniform_int_distribution<int> vpick(-1, 1), cpick(0, 3);
  for (int t = 0; t < factors; ++t) {
    Mat v(2 * n, 1);
    bool nonzero = false;
    for (int i = 0; i < 2 * n; ++i) {
      v.at(i, 0) = vpick(rng);
      if (v.at(i, 0) != 0) nonzero = true;
    }
    if (!nonzero) continue;
    const Rat& c = coeffs[cpick(rng)];
    // Transvection I + c v (v^T J); inverse flips the sign of c.
    Mat outer = v * (v.transpose() * j);
    Mat e = Mat::identity(2 * n) + outer * c;
    Mat einv = Mat::identity(2 * n) - outer * c;
    g = g * e;
    ginv = einv * ginv;
  }
  return {g, ginv};
}

}  // namespace nilorbits
