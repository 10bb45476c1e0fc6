#include "nilorbits/quadratic_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilorbits {

QuadraticForm::QuadraticForm(std::vector<Rat> d) : diag(std::move(d)) {
  for (const Rat& x : diag)
    if (x == 0) throw std::invalid_argument("quadratic form coefficients must be nonzero");
}

std::string FormInvariants::str() const {
  std::ostringstream os;
  os << "(dim " << dim << ", det " << to_string(det) << ", hasse " << (hasse > 0 ? "+1" : "-1")
     << ")";
  return os.str();
}

FormInvariants invariants(const LocalField& k, const QuadraticForm& q) {
  FormInvariants inv;
  inv.dim = q.dim();
  if (q.dim() == 0) return inv;
  Rat det(1);
  for (const Rat& a : q.diag) det *= a;
  inv.det = k.square_class(det);
  int h = 1;
  for (size_t i = 0; i < q.diag.size(); ++i)
    for (size_t j = i + 1; j < q.diag.size(); ++j) h *= k.hilbert(q.diag[i], q.diag[j]);
  inv.hasse = h;
  return inv;
}

QuadraticForm diagonalize(const Mat& gram) {
  if (!gram.square()) throw std::invalid_argument("gram matrix must be square");
  if (gram != gram.transpose()) throw std::invalid_argument("gram matrix must be symmetric");
  Mat g = gram;
  int n = g.rows();
  for (int p = 0; p < n; ++p) {
    if (g.at(p, p) == 0) {
      // Prefer a diagonal pivot below; otherwise symmetrize an off-diagonal
      // entry into position (p, p) by a row+column addition.
      int d = -1;
      for (int i = p + 1; i < n; ++i)
        if (g.at(i, i) != 0) {
          d = i;
          break;
        }
      if (d >= 0) {
        g.swap_rows(p, d);
        for (int i = 0; i < n; ++i) std::swap(g.at(i, p), g.at(i, d));
      } else {
        int a = -1, b = -1;
        for (int i = p; i < n && a < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (g.at(i, j) != 0) {
              a = i;
              b = j;
              break;
            }
        if (a < 0) throw std::invalid_argument("gram matrix is singular");
        for (int t = 0; t < n; ++t) g.at(a, t) += g.at(b, t);
        for (int t = 0; t < n; ++t) g.at(t, a) += g.at(t, b);
        if (a != p) {
          g.swap_rows(p, a);
          for (int i = 0; i < n; ++i) std::swap(g.at(i, p), g.at(i, a));
        }
      }
    }
    if (g.at(p, p) == 0) throw std::invalid_argument("gram matrix is singular");
    for (int i = p + 1; i < n; ++i) {
      if (g.at(i, p) == 0) continue;
      Rat f = g.at(i, p) / g.at(p, p);
      for (int t = 0; t < n; ++t) g.at(i, t) -= f * g.at(p, t);
      for (int t = 0; t < n; ++t) g.at(t, i) -= f * g.at(t, p);
    }
  }
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) {
    if (g.at(i, i) == 0) throw std::invalid_argument("gram matrix is singular");
    d[i] = g.at(i, i);
  }
  return QuadraticForm(d);
}

bool isometric(const FormInvariants& a, const FormInvariants& b) { return a == b; }

bool isometric(const LocalField& k, const QuadraticForm& a, const QuadraticForm& b) {
  return invariants(k, a) == invariants(k, b);
}

FormInvariants direct_sum_invariants(const LocalField& k, const FormInvariants& a,
                                     const FormInvariants& b) {
  FormInvariants out;
  out.dim = a.dim + b.dim;
  if (a.dim == 0) return b;
  if (b.dim == 0) return a;
  out.det = LocalField::square_class_mul(a.det, b.det);
  out.hasse = a.hasse * b.hasse * k.hilbert(a.det, b.det);
  return out;
}

FormInvariants hyperbolic_invariants(const LocalField& k, int m) {
  FormInvariants plane;
  plane.dim = 2;
  plane.det = k.square_class(Rat(-1));
  plane.hasse = 1;
  FormInvariants out;
  for (int i = 0; i < m; ++i) out = direct_sum_invariants(k, out, plane);
  return out;
}

std::vector<QuadraticForm> anisotropic_table(const LocalField& k) {
  const Rat eps = k.epsilon();
  const Rat pi = k.pi();
  const Rat alpha = k.minus_one_is_square() ? eps : Rat(1);
  std::vector<QuadraticForm> rows;
  // Dimension 1: the four square classes.
  rows.push_back(QuadraticForm({Rat(1)}));
  rows.push_back(QuadraticForm({eps}));
  rows.push_back(QuadraticForm({pi}));
  rows.push_back(QuadraticForm({eps * pi}));
  // Dimension 2.
  rows.push_back(QuadraticForm({Rat(1), alpha}));
  rows.push_back(QuadraticForm({pi, alpha * pi}));
  for (const Rat& t : {Rat(1), eps})
    for (const Rat& tp : {Rat(1), eps}) rows.push_back(QuadraticForm({t, tp * pi}));
  // Dimension 3.
  for (const Rat& t : {Rat(1), eps}) rows.push_back(QuadraticForm({alpha * t, pi, alpha * pi}));
  for (const Rat& t : {Rat(1), eps}) rows.push_back(QuadraticForm({Rat(1), alpha, t * pi}));
  // Dimension 4: the unique class.
  rows.push_back(QuadraticForm({Rat(1), -eps, -pi, eps * pi}));
  return rows;
}

WittParts anisotropic_kernel(const LocalField& k, const FormInvariants& q) {
  std::vector<std::pair<FormInvariants, int>> kernels;  // (invariants, candidate dim)
  kernels.push_back({FormInvariants{}, 0});
  for (const QuadraticForm& row : anisotropic_table(k)) kernels.push_back({invariants(k, row), row.dim()});
  for (const auto& [kinv, kd] : kernels) {
    if ((q.dim - kd) % 2 != 0 || q.dim < kd) continue;
    int m = (q.dim - kd) / 2;
    if (direct_sum_invariants(k, hyperbolic_invariants(k, m), kinv) == q)
      return WittParts{m, kinv};
  }
  throw std::invalid_argument("invariants do not belong to any quadratic form");
}

WittParts anisotropic_kernel(const LocalField& k, const QuadraticForm& q) {
  return anisotropic_kernel(k, invariants(k, q));
}

std::vector<Rat> anisotropic_representative(const LocalField& k, const FormInvariants& kernel) {
  if (kernel.dim == 0) {
    if (kernel == FormInvariants{}) return {};
    throw std::invalid_argument("bad zero-dimensional kernel invariants");
  }
  for (const QuadraticForm& row : anisotropic_table(k))
    if (invariants(k, row) == kernel) return row.diag;
  throw std::invalid_argument("invariants are not those of an anisotropic form");
}

Mat minimal_representative(const LocalField& k, const FormInvariants& q) {
  WittParts w = anisotropic_kernel(k, q);
  Mat out(q.dim, q.dim);
  for (int b = 0; b < w.hyperbolic_count; ++b) {
    out.at(2 * b, 2 * b + 1) = 1;
    out.at(2 * b + 1, 2 * b) = 1;
  }
  std::vector<Rat> tail = anisotropic_representative(k, w.kernel);
  for (size_t i = 0; i < tail.size(); ++i) {
    int d = 2 * w.hyperbolic_count + static_cast<int>(i);
    out.at(d, d) = tail[i];
  }
  return out;
}

std::vector<FormInvariants> enumerate_classes(const LocalField& k, int dim) {
  if (dim < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (dim == 0) return {FormInvariants{}};
  const std::vector<Rat> reps = {k.class_representative(SquareClass::One),
                                 k.class_representative(SquareClass::Eps),
                                 k.class_representative(SquareClass::Pi),
                                 k.class_representative(SquareClass::EpsPi)};
  std::vector<FormInvariants> found;
  std::vector<int> idx(dim, 0);
  while (true) {
    std::vector<Rat> diag(dim);
    for (int i = 0; i < dim; ++i) diag[i] = reps[idx[i]];
    FormInvariants inv = invariants(k, QuadraticForm(diag));
    if (std::find(found.begin(), found.end(), inv) == found.end()) found.push_back(inv);
    int i = dim - 1;
    while (i >= 0 && idx[i] == 3) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  std::sort(found.begin(), found.end(), [](const FormInvariants& a, const FormInvariants& b) {
    if (a.det != b.det) return static_cast<int>(a.det) < static_cast<int>(b.det);
    return a.hasse > b.hasse;
  });
  return found;
}

}  // namespace nilorbits
