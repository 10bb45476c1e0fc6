#include "nilorbits/apartment.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nilorbits/lie.hpp"

namespace nilorbits {

int RScalar::sign() const {
  int sq = sgn(q), sc = sgn(c);
  if (sc == 0) return sq;
  if (sq == 0) return sc;
  if (sq == sc) return sq;
  int heavier = cmp(q * q, c * c * 2);
  if (heavier == 0) return 0;
  return heavier > 0 ? sq : sc;
}

long RScalar::floor() const {
  double approx = q.get_d() + c.get_d() * 1.4142135623730951;
  long t = static_cast<long>(std::floor(approx));
  while (*this < RScalar(Rat(t), Rat(0))) --t;
  while (RScalar(Rat(t + 1), Rat(0)) <= *this) ++t;
  return t;
}

std::string RScalar::str() const {
  if (c == 0) return q.get_str();
  std::string root2 = c == 1 ? "sqrt(2)" : c == -1 ? "-sqrt(2)" : c.get_str() + "*sqrt(2)";
  if (q == 0) return root2;
  if (c > 0) return q.get_str() + "+" + (c == 1 ? "sqrt(2)" : c.get_str() + "*sqrt(2)");
  Rat a = -c;
  return q.get_str() + "-" + (a == 1 ? "sqrt(2)" : a.get_str() + "*sqrt(2)");
}

Root Root::negated() const {
  switch (kind) {
    case RootKind::Diff: return {RootKind::Diff, j, i};
    case RootKind::Sum: return {RootKind::NegSum, i, j};
    default: return {RootKind::Sum, i, j};
  }
}

bool Root::positive() const {
  if (kind == RootKind::Diff) return i < j;
  return kind == RootKind::Sum;
}

std::string Root::str() const {
  auto e = [](int t) { return "e" + std::to_string(t + 1); };
  switch (kind) {
    case RootKind::Diff: return e(i) + "-" + e(j);
    case RootKind::Sum: return i == j ? "2" + e(i) : e(i) + "+" + e(j);
    default: return i == j ? "-2" + e(i) : "-" + e(i) + "-" + e(j);
  }
}

std::vector<Root> all_roots(const Ambient& amb) {
  std::vector<Root> out;
  for (int i = 0; i < amb.n; ++i)
    for (int j = 0; j < amb.n; ++j)
      if (i != j) out.push_back(Root::diff(i, j));
  if (amb.group == GroupType::Sp) {
    for (int i = 0; i < amb.n; ++i)
      for (int j = i; j < amb.n; ++j) {
        out.push_back(Root::sum(i, j));
        out.push_back(Root::neg_sum(i, j));
      }
  }
  return out;
}

RScalar eval_root(const Root& root, const ApartmentPoint& pt) {
  switch (root.kind) {
    case RootKind::Diff: return pt.x[root.i] - pt.x[root.j];
    case RootKind::Sum: return pt.x[root.i] + pt.x[root.j];
    default: return -(pt.x[root.i] + pt.x[root.j]);
  }
}

std::vector<Rat> root_functional(int n, const Root& root) {
  std::vector<Rat> row(n, Rat(0));
  switch (root.kind) {
    case RootKind::Diff:
      row[root.i] += 1;
      row[root.j] -= 1;
      break;
    case RootKind::Sum:
      row[root.i] += 1;
      row[root.j] += 1;
      break;
    default:
      row[root.i] -= 1;
      row[root.j] -= 1;
  }
  return row;
}

namespace {

void check_root(const Ambient& amb, const Root& root) {
  if (root.i < 0 || root.j < 0 || root.i >= amb.n || root.j >= amb.n)
    throw std::invalid_argument("root index out of range");
  if (root.kind == RootKind::Diff && root.i == root.j)
    throw std::invalid_argument("malformed root");
  if (root.kind != RootKind::Diff) {
    if (amb.group != GroupType::Sp) throw std::invalid_argument("long roots require Sp");
    if (root.i > root.j) throw std::invalid_argument("malformed root");
  }
}

}  // namespace

RootDecomposition root_decompose(const Ambient& amb, const Mat& m) {
  if (m.rows() != amb.matrix_size() || m.cols() != amb.matrix_size())
    throw std::invalid_argument("matrix size does not match ambient group");
  RootDecomposition d;
  int n = amb.n;
  if (amb.group == GroupType::SL) {
    for (int i = 0; i < n; ++i) d.torus.push_back(m.at(i, i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && m.at(i, j) != 0) d.components[Root::diff(i, j)] = m.at(i, j);
    return d;
  }
  if (!in_sp(m)) throw std::invalid_argument("matrix is not in sp");
  for (int i = 0; i < n; ++i) d.torus.push_back(m.at(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m.at(i, j) != 0) d.components[Root::diff(i, j)] = m.at(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (m.at(i, n + j) != 0) d.components[Root::sum(i, j)] = m.at(i, n + j);
      if (m.at(n + i, j) != 0) d.components[Root::neg_sum(i, j)] = m.at(n + i, j);
    }
  return d;
}

Mat root_space_matrix(const Ambient& amb, const Root& root) {
  check_root(amb, root);
  int n = amb.n;
  Mat m(amb.matrix_size(), amb.matrix_size());
  switch (root.kind) {
    case RootKind::Diff:
      m.at(root.i, root.j) = 1;
      if (amb.group == GroupType::Sp) m.at(n + root.j, n + root.i) = -1;
      break;
    case RootKind::Sum:
      m.at(root.i, n + root.j) = 1;
      if (root.i != root.j) m.at(root.j, n + root.i) = 1;
      break;
    default:
      m.at(n + root.i, root.j) = 1;
      if (root.i != root.j) m.at(n + root.j, root.i) = 1;
  }
  return m;
}

Mat reassemble(const Ambient& amb, const RootDecomposition& d) {
  Mat m(amb.matrix_size(), amb.matrix_size());
  int n = amb.n;
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = d.torus[i];
    if (amb.group == GroupType::Sp) m.at(n + i, n + i) = -d.torus[i];
  }
  for (const auto& [root, v] : d.components) m = m + root_space_matrix(amb, root) * v;
  return m;
}

bool moy_prasad_contains(const Ambient& amb, const LocalField& k, const Mat& m,
                         const ApartmentPoint& pt, const RScalar& level, bool strict) {
  if (static_cast<int>(pt.x.size()) != amb.n)
    throw std::invalid_argument("point size does not match ambient group");
  RootDecomposition d = root_decompose(amb, m);
  for (const Rat& t : d.torus) {
    if (t == 0) continue;
    RScalar v{Rat(k.val(t)), Rat(0)};
    if (strict ? !(v > level) : !(v >= level)) return false;
  }
  for (const auto& [root, comp] : d.components) {
    RScalar v = eval_root(root, pt) + RScalar(Rat(k.val(comp)), Rat(0));
    if (strict ? !(v > level) : !(v >= level)) return false;
  }
  return true;
}

RScalar default_r() { return RScalar(Rat(0), Rat(1) / Rat(2)); }

RScalar r_from_mult(const Rat& mult) {
  if (mult <= 0 || mult >= 1)
    throw std::invalid_argument("r must be a multiple of sqrt(2) strictly between 0 and 1");
  return RScalar(Rat(0), mult);
}

namespace {

// Particular solution of a*x = b with prescribed values on the free columns.
std::optional<std::vector<Rat>> solve_with_values(const Mat& a, const std::vector<Rat>& b,
                                                  const std::vector<Rat>& free_vals) {
  Mat aug(a.rows(), a.cols() + 1);
  aug.paste(a, 0, 0);
  for (int i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (int col = 0; col < a.cols(); ++col)
    if (!is_pivot[col]) x[col] = free_vals[col];
  for (size_t row = 0; row < pivots.size(); ++row) {
    Rat v = aug.at(static_cast<int>(row), a.cols());
    for (int col = pivots[row] + 1; col < a.cols(); ++col)
      if (!is_pivot[col] && aug.at(static_cast<int>(row), col) != 0)
        v -= aug.at(static_cast<int>(row), col) * x[col];
    x[pivots[row]] = v;
  }
  return x;
}

bool is_integer(const Rat& v) { return v.get_den() == 1; }

}  // namespace

RFacet facet_from_equalities(const Ambient& amb, const std::vector<AffineRoot>& equalities,
                             const RScalar& r, unsigned long seed) {
  for (const AffineRoot& e : equalities) check_root(amb, e.root);
  int n = amb.n;
  int rows = static_cast<int>(equalities.size()) + (amb.group == GroupType::SL ? 1 : 0);
  Mat a(rows, n);
  std::vector<Rat> bq(rows, Rat(0)), bc(rows, Rat(0));
  for (size_t t = 0; t < equalities.size(); ++t) {
    std::vector<Rat> row = root_functional(n, equalities[t].root);
    for (int col = 0; col < n; ++col) a.at(static_cast<int>(t), col) = row[col];
    bq[t] = r.q - Rat(equalities[t].offset);
    bc[t] = r.c;
  }
  if (amb.group == GroupType::SL)
    for (int col = 0; col < n; ++col) a.at(rows - 1, col) = 1;

  Mat root_rows(static_cast<int>(equalities.size()), n);
  for (size_t t = 0; t < equalities.size(); ++t) {
    std::vector<Rat> row = root_functional(n, equalities[t].root);
    for (int col = 0; col < n; ++col) root_rows.at(static_cast<int>(t), col) = row[col];
  }
  int rank = root_rows.rank();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(-504, 504);
  std::vector<Root> roots = all_roots(amb);
  std::map<Root, long> expected;
  for (const AffineRoot& e : equalities) {
    auto it = expected.find(e.root);
    if (it != expected.end() && it->second != e.offset)
      throw std::invalid_argument("inconsistent equalities");
    expected[e.root] = e.offset;
  }

  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Rat> freeq(n), freec(n, Rat(0));
    for (int col = 0; col < n; ++col) {
      Rat v(numer(rng), 1009);
      v.canonicalize();
      freeq[col] = v;
    }
    auto qsol = solve_with_values(a, bq, freeq);
    auto csol = solve_with_values(a, bc, freec);
    if (!qsol || !csol) throw std::invalid_argument("inconsistent equalities");
    ApartmentPoint pt;
    for (int col = 0; col < n; ++col) pt.x.push_back(RScalar((*qsol)[col], (*csol)[col]));

    bool ok = true;
    for (const Root& root : roots) {
      RScalar v = eval_root(root, pt);
      bool hit = v.c == r.c && is_integer(r.q - v.q);
      auto it = expected.find(root);
      if (it == expected.end()) {
        if (!hit) continue;
        // A hit whose gradient lies in the span of the equality gradients
        // holds on the whole solution set (e.g. e_i + e_j once 2e_i and
        // 2e_j are pinned with offsets of equal parity); it is part of the
        // facet, not an obstruction. Accidental hits go away on redraw.
        Mat extended(root_rows.rows() + 1, n);
        extended.paste(root_rows, 0, 0);
        std::vector<Rat> row = root_functional(n, root);
        for (int col = 0; col < n; ++col) extended.at(root_rows.rows(), col) = row[col];
        if (extended.rank() == rank) continue;
        ok = false;
        break;
      }
      if (!hit || r.q - v.q != Rat(it->second)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    RFacet f;
    f.amb = amb;
    f.equalities = equalities;
    f.dim = amb.apartment_dim() - rank;
    f.witness = pt;
    return f;
  }
  throw std::runtime_error("failed to find a witness point for the facet");
}

}  // namespace nilorbits
