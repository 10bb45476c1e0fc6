#include "nilorbits/sp_orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilorbits {

namespace {

// Scatters a local block matrix on (p_{s+1..s+c}, q_{s+1..s+c}) into the
// global 2n x 2n matrix.
void scatter(Mat& global, const Mat& local, int s, int c) {
  int n = global.rows() / 2;
  auto g = [&](int t) { return t < c ? s + t : n + s + (t - c); };
  for (int i = 0; i < 2 * c; ++i)
    for (int j = 0; j < 2 * c; ++j)
      if (local.at(i, j) != 0) global.at(g(i), g(j)) = local.at(i, j);
}

Mat two_by_two_blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  Mat m(a.rows() + c.rows(), a.cols() + b.cols());
  m.paste(a, 0, 0);
  m.paste(b, 0, a.cols());
  m.paste(c, a.rows(), 0);
  m.paste(d, a.rows(), a.cols());
  return m;
}

Partition odd_part_stack(int j, int mult) {
  std::vector<int> parts(mult / 2, j);
  return Partition(parts);
}

// N x N subdiagonal matrix with entries k(2N - k), k = 1..N-1: the lowering
// factor for an even part j = 2N before tensoring with I_m.
Mat even_lowering_factor(int bigN, int j) {
  Mat y(bigN, bigN);
  for (int k = 1; k < bigN; ++k) y.at(k, k - 1) = Rat(k) * Rat(j - k);
  return y;
}

}  // namespace

int sp_block_start(const Partition& lambda, int j) {
  int s = 0;
  for (const auto& [part, mult] : lambda.multiplicities())
    if (part < j) s += part * mult / 2;
  return s;
}

std::vector<SpOrbit> enumerate_sp_orbits(const LocalField& k, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<SpOrbit> out;
  for (const Partition& lambda : symplectic_partitions(2 * n)) {
    std::vector<int> evens;
    for (const auto& [part, mult] : lambda.multiplicities())
      if (part % 2 == 0) evens.push_back(part);
    std::sort(evens.begin(), evens.end());
    std::vector<std::vector<FormInvariants>> choices;
    for (int j : evens) choices.push_back(enumerate_classes(k, lambda.multiplicity(j)));
    std::vector<size_t> idx(evens.size(), 0);
    while (true) {
      SpOrbit o;
      o.lambda = lambda;
      for (size_t t = 0; t < evens.size(); ++t) o.forms.emplace_back(evens[t], choices[t][idx[t]]);
      out.push_back(o);
      int t = static_cast<int>(evens.size()) - 1;
      while (t >= 0 && idx[t] + 1 == choices[t].size()) idx[t--] = 0;
      if (t < 0) break;
      ++idx[t];
    }
  }
  return out;
}

namespace {

const FormInvariants& form_for(const SpOrbit& o, int j) {
  for (const auto& [part, inv] : o.forms)
    if (part == j) return inv;
  throw std::logic_error("missing form for even part");
}

}  // namespace

Mat sp_representative(const LocalField& k, const SpOrbit& o) {
  int n = o.lambda.sum() / 2;
  Mat x(2 * n, 2 * n);
  for (const auto& [j, mult] : o.lambda.multiplicities()) {
    int s = sp_block_start(o.lambda, j);
    int c = j * mult / 2;
    if (j % 2 == 1) {
      Mat a = jordan_nilpotent(odd_part_stack(j, mult));
      scatter(x, two_by_two_blocks(a, Mat(c, c), Mat(c, c), -a.transpose()), s, c);
    } else {
      int bigN = j / 2;
      Rat sign = bigN % 2 == 0 ? Rat(1) : Rat(-1);
      Mat a = Mat::kron(jordan_block(bigN), Mat::identity(mult));
      Mat q = minimal_representative(k, form_for(o, j));
      Mat b = Mat::direct_sum(Mat(mult * (bigN - 1), mult * (bigN - 1)), q * sign);
      scatter(x, two_by_two_blocks(a, b, Mat(c, c), -a.transpose()), s, c);
    }
  }
  return x;
}

LieTriple sp_lie_triple(const LocalField& k, const SpOrbit& o) {
  int n = o.lambda.sum() / 2;
  Mat h(2 * n, 2 * n), y(2 * n, 2 * n);
  for (const auto& [j, mult] : o.lambda.multiplicities()) {
    int s = sp_block_start(o.lambda, j);
    int c = j * mult / 2;
    if (j % 2 == 1) {
      Partition mu = odd_part_stack(j, mult);
      Mat hb = weight_diagonal(mu);
      Mat yb = lowering_matrix(mu);
      scatter(h, two_by_two_blocks(hb, Mat(c, c), Mat(c, c), -hb), s, c);
      scatter(y, two_by_two_blocks(yb, Mat(c, c), Mat(c, c), -yb.transpose()), s, c);
    } else {
      int bigN = j / 2;
      Rat sign = bigN % 2 == 0 ? Rat(1) : Rat(-1);
      std::vector<Rat> weights;
      for (int t = 0; t < bigN; ++t) weights.push_back(j - 1 - 2 * t);
      Mat hb = Mat::kron(Mat::diag(weights), Mat::identity(mult));
      Mat yb = Mat::kron(even_lowering_factor(bigN, j), Mat::identity(mult));
      Mat q = minimal_representative(k, form_for(o, j));
      Mat cblock = Mat::direct_sum(Mat(mult * (bigN - 1), mult * (bigN - 1)),
                                   q.inverse() * (sign * Rat(bigN) * Rat(bigN)));
      scatter(h, two_by_two_blocks(hb, Mat(c, c), Mat(c, c), -hb), s, c);
      scatter(y, two_by_two_blocks(yb, Mat(c, c), cblock, -yb.transpose()), s, c);
    }
  }
  return LieTriple{y, h, sp_representative(k, o)};
}

std::vector<std::pair<int, FormInvariants>> recover_forms(const LocalField& k,
                                                          const LieTriple& t) {
  if (!is_lie_triple(t)) throw std::invalid_argument("not a Lie triple");
  if (!in_sp(t.X)) throw std::invalid_argument("X is not in sp");
  int n2 = t.X.rows();
  Partition lambda = jordan_partition(t.X);
  Mat j2n = symplectic_form(n2 / 2);
  std::vector<std::pair<int, FormInvariants>> out;
  for (const auto& [j, mult] : lambda.multiplicities()) {
    if (j % 2 == 1) continue;
    // Lowest weight space of the j-isotypic component.
    Mat stacked(2 * n2, n2);
    stacked.paste(t.Y, 0, 0);
    stacked.paste(t.H + Mat::identity(n2) * Rat(j - 1), n2, 0);
    Mat basis = kernel_basis(stacked);
    if (basis.cols() != mult) throw std::invalid_argument("lowest weight space has wrong rank");
    Mat pairing = basis.transpose() * j2n * t.X.pow(j - 1) * basis;
    if (pairing != pairing.transpose())
      throw std::invalid_argument("induced pairing is not symmetric");
    out.emplace_back(j, invariants(k, diagonalize(pairing)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SpOrbit classify_sp(const LocalField& k, const Mat& x) {
  if (!in_sp(x)) throw std::invalid_argument("matrix is not in sp");
  Partition lambda = jordan_partition(x);
  if (!is_symplectic(lambda)) throw std::logic_error("nilpotent sp element with bad Jordan type");
  SpOrbit o;
  o.lambda = lambda;
  o.forms = recover_forms(k, jacobson_morozov(x, true));
  return o;
}

}  // namespace nilorbits
