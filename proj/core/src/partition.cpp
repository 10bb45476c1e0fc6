#include "nilorbits/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilorbits {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("parts must be positive");
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    std::sort(parts.rbegin(), parts.rend());
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), j));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out.emplace_back(parts[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

long Partition::gcd() const {
  long g = 0;
  for (int x : parts) g = std::gcd(g, static_cast<long>(x));
  return g;
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> out(max_part(), 0);
  for (int x : parts)
    for (int i = 0; i < x; ++i) ++out[i];
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

namespace {

void gen(int remaining, int cap, std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    acc.push_back(next);
    gen(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen(n, n, acc, out);
  return out;
}

bool is_symplectic(const Partition& p) {
  for (const auto& [part, mult] : p.multiplicities())
    if (part % 2 == 1 && mult % 2 == 1) return false;
  return true;
}

std::vector<Partition> symplectic_partitions(int n) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic partitions need even n");
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(n))
    if (is_symplectic(p)) out.push_back(p);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) throw std::invalid_argument("dominance needs equal sums");
  size_t k = std::max(a.parts.size(), b.parts.size());
  long sa = 0, sb = 0;
  for (size_t i = 0; i < k; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace nilorbits
