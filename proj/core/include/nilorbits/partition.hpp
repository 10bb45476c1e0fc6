#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nilorbits {

// Integer partition with parts stored weakly decreasing.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int sum() const;
  int num_parts() const { return static_cast<int>(parts.size()); }
  int max_part() const { return parts.empty() ? 0 : parts.front(); }
  int min_part() const { return parts.empty() ? 0 : parts.back(); }
  int multiplicity(int j) const;
  // (part, multiplicity) pairs, parts decreasing.
  std::vector<std::pair<int, int>> multiplicities() const;
  long gcd() const;  // 0 for the empty partition
  // Conjugate partition: entry i counts parts >= i+1.
  std::vector<int> conjugate() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string str() const;  // "[4,2,1]"
};

// All partitions of n, in decreasing lexicographic order ([n] first).
std::vector<Partition> all_partitions(int n);

// True when every odd part has even multiplicity.
bool is_symplectic(const Partition& p);

// Partitions of n with every odd part of even multiplicity; n must be even.
std::vector<Partition> symplectic_partitions(int n);

// Dominance order: every partial sum of a is >= the matching one of b.
// Requires equal sums.
bool dominates(const Partition& a, const Partition& b);

}  // namespace nilorbits
