#ifndef XICHAR_PARTITION_HPP
#define XICHAR_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "xichar/rational.hpp"

namespace xichar {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Parts may be given in any order; they are sorted. Throws on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Multiplicity of part k.
  int multiplicity(int k) const;

  // Multiset union, e.g. (2) u (2,1) = (2,2,1).
  Partition merged(const Partition& o) const;

  // Lexicographic comparison of the part lists with zero padding. Restricted
  // to one weight this is reverse lexicographic order: (n) is the largest,
  // (1^n) the smallest.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  // "[3,1,1]"
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n, from (n) down to (1^n).
std::vector<Partition> partitions_of(int n);

// z_mu = prod_k k^{m_k} m_k!, the centralizer order of a permutation of cycle type mu.
Integer z_of(const Partition& mu);

// i_k = multiplicity of k in mu, trailing zeros dropped.
std::vector<int> vertex_distribution_of(const Partition& mu);
Partition partition_from_vertex_distribution(const std::vector<int>& i);

// "[2,0,1]"
std::string distribution_string(const std::vector<int>& i);

}  // namespace xichar

#endif
