#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "xichar/partition.hpp"

using namespace xichar;

namespace {

// Independent count: nonincreasing sequences built recursively.
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// Brute-force centralizer order: number of permutations of n with cycle type mu
// is n!/z_mu, counted by cycle-type of every permutation.
std::map<Partition, long> cycle_type_counts(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long> counts;
  do {
    std::vector<bool> seen(static_cast<size_t>(n));
    std::vector<int> cycles;
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      int len = 0;
      for (int x = s; !seen[static_cast<size_t>(x)]; x = perm[static_cast<size_t>(x)]) {
        seen[static_cast<size_t>(x)] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    ++counts[Partition(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace

TEST_CASE("partition construction") {
  const Partition mu{1, 3, 1};
  CHECK(mu.parts() == std::vector<int>{3, 1, 1});
  CHECK(mu.weight() == 5);
  CHECK(mu.length() == 3);
  CHECK(mu.multiplicity(1) == 2);
  CHECK(mu.multiplicity(2) == 0);
  CHECK(mu.to_string() == "[3,1,1]");
  CHECK(Partition{}.empty());
  CHECK(Partition{2}.merged(Partition{2, 1}) == Partition{2, 2, 1});
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partitions_of counts and order") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  for (int n = 1; n <= 14; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == count_partitions(n, n));
    std::set<Partition> distinct(ps.begin(), ps.end());
    CHECK(distinct.size() == ps.size());
    for (size_t k = 0; k + 1 < ps.size(); ++k) CHECK(ps[k] > ps[k + 1]);
    for (const auto& p : ps) {
      CHECK(p.weight() == n);
      CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
    }
  }
  CHECK(partitions_of(14).size() == 135);
}

TEST_CASE("z_mu against permutation class sizes") {
  CHECK(z_of(Partition{}) == 1);
  CHECK(z_of(Partition{2, 2, 1}) == 8);
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  for (int n = 1; n <= 7; ++n) {
    const auto counts = cycle_type_counts(n);
    CHECK(counts.size() == partitions_of(n).size());
    for (const auto& [mu, c] : counts) CHECK(factorial(n) == z_of(mu) * c);
  }
  for (int n = 8; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& mu : partitions_of(n)) total += factorial(n) / z_of(mu);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("vertex distributions") {
  CHECK(vertex_distribution_of(Partition{3, 1, 1}) == std::vector<int>{2, 0, 1});
  CHECK(vertex_distribution_of(Partition{}) == std::vector<int>{});
  CHECK(partition_from_vertex_distribution({0, 0, 0, 1}) == Partition{4});
  CHECK(distribution_string({2, 0, 1}) == "[2,0,1]");
  for (int n = 1; n <= 10; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto i = vertex_distribution_of(mu);
      CHECK((i.empty() || i.back() != 0));
      CHECK(partition_from_vertex_distribution(i) == mu);
    }
}
