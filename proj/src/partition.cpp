#include "xichar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xichar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::merged(const Partition& o) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t k = 0; k < parts_.size(); ++k) out << (k ? "," : "") << parts_[k];
  out << "]";
  return out.str();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, n, current, out);
  return out;
}

Integer z_of(const Partition& mu) {
  Integer z = 1;
  const auto& parts = mu.parts();
  size_t k = 0;
  while (k < parts.size()) {
    size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    const auto mult = static_cast<unsigned>(run - k);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[k]), mult);
    z *= power * factorial(mult);
    k = run;
  }
  return z;
}

std::vector<int> vertex_distribution_of(const Partition& mu) {
  std::vector<int> i(mu.empty() ? 0 : static_cast<size_t>(mu.parts().front()), 0);
  for (int p : mu.parts()) ++i[static_cast<size_t>(p - 1)];
  return i;
}

Partition partition_from_vertex_distribution(const std::vector<int>& i) {
  std::vector<int> parts;
  for (size_t k = 0; k < i.size(); ++k) {
    if (i[k] < 0) throw std::invalid_argument("negative entry in vertex distribution");
    parts.insert(parts.end(), static_cast<size_t>(i[k]), static_cast<int>(k + 1));
  }
  return Partition(std::move(parts));
}

std::string distribution_string(const std::vector<int>& i) {
  std::ostringstream out;
  out << "[";
  for (size_t k = 0; k < i.size(); ++k) out << (k ? "," : "") << i[k];
  out << "]";
  return out.str();
}

}  // namespace xichar
