#include "xichar/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace xichar {

namespace {

struct BernoulliTable {
  std::shared_mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned j) {
  auto& tab = table();
  {
    std::shared_lock lock(tab.mutex);
    if (j < tab.values.size()) return tab.values[j];
  }
  std::unique_lock lock(tab.mutex);
  auto& b = tab.values;
  while (b.size() <= j) {
    const unsigned n = static_cast<unsigned>(b.size());  // computing B_n
    // (n+1) B_n = -sum_{k<n} C(n+1, k) B_k
    Rational acc = 0;
    for (unsigned k = 0; k < n; ++k) {
      acc += Rational(binomial(n + 1, k)) * b[k];
    }
    b.push_back(-acc / (n + 1));
  }
  return b[j];
}

namespace testing {

void corrupt_bernoulli_cache(unsigned j, const Rational& value) {
  bernoulli(j);
  auto& tab = table();
  std::unique_lock lock(tab.mutex);
  tab.values[j] = value;
}

void reset_bernoulli_cache() {
  auto& tab = table();
  std::unique_lock lock(tab.mutex);
  tab.values.assign(1, Rational(1));
}

}  // namespace testing

}  // namespace xichar
