#ifndef XICHAR_BERNOULLI_HPP
#define XICHAR_BERNOULLI_HPP

#include "xichar/rational.hpp"

namespace xichar {

/// Bernoulli number B_j from t/(e^t - 1) = sum_j B_j t^j / j!, so B_1 = -1/2.
///
/// Values come from the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 (n >= 1)
/// and are memoized in a process-wide table that is safe to read and extend
/// from several threads.
Rational bernoulli(unsigned j);

namespace testing {
// Overwrite one cached value. Only for exercising failure paths of the
// verification suite; call reset_bernoulli_cache() afterwards.
void corrupt_bernoulli_cache(unsigned j, const Rational& value);
void reset_bernoulli_cache();
}  // namespace testing

}  // namespace xichar

#endif
