#ifndef XICHAR_TABLE1_HPP
#define XICHAR_TABLE1_HPP

#include <vector>

#include "xichar/mapseries.hpp"

namespace xichar {

// One published row: refined map number m_{1/(b+1)}(i, j, n) with its
// b-coefficients listed from the constant term up.
struct PublishedMapCount {
  MapKey key;
  std::vector<long> b_coeffs;
};

// The published refined map numbers for maps with at most three edges
// (32 rows), in table order.
const std::vector<PublishedMapCount>& published_map_counts();

}  // namespace xichar

#endif
