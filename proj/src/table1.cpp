#include "xichar/table1.hpp"

namespace xichar {

const std::vector<PublishedMapCount>& published_map_counts() {
  static const std::vector<PublishedMapCount> rows = {
      {{{2}, 1, 1}, {1}},
      {{{0, 1}, 1, 1}, {0, 1}},
      {{{0, 1}, 2, 1}, {1}},

      {{{2, 1}, 1, 2}, {2}},
      {{{0, 2}, 1, 2}, {0, 1}},
      {{{1, 0, 1}, 1, 2}, {0, 4}},
      {{{0, 0, 0, 1}, 1, 2}, {1, 1, 3}},
      {{{0, 2}, 2, 2}, {1}},
      {{{1, 0, 1}, 2, 2}, {4}},
      {{{0, 0, 0, 1}, 2, 2}, {0, 5}},
      {{{0, 0, 0, 1}, 3, 2}, {2}},

      {{{2, 2}, 1, 3}, {3}},
      {{{0, 3}, 1, 3}, {0, 1}},
      {{{3, 0, 1}, 1, 3}, {2}},
      {{{1, 1, 1}, 1, 3}, {0, 12}},
      {{{0, 0, 2}, 1, 3}, {1, 1, 5}},
      {{{2, 0, 0, 1}, 1, 3}, {0, 9}},
      {{{0, 1, 0, 1}, 1, 3}, {3, 3, 9}},
      {{{1, 0, 0, 0, 1}, 1, 3}, {6, 6, 18}},
      {{{0, 0, 0, 0, 0, 1}, 1, 3}, {0, 13, 13, 15}},
      {{{0, 3}, 2, 3}, {1}},
      {{{1, 1, 1}, 2, 3}, {12}},
      {{{0, 0, 2}, 2, 3}, {0, 9}},
      {{{2, 0, 0, 1}, 2, 3}, {9}},
      {{{0, 1, 0, 1}, 2, 3}, {0, 15}},
      {{{1, 0, 0, 0, 1}, 2, 3}, {0, 30}},
      {{{0, 0, 0, 0, 0, 1}, 2, 3}, {10, 10, 32}},
      {{{0, 0, 2}, 3, 3}, {4}},
      {{{0, 1, 0, 1}, 3, 3}, {6}},
      {{{1, 0, 0, 0, 1}, 3, 3}, {12}},
      {{{0, 0, 0, 0, 0, 1}, 3, 3}, {0, 22}},
      {{{0, 0, 0, 0, 0, 1}, 4, 3}, {5}},
  };
  return rows;
}

}  // namespace xichar
