#ifndef XICHAR_MAPSERIES_HPP
#define XICHAR_MAPSERIES_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xichar/series.hpp"
#include "xichar/symfunc.hpp"

namespace xichar {

// (vertex distribution, faces, edges) of a rooted map.
struct MapKey {
  std::vector<int> i;  // i[k-1] = number of vertices of valence k, no trailing zeros
  int j = 0;
  int n = 0;

  // Throws std::invalid_argument unless sum k i_k = 2n and 1 <= j <= n + 1.
  void validate() const;
  Partition vertex_partition() const { return partition_from_vertex_distribution(i); }
  int vertex_count() const;

  // Rows ordered by n, then j, then vertex partition (increasing lex), which
  // is the layout of the published table.
  friend std::strong_ordering operator<=>(const MapKey& a, const MapKey& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.vertex_partition() <=> b.vertex_partition();
  }
  friend bool operator==(const MapKey& a, const MapKey& b) {
    return a.n == b.n && a.j == b.j && a.i == b.i;
  }
};

std::string to_string(const MapKey& key);

// Refined map counts m_{1/(b+1)}(i, j, n) as polynomials in b.
struct MapCountTable {
  std::map<MapKey, UniPoly> entries;
  int max_n = 0;
};

// Raised when an extracted coefficient is not an integer polynomial in b.
class MapExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sum_theta z^{|theta|/2} J_theta(y) J_theta(1_x) [p_2^{|theta|/2}]J_theta / <J_theta, J_theta>
// over even |theta| <= 2 max_n, with alpha = 1/gamma kept symbolic.
TruncatedSeries<PowerSumExpr> jack_partition_sum(int max_n);
// Serial reference for the OpenMP reduction above.
TruncatedSeries<PowerSumExpr> jack_partition_sum_serial(int max_n);

// M_gamma = 2 alpha z d/dz log(jack_partition_sum).
TruncatedSeries<PowerSumExpr> map_series(int max_n);

MapCountTable extract_map_counts(const TruncatedSeries<PowerSumExpr>& series);

// Convenience: extract_map_counts(map_series(max_n)).
MapCountTable map_count_table(int max_n);

std::map<MapKey, Rational> specialize_counts(const MapCountTable& table, const Rational& b_value);

struct NonnegReport {
  std::vector<std::string> violations;  // one line per entry with a negative coefficient
  bool empty() const { return violations.empty(); }
};

// Lists entries with negative b-coefficients. The nonnegativity is a
// conjecture, so this never throws.
NonnegReport nonneg_report(const MapCountTable& table);

}  // namespace xichar

#endif
