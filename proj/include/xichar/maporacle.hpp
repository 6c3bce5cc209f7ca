#ifndef XICHAR_MAPORACLE_HPP
#define XICHAR_MAPORACLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xichar/eulerchar.hpp"
#include "xichar/mapseries.hpp"

namespace xichar {

// Brute-force enumerators. Each kernel comes in an OpenMP version and a
// serial reference that walks the same search space in order.

// Side-pairing of polygons P_1..P_s with side counts sides[k]. Sides are
// numbered globally, polygon by polygon, each polygon starting at its fixed
// initial side. Side a of a polygon runs from corner a to corner a+1.
// A twisted pair is glued head to head ("a ... a"), an untwisted pair head to
// tail ("a ... a^-1").
struct Gluing {
  std::vector<int> sides;
  std::vector<int> partner;       // partner[side], a perfect matching
  std::vector<std::uint8_t> twisted;  // per side, equal on both sides of a pair

  int polygon_count() const { return static_cast<int>(sides.size()); }
  int side_count() const { return static_cast<int>(partner.size()); }
  // Word notation, one word per polygon separated by " | ", e.g. "abab^-1".
  std::string word() const;
};

struct SurfaceSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;  // polygons
  int euler_char = 0;
  bool orientable = true;
  bool connected = true;
  int min_valence = 0;  // smallest vertex valence of the boundary graph
};

SurfaceSummary classify_gluing(const Gluing& gluing);

struct SurfaceClass {
  int euler_char = 0;
  bool orientable = true;
  // The genus index used for lambda_g: Euler characteristic 1 - g.
  int lambda_genus() const { return 1 - euler_char; }
  friend auto operator<=>(const SurfaceClass&, const SurfaceClass&) = default;
};

struct GlueCounts {
  long long all = 0;
  long long valence3 = 0;  // every boundary vertex has valence >= 3
};

struct GlueCensus {
  std::vector<int> sides;
  long long configurations = 0;  // pairings x flip assignments
  long long disconnected = 0;
  std::map<SurfaceClass, GlueCounts> by_surface;

  // Count for a surface of Euler characteristic 1 - g with the valence filter
  // (the lambda numbers); orientable selects lambda^O vs lambda^N.
  long long lambda(int g, bool orientable) const;
};

// Enumerates every pairing and flip assignment. Requires an even side total.
GlueCensus glue_census(const std::vector<int>& sides);
GlueCensus glue_census_serial(const std::vector<int>& sides);

// Word notation of every connected gluing landing on the given surface class.
std::vector<std::string> glue_patterns(const std::vector<int>& sides, SurfaceClass surface, bool valence3);

// Lift of a gluing of s polygons to the 2s polygons P_k^+ (index 2k) and
// P_k^- (index 2k+1). up[k] says whether P_k^+ carries the up orientation.
Gluing orientable_lift(const Gluing& gluing, const std::vector<bool>& up);

inline constexpr int kDefaultOracleBound = 3;
// Hard limits regardless of the requested bound.
inline constexpr int kMaxOrientableEdges = 5;
inline constexpr int kMaxLocallyOrientableEdges = 4;

// Rooted maps with n edges by (vertex distribution, faces), from the
// permutation encoding: nu on 2n edge-end labels, with the fixed involution
// (1 2)(3 4)...; transitive pairs divided by 2^{n-1}(n-1)!.
std::map<MapKey, long long> rooted_orientable_counts(int n, int bound = kDefaultOracleBound);
std::map<MapKey, long long> rooted_orientable_counts_serial(int n, int bound = kDefaultOracleBound);

// Same for all surfaces, from three matchings on 4n side-end labels with the
// two edge-structure matchings fixed; transitive triples divided by
// 4^{n-1}(n-1)!.
// All four throw std::out_of_range when n exceeds bound or the hard limit.
std::map<MapKey, long long> rooted_locally_orientable_counts(int n, int bound = kDefaultOracleBound);
std::map<MapKey, long long> rooted_locally_orientable_counts_serial(int n, int bound = kDefaultOracleBound);

// Raised when a census count fails to divide by the rooting normalization.
class NormalizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lambda^s_g, Lambda^{s,O}, Lambda^{s,N} assembled from the rooted-map
// censuses (maps with s faces and no vertices of valence 1 or 2), and checked
// against lambda_values. Requires 3g + 3s - 3 <= bound.
LambdaValues lambda_from_census(int g, int s, int bound = kDefaultOracleBound);

}  // namespace xichar

#endif
