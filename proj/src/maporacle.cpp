#include "xichar/maporacle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace xichar {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
  int classes() {
    int c = 0;
    for (int x = 0; x < static_cast<int>(parent.size()); ++x)
      if (find(x) == x) ++c;
    return c;
  }
};

std::vector<int> offsets_of(const std::vector<int>& sides) {
  std::vector<int> off(sides.size() + 1, 0);
  for (size_t k = 0; k < sides.size(); ++k) off[k + 1] = off[k] + sides[k];
  return off;
}

void check_sides(const std::vector<int>& sides) {
  if (sides.empty()) throw std::invalid_argument("need at least one polygon");
  int total = 0;
  for (int k : sides) {
    if (k < 1) throw std::invalid_argument("a polygon needs at least one side");
    total += k;
  }
  if (total % 2 != 0) throw std::invalid_argument("total number of sides must be even");
}

// All perfect matchings of 0..m-1, first unmatched element paired first.
void matchings_rec(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    out.push_back(partner);
    return;
  }
  const int u = static_cast<int>(it - partner.begin());
  for (int v = u + 1; v < static_cast<int>(partner.size()); ++v) {
    if (partner[static_cast<size_t>(v)] != -1) continue;
    partner[static_cast<size_t>(u)] = v;
    partner[static_cast<size_t>(v)] = u;
    matchings_rec(partner, out);
    partner[static_cast<size_t>(u)] = partner[static_cast<size_t>(v)] = -1;
  }
}

std::vector<std::vector<int>> all_matchings(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> partner(static_cast<size_t>(m), -1);
  matchings_rec(partner, out);
  return out;
}

// Pair representatives (smaller side) in increasing order.
std::vector<int> pair_heads(const std::vector<int>& partner) {
  std::vector<int> heads;
  for (int u = 0; u < static_cast<int>(partner.size()); ++u)
    if (partner[static_cast<size_t>(u)] > u) heads.push_back(u);
  return heads;
}

void apply_flips(Gluing& g, const std::vector<int>& heads, unsigned long mask) {
  for (size_t q = 0; q < heads.size(); ++q) {
    const std::uint8_t t = (mask >> q) & 1UL;
    g.twisted[static_cast<size_t>(heads[q])] = t;
    g.twisted[static_cast<size_t>(g.partner[static_cast<size_t>(heads[q])])] = t;
  }
}

void tally(GlueCensus& census, const SurfaceSummary& sum) {
  ++census.configurations;
  if (!sum.connected) {
    ++census.disconnected;
    return;
  }
  auto& c = census.by_surface[SurfaceClass{sum.euler_char, sum.orientable}];
  ++c.all;
  if (sum.min_valence >= 3) ++c.valence3;
}

void merge_into(GlueCensus& into, const GlueCensus& part) {
  into.configurations += part.configurations;
  into.disconnected += part.disconnected;
  for (const auto& [cls, c] : part.by_surface) {
    auto& d = into.by_surface[cls];
    d.all += c.all;
    d.valence3 += c.valence3;
  }
}

// Key used inside the hot loops: sorted valences and face count.
using RawKey = std::pair<std::vector<int>, int>;
using RawCounts = std::map<RawKey, long long>;

void merge_raw(RawCounts& into, const RawCounts& part) {
  for (const auto& [k, c] : part) into[k] += c;
}

std::map<MapKey, long long> normalize(const RawCounts& raw, int n, long long divisor, const char* what) {
  std::map<MapKey, long long> out;
  for (const auto& [k, c] : raw) {
    if (c % divisor != 0) {
      std::ostringstream msg;
      msg << what << ": count " << c << " is not divisible by " << divisor;
      throw NormalizationError(msg.str());
    }
    MapKey key{vertex_distribution_of(Partition(k.first)), k.second, n};
    key.validate();
    out.emplace(std::move(key), c / divisor);
  }
  return out;
}

long long small_factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_edges(int n, int bound, int limit, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one edge");
  if (n > bound || n > limit) {
    std::ostringstream msg;
    msg << what << ": " << n << " edges exceeds the enumeration bound " << std::min(bound, limit);
    throw std::out_of_range(msg.str());
  }
}

// Orientable encoding: nu on 0..2n-1, edge involution e(x) = x ^ 1.
void orientable_visit(const std::vector<int>& nu, RawCounts& raw) {
  const int m = static_cast<int>(nu.size());
  UnionFind conn(m);
  std::vector<char> seen(static_cast<size_t>(m), 0);
  std::vector<int> valences;
  for (int x = 0; x < m; ++x) {
    conn.unite(x, x ^ 1);
    conn.unite(x, nu[static_cast<size_t>(x)]);
    if (seen[static_cast<size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = nu[static_cast<size_t>(y)]) {
      seen[static_cast<size_t>(y)] = 1;
      ++len;
    }
    valences.push_back(len);
  }
  if (conn.classes() != 1) return;
  std::fill(seen.begin(), seen.end(), 0);
  int faces = 0;
  for (int x = 0; x < m; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    ++faces;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = nu[static_cast<size_t>(y ^ 1)]) seen[static_cast<size_t>(y)] = 1;
  }
  std::sort(valences.begin(), valences.end(), std::greater<>());
  ++raw[{std::move(valences), faces}];
}

// Locally orientable encoding on 0..4n-1: side matching x ^ 2, end matching
// x ^ 1, corner matching c.
void locally_orientable_visit(const std::vector<int>& c, RawCounts& raw) {
  const int m = static_cast<int>(c.size());
  UnionFind vert(m), face(m), conn(m);
  for (int x = 0; x < m; ++x) {
    const int y = c[static_cast<size_t>(x)];
    vert.unite(x, x ^ 1);
    vert.unite(x, y);
    face.unite(x, x ^ 2);
    face.unite(x, y);
    conn.unite(x, x ^ 1);
    conn.unite(x, x ^ 2);
    conn.unite(x, y);
  }
  if (conn.classes() != 1) return;
  std::map<int, int> orbit_size;
  for (int x = 0; x < m; ++x) ++orbit_size[vert.find(x)];
  std::vector<int> valences;
  for (const auto& [root, size] : orbit_size) valences.push_back(size / 2);
  std::sort(valences.begin(), valences.end(), std::greater<>());
  ++raw[{std::move(valences), face.classes()}];
}

void corner_matchings_rec(std::vector<int>& c, RawCounts& raw) {
  auto it = std::find(c.begin(), c.end(), -1);
  if (it == c.end()) {
    locally_orientable_visit(c, raw);
    return;
  }
  const int u = static_cast<int>(it - c.begin());
  for (int v = u + 1; v < static_cast<int>(c.size()); ++v) {
    if (c[static_cast<size_t>(v)] != -1) continue;
    c[static_cast<size_t>(u)] = v;
    c[static_cast<size_t>(v)] = u;
    corner_matchings_rec(c, raw);
    c[static_cast<size_t>(u)] = c[static_cast<size_t>(v)] = -1;
  }
}

// Every orientable count is a multiple of 2^{n-1}(n-1)!, every locally
// orientable count of 4^{n-1}(n-1)!.
long long orientable_divisor(int n) { return (1LL << (n - 1)) * small_factorial(n - 1); }
long long locally_orientable_divisor(int n) { return (1LL << (2 * (n - 1))) * small_factorial(n - 1); }

// The three rooted maps with one edge: a segment (sphere), a loop on the
// sphere, a twisted loop on the projective plane.
void check_calibration() {
  static const bool ok = [] {
    std::vector<int> c(4, -1);
    RawCounts raw;
    corner_matchings_rec(c, raw);
    const long long d = locally_orientable_divisor(1);
    const RawCounts expected{{{{1, 1}, 1}, d}, {{{2}, 1}, d}, {{{2}, 2}, d}};
    return raw == expected;
  }();
  if (!ok) throw NormalizationError("locally orientable census fails the one-edge calibration");
}

}  // namespace

std::string Gluing::word() const {
  const auto off = offsets_of(sides);
  std::vector<int> letter(partner.size(), -1);
  int next = 0;
  std::ostringstream out;
  for (size_t p = 0; p < sides.size(); ++p) {
    if (p > 0) out << " |";
    for (int u = off[p]; u < off[p + 1]; ++u) {
      const int v = partner[static_cast<size_t>(u)];
      bool second = letter[static_cast<size_t>(v)] != -1;
      int id = second ? letter[static_cast<size_t>(v)] : next++;
      letter[static_cast<size_t>(u)] = id;
      if (u == off[p] && p > 0) out << ' ';
      if (id < 26) out << static_cast<char>('a' + id);
      else out << 'a' << id;
      if (second && !twisted[static_cast<size_t>(u)]) out << "^-1";
    }
  }
  return out.str();
}

SurfaceSummary classify_gluing(const Gluing& g) {
  const int s = g.polygon_count();
  const int m = g.side_count();
  if (static_cast<int>(g.twisted.size()) != m) throw std::invalid_argument("twist flags do not match the sides");
  const auto off = offsets_of(g.sides);
  if (off.back() != m) throw std::invalid_argument("side counts do not match the pairing");

  std::vector<int> polygon(static_cast<size_t>(m));
  for (int p = 0; p < s; ++p)
    for (int u = off[static_cast<size_t>(p)]; u < off[static_cast<size_t>(p) + 1]; ++u) polygon[static_cast<size_t>(u)] = p;
  auto start = [&](int u) { return u; };
  auto end = [&](int u) {
    const int p = polygon[static_cast<size_t>(u)];
    const int a = u - off[static_cast<size_t>(p)];
    return off[static_cast<size_t>(p)] + (a + 1) % g.sides[static_cast<size_t>(p)];
  };

  UnionFind corners(m), polys(s);
  // Orientation parity via union-find on 2s nodes: (p, up) = 2p, (p, down) = 2p+1.
  UnionFind orient(2 * s);
  for (int u = 0; u < m; ++u) {
    const int v = g.partner[static_cast<size_t>(u)];
    if (v < 0 || v >= m || g.partner[static_cast<size_t>(v)] != u || v == u)
      throw std::invalid_argument("pairing is not a perfect matching");
    if (g.twisted[static_cast<size_t>(u)] != g.twisted[static_cast<size_t>(v)])
      throw std::invalid_argument("twist flags differ within a pair");
    if (v < u) continue;
    const int p = polygon[static_cast<size_t>(u)], q = polygon[static_cast<size_t>(v)];
    polys.unite(p, q);
    if (g.twisted[static_cast<size_t>(u)]) {
      corners.unite(start(u), start(v));
      corners.unite(end(u), end(v));
      orient.unite(2 * p, 2 * q + 1);
      orient.unite(2 * p + 1, 2 * q);
    } else {
      corners.unite(start(u), end(v));
      corners.unite(end(u), start(v));
      orient.unite(2 * p, 2 * q);
      orient.unite(2 * p + 1, 2 * q + 1);
    }
  }

  SurfaceSummary out;
  out.faces = s;
  out.edges = m / 2;
  std::map<int, int> valence;
  for (int x = 0; x < m; ++x) ++valence[corners.find(x)];
  out.vertices = static_cast<int>(valence.size());
  out.min_valence = m;
  for (const auto& [root, k] : valence) out.min_valence = std::min(out.min_valence, k);
  out.euler_char = out.vertices - out.edges + out.faces;
  out.connected = polys.classes() == 1;
  out.orientable = true;
  for (int p = 0; p < s; ++p)
    if (orient.find(2 * p) == orient.find(2 * p + 1)) out.orientable = false;
  return out;
}

long long GlueCensus::lambda(int g, bool orientable) const {
  auto it = by_surface.find(SurfaceClass{1 - g, orientable});
  return it == by_surface.end() ? 0 : it->second.valence3;
}

GlueCensus glue_census_serial(const std::vector<int>& sides) {
  check_sides(sides);
  GlueCensus census;
  census.sides = sides;
  const int m = offsets_of(sides).back();
  for (const auto& partner : all_matchings(m)) {
    Gluing g{sides, partner, std::vector<std::uint8_t>(static_cast<size_t>(m), 0)};
    const auto heads = pair_heads(partner);
    for (unsigned long mask = 0; mask < (1UL << heads.size()); ++mask) {
      apply_flips(g, heads, mask);
      tally(census, classify_gluing(g));
    }
  }
  return census;
}

GlueCensus glue_census(const std::vector<int>& sides) {
  check_sides(sides);
  const int m = offsets_of(sides).back();
  const auto pairings = all_matchings(m);
  GlueCensus census;
  census.sides = sides;
  const long count = static_cast<long>(pairings.size());
#pragma omp parallel
  {
    GlueCensus local;
#pragma omp for schedule(dynamic, 16)
    for (long q = 0; q < count; ++q) {
      const auto& partner = pairings[static_cast<size_t>(q)];
      Gluing g{sides, partner, std::vector<std::uint8_t>(static_cast<size_t>(m), 0)};
      const auto heads = pair_heads(partner);
      for (unsigned long mask = 0; mask < (1UL << heads.size()); ++mask) {
        apply_flips(g, heads, mask);
        tally(local, classify_gluing(g));
      }
    }
#pragma omp critical
    merge_into(census, local);
  }
  return census;
}

std::vector<std::string> glue_patterns(const std::vector<int>& sides, SurfaceClass surface, bool valence3) {
  check_sides(sides);
  const int m = offsets_of(sides).back();
  std::vector<std::string> out;
  for (const auto& partner : all_matchings(m)) {
    Gluing g{sides, partner, std::vector<std::uint8_t>(static_cast<size_t>(m), 0)};
    const auto heads = pair_heads(partner);
    for (unsigned long mask = 0; mask < (1UL << heads.size()); ++mask) {
      apply_flips(g, heads, mask);
      const auto sum = classify_gluing(g);
      if (!sum.connected || sum.euler_char != surface.euler_char || sum.orientable != surface.orientable) continue;
      if (valence3 && sum.min_valence < 3) continue;
      out.push_back(g.word());
    }
  }
  return out;
}

Gluing orientable_lift(const Gluing& g, const std::vector<bool>& up) {
  const int s = g.polygon_count();
  if (static_cast<int>(up.size()) != s) throw std::invalid_argument("one orientation choice per polygon");
  const auto off = offsets_of(g.sides);
  Gluing out;
  for (int k : g.sides) {
    out.sides.push_back(k);
    out.sides.push_back(k);
  }
  const auto off2 = offsets_of(out.sides);
  const int m = g.side_count();
  out.partner.assign(static_cast<size_t>(2 * m), -1);
  out.twisted.assign(static_cast<size_t>(2 * m), 0);

  std::vector<int> polygon(static_cast<size_t>(m));
  for (int p = 0; p < s; ++p)
    for (int u = off[static_cast<size_t>(p)]; u < off[static_cast<size_t>(p) + 1]; ++u) polygon[static_cast<size_t>(u)] = p;
  // Side u of the up (copy = 0) or down (copy = 1) lift of its polygon.
  auto lifted = [&](int u, int copy) {
    const int p = polygon[static_cast<size_t>(u)];
    const int target = (up[static_cast<size_t>(p)] ? 2 * p : 2 * p + 1) ^ copy;
    return off2[static_cast<size_t>(target)] + (u - off[static_cast<size_t>(p)]);
  };
  auto join = [&](int a, int b, std::uint8_t t) {
    out.partner[static_cast<size_t>(a)] = b;
    out.partner[static_cast<size_t>(b)] = a;
    out.twisted[static_cast<size_t>(a)] = out.twisted[static_cast<size_t>(b)] = t;
  };
  for (int u = 0; u < m; ++u) {
    const int v = g.partner[static_cast<size_t>(u)];
    if (v < u) continue;
    const std::uint8_t t = g.twisted[static_cast<size_t>(u)];
    if (t) {
      join(lifted(u, 0), lifted(v, 1), t);
      join(lifted(u, 1), lifted(v, 0), t);
    } else {
      join(lifted(u, 0), lifted(v, 0), t);
      join(lifted(u, 1), lifted(v, 1), t);
    }
  }
  return out;
}

std::map<MapKey, long long> rooted_orientable_counts_serial(int n, int bound) {
  check_edges(n, bound, kMaxOrientableEdges, "rooted_orientable_counts");
  std::vector<int> nu(static_cast<size_t>(2 * n));
  std::iota(nu.begin(), nu.end(), 0);
  RawCounts raw;
  do orientable_visit(nu, raw);
  while (std::next_permutation(nu.begin(), nu.end()));
  return normalize(raw, n, orientable_divisor(n), "rooted_orientable_counts");
}

std::map<MapKey, long long> rooted_orientable_counts(int n, int bound) {
  check_edges(n, bound, kMaxOrientableEdges, "rooted_orientable_counts");
  const int m = 2 * n;
  RawCounts raw;
#pragma omp parallel
  {
    RawCounts local;
#pragma omp for schedule(dynamic)
    for (int first = 0; first < m; ++first) {
      std::vector<int> nu;
      nu.push_back(first);
      for (int x = 0; x < m; ++x)
        if (x != first) nu.push_back(x);
      do orientable_visit(nu, local);
      while (std::next_permutation(nu.begin() + 1, nu.end()));
    }
#pragma omp critical
    merge_raw(raw, local);
  }
  return normalize(raw, n, orientable_divisor(n), "rooted_orientable_counts");
}

std::map<MapKey, long long> rooted_locally_orientable_counts_serial(int n, int bound) {
  check_edges(n, bound, kMaxLocallyOrientableEdges, "rooted_locally_orientable_counts");
  check_calibration();
  std::vector<int> c(static_cast<size_t>(4 * n), -1);
  RawCounts raw;
  corner_matchings_rec(c, raw);
  return normalize(raw, n, locally_orientable_divisor(n), "rooted_locally_orientable_counts");
}

std::map<MapKey, long long> rooted_locally_orientable_counts(int n, int bound) {
  check_edges(n, bound, kMaxLocallyOrientableEdges, "rooted_locally_orientable_counts");
  check_calibration();
  const int m = 4 * n;
  RawCounts raw;
#pragma omp parallel
  {
    RawCounts local;
#pragma omp for schedule(dynamic)
    for (int v = 1; v < m; ++v) {
      std::vector<int> c(static_cast<size_t>(m), -1);
      c[0] = v;
      c[static_cast<size_t>(v)] = 0;
      corner_matchings_rec(c, local);
    }
#pragma omp critical
    merge_raw(raw, local);
  }
  return normalize(raw, n, locally_orientable_divisor(n), "rooted_locally_orientable_counts");
}

LambdaValues lambda_from_census(int g, int s, int bound) {
  if (g < 1 || s < 1) throw std::invalid_argument("lambda_from_census: g and s must both be at least 1");
  const int lo = g + s;
  const int hi = 3 * g + 3 * s - 3;
  if (hi > bound) {
    std::ostringstream msg;
    msg << "lambda_from_census (g=" << g << ", s=" << s << ") needs maps with up to " << hi
        << " edges; oracle bound is " << bound;
    throw std::out_of_range(msg.str());
  }
  auto filtered_sum = [&](const std::map<MapKey, long long>& counts, int n) {
    long long total = 0;
    for (const auto& [key, c] : counts) {
      if (key.j != s) continue;
      if (!key.i.empty() && key.i[0] != 0) continue;
      if (key.i.size() > 1 && key.i[1] != 0) continue;
      if (key.vertex_count() != n - g - s + 1) continue;
      total += c;
    }
    return total;
  };
  LambdaValues v;
  const Rational s_fact(factorial(static_cast<unsigned>(s)));
  for (int n = lo; n <= hi; ++n) {
    const Rational w = s_fact * ((n - s) % 2 == 0 ? 1 : -1) / (2 * n);
    v.all += w * static_cast<long>(filtered_sum(rooted_locally_orientable_counts(n, bound), n));
    v.orientable += w * static_cast<long>(filtered_sum(rooted_orientable_counts(n, bound), n));
  }
  v.nonorientable = v.all - v.orientable;
  const LambdaValues closed = lambda_values(g, s);
  if (v.all != closed.all || v.orientable != closed.orientable)
    throw RouteMismatch("lambda_from_census (g=" + std::to_string(g) + ", s=" + std::to_string(s) + ") gives (" +
                        to_string(v.all) + ", " + to_string(v.orientable) + "), Bernoulli forms give (" +
                        to_string(closed.all) + ", " + to_string(closed.orientable) + ")");
  return v;
}

}  // namespace xichar
