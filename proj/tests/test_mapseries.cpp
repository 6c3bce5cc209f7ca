#include <doctest.h>

#include "support.hpp"
#include "xichar/mapseries.hpp"
#include "xichar/table1.hpp"

using namespace xichar;
using testsupport::alpha;

namespace {

UniPoly bpoly(const std::vector<long>& c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return UniPoly(Var::b, r);
}

const MapCountTable& table3() {
  static const MapCountTable t = map_count_table(3);
  return t;
}

PowerSumExpr term(const Partition& mu, XPoly c) { return PowerSumExpr(mu, std::move(c)); }

}  // namespace

TEST_CASE("MapKey validation and order") {
  CHECK_NOTHROW((MapKey{{0, 0, 0, 1}, 1, 2}).validate());
  CHECK_THROWS_AS((MapKey{{0, 1, 0}, 1, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((MapKey{{2}, 1, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((MapKey{{2}, 3, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((MapKey{{2}, 0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((MapKey{{-1, 1}, 1, 1}).validate(), std::invalid_argument);
  CHECK((MapKey{{1, 0, 1}, 1, 2}).vertex_count() == 2);
  CHECK(MapKey{{0, 1}, 2, 1} < MapKey{{2, 1}, 1, 2});
  CHECK(MapKey{{0, 1}, 1, 1} < MapKey{{0, 1}, 2, 1});
}

TEST_CASE("first-order coefficients of the partition sum and map series") {
  const AlphaFn a = alpha();
  const auto sum = jack_partition_sum(2);
  CHECK(sum.var() == Var::z);
  CHECK(sum[0] == term({}, XPoly(AlphaFn(1))));
  // x/(2 alpha) p_(1,1) + x (x + alpha - 1)/(2 alpha) p_(2)
  const AlphaFn half_inv = AlphaFn::alpha_pow(-1) * Rational(1, 2);
  const PowerSumExpr first = term({1, 1}, XPoly({AlphaFn(0), half_inv})) +
                             term({2}, XPoly({AlphaFn(0), (a - AlphaFn(1)) * half_inv, half_inv}));
  CHECK(sum[1] == first);

  const auto m = map_series(2);
  CHECK(m[0].is_zero());
  CHECK(m[1] == term({1, 1}, XPoly::monomial(AlphaFn(1), 1)) + term({2}, XPoly({AlphaFn(0), a - AlphaFn(1), AlphaFn(1)})));
}

TEST_CASE("serial and parallel partition sums agree") {
  CHECK(jack_partition_sum(3) == jack_partition_sum_serial(3));
  CHECK_THROWS_AS(jack_partition_sum(0), std::invalid_argument);
}

TEST_CASE("extracted map counts") {
  const auto& t = table3();
  CHECK(t.max_n == 3);
  CHECK(t.entries.at(MapKey{{2}, 1, 1}) == bpoly({1}));
  CHECK(t.entries.at(MapKey{{0, 1}, 1, 1}) == bpoly({0, 1}));
  CHECK(t.entries.at(MapKey{{0, 0, 0, 1}, 1, 2}) == bpoly({1, 1, 3}));
  CHECK(t.entries.at(MapKey{{0, 0, 0, 0, 0, 1}, 2, 3}) == bpoly({10, 10, 32}));
  CHECK(t.entries.at(MapKey{{0, 0, 0, 0, 0, 1}, 1, 3}) == bpoly({0, 13, 13, 15}));
}

TEST_CASE("published table reproduced row by row") {
  const auto& t = table3();
  const auto& rows = published_map_counts();
  CHECK(rows.size() == 32);
  CHECK(t.entries.size() == rows.size());
  for (const auto& row : rows) {
    INFO(to_string(row.key));
    REQUIRE(t.entries.count(row.key) == 1);
    CHECK(t.entries.at(row.key) == bpoly(row.b_coeffs));
  }
}

TEST_CASE("structural invariants of the map counts") {
  const auto& t = table3();
  std::map<int, Rational> at0, at1;
  for (const auto& [key, poly] : t.entries) {
    CHECK_NOTHROW(key.validate());
    const int euler = key.vertex_count() - key.n + key.j;
    CHECK(euler <= 2);
    CHECK(poly.degree() <= 2 - euler);
    // an orientable surface has even Euler characteristic
    if (euler % 2 != 0) CHECK(poly.coeff(0) == 0);
    at0[key.n] += poly.evaluate(0);
    at1[key.n] += poly.evaluate(1);
  }
  // rooted maps with n edges on orientable surfaces, and on all surfaces
  CHECK(at0 == std::map<int, Rational>{{1, 2}, {2, 10}, {3, 74}});
  CHECK(at1 == std::map<int, Rational>{{1, 3}, {2, 24}, {3, 297}});

  const auto series = map_series(3);
  for (int n = 1; n <= 3; ++n)
    for (const auto& [mu, c] : series[n].terms()) {
      CHECK(mu.weight() == 2 * n);
      CHECK(c.degree() <= n + 1);
    }
}

TEST_CASE("specialization and nonnegativity report") {
  const auto& t = table3();
  const auto at0 = specialize_counts(t, 0);
  const auto at1 = specialize_counts(t, 1);
  const MapKey torus{{0, 0, 0, 1}, 1, 2};
  CHECK(at0.at(torus) == 1);
  CHECK(at1.at(torus) == 5);
  CHECK(specialize_counts(MapCountTable{}, Rational(3, 2)).empty());

  CHECK(nonneg_report(t).empty());
  MapCountTable single;
  single.max_n = 1;
  single.entries.insert_or_assign(MapKey{{0, 1}, 1, 1}, bpoly({1, 1}));
  CHECK(nonneg_report(single).empty());
  single.entries.insert_or_assign(MapKey{{2}, 1, 1}, bpoly({1, -1}));
  const auto report = nonneg_report(single);
  CHECK(report.violations.size() == 1);
}

TEST_CASE("extraction rejects a series in the wrong variable") {
  TruncatedSeries<PowerSumExpr> wrong(Var::t, 1);
  CHECK_THROWS_AS(extract_map_counts(wrong), VariableMismatch);
}
