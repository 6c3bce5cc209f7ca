#include "xichar/mapseries.hpp"

#include <numeric>
#include <sstream>

#include "xichar/jack.hpp"

namespace xichar {

void MapKey::validate() const {
  int total = 0;
  for (size_t k = 0; k < i.size(); ++k) {
    if (i[k] < 0) throw std::invalid_argument("negative vertex count in " + to_string(*this));
    total += static_cast<int>(k + 1) * i[k];
  }
  if (!i.empty() && i.back() == 0) throw std::invalid_argument("trailing zero in vertex distribution");
  if (total != 2 * n) throw std::invalid_argument("valence sum is not 2n in " + to_string(*this));
  if (j < 1 || j > n + 1) throw std::invalid_argument("face count out of range in " + to_string(*this));
}

int MapKey::vertex_count() const { return std::accumulate(i.begin(), i.end(), 0); }

std::string to_string(const MapKey& key) {
  std::ostringstream out;
  out << "(i=" << distribution_string(key.i) << ", j=" << key.j << ", n=" << key.n << ")";
  return out.str();
}

namespace {

void check_max_n(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
}

// Coefficient J(1_x) [p_2^m]J / <J, J> attached to J(y).
PowerSumExpr partition_sum_term(const JackRecord& rec) {
  XPoly factor = rec.principal * (rec.p2coeff / rec.norm);
  return lift(rec.expansion, factor);
}

TruncatedSeries<PowerSumExpr> empty_sum(int max_n) {
  TruncatedSeries<PowerSumExpr> out(Var::z, max_n);
  out[0] = PowerSumExpr(Partition{}, XPoly(AlphaFn(1)));
  return out;
}

}  // namespace

TruncatedSeries<PowerSumExpr> jack_partition_sum_serial(int max_n) {
  check_max_n(max_n);
  auto out = empty_sum(max_n);
  for (int k = 1; k <= max_n; ++k) {
    for (const auto& shape : partitions_of(2 * k)) {
      JackRecord rec = solve_jack(shape);
      if (rec.p2coeff.is_zero()) continue;
      out[k] += partition_sum_term(rec);
    }
  }
  return out;
}

TruncatedSeries<PowerSumExpr> jack_partition_sum(int max_n) {
  check_max_n(max_n);
  struct Job {
    int k;
    std::shared_ptr<const JackRecord> rec;
  };
  std::vector<Job> jobs;
  for (int k = 1; k <= max_n; ++k)
    for (auto& rec : jacks_of_weight(2 * k))
      if (!rec->p2coeff.is_zero()) jobs.push_back({k, rec});

  std::vector<PowerSumExpr> terms(jobs.size());
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long q = 0; q < count; ++q) terms[static_cast<size_t>(q)] = partition_sum_term(*jobs[static_cast<size_t>(q)].rec);

  auto out = empty_sum(max_n);
  for (size_t q = 0; q < jobs.size(); ++q) out[jobs[q].k] += terms[q];
  return out;
}

TruncatedSeries<PowerSumExpr> map_series(int max_n) {
  auto series = series_z_ddz(series_log(jack_partition_sum(max_n)));
  // 2/gamma = 2 alpha
  series.scale(AlphaFn(UniPoly::monomial(Var::alpha, 2, 1)));
  return series;
}

MapCountTable extract_map_counts(const TruncatedSeries<PowerSumExpr>& series) {
  if (series.var() != Var::z) throw VariableMismatch(Var::z, series.var());
  MapCountTable table;
  table.max_n = series.max_order();
  for (int n = 1; n <= series.max_order(); ++n) {
    for (const auto& [mu, xpoly] : series[n].terms()) {
      for (int j = 0; j <= xpoly.degree(); ++j) {
        const AlphaFn c = xpoly.coeff(j);
        if (c.is_zero()) continue;
        MapKey key{vertex_distribution_of(mu), j, n};
        if (!c.is_polynomial())
          throw MapExtractionError("coefficient of " + to_string(key) + " is not polynomial in alpha: " + c.pretty());
        UniPoly in_b = c.num().shifted(1, Var::b);
        for (const auto& coeff : in_b.coeffs())
          if (coeff.get_den() != 1)
            throw MapExtractionError("non-integer b-coefficient in " + to_string(key) + ": " + in_b.pretty());
        key.validate();
        table.entries.emplace(std::move(key), std::move(in_b));
      }
    }
  }
  return table;
}

MapCountTable map_count_table(int max_n) { return extract_map_counts(map_series(max_n)); }

std::map<MapKey, Rational> specialize_counts(const MapCountTable& table, const Rational& b_value) {
  std::map<MapKey, Rational> out;
  for (const auto& [key, poly] : table.entries) out.emplace(key, poly.evaluate(b_value));
  return out;
}

NonnegReport nonneg_report(const MapCountTable& table) {
  NonnegReport report;
  for (const auto& [key, poly] : table.entries) {
    for (const auto& c : poly.coeffs()) {
      if (sgn(c) < 0) {
        report.violations.push_back(to_string(key) + ": " + poly.pretty());
        break;
      }
    }
  }
  return report;
}

}  // namespace xichar
