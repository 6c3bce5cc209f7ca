#include "xichar/serialize.hpp"

#include <sstream>

namespace xichar {

namespace {

std::string tuple_string(const std::vector<int>& i) {
  std::ostringstream out;
  out << "(";
  for (size_t k = 0; k < i.size(); ++k) out << (k ? "," : "") << i[k];
  out << ")";
  return out.str();
}

std::string space_joined(const std::vector<int>& i) {
  std::ostringstream out;
  for (size_t k = 0; k < i.size(); ++k) out << (k ? " " : "") << i[k];
  return out.str();
}

json key_fields(const MapKey& key) {
  json row;
  row["i"] = key.i;
  row["j"] = key.j;
  row["n"] = key.n;
  return row;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

json to_json(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

json to_json(const Partition& mu) { return mu.parts(); }

json to_json(const AlphaFn& f) {
  if (f.is_polynomial()) return to_json(f.num());
  json out;
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

json to_json(const MapCountTable& table) {
  json rows = json::array();
  for (const auto& [key, poly] : table.entries) {
    json row = key_fields(key);
    row["poly"] = to_json(poly);
    rows.push_back(std::move(row));
  }
  json out;
  out["max_n"] = table.max_n;
  out["variable"] = "b";
  out["rows"] = std::move(rows);
  return out;
}

json to_json(const std::map<MapKey, Rational>& specialized) {
  json rows = json::array();
  for (const auto& [key, v] : specialized) {
    json row = key_fields(key);
    row["value"] = to_string(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::map<MapKey, long long>& census) {
  json rows = json::array();
  for (const auto& [key, c] : census) {
    json row = key_fields(key);
    row["count"] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GammaPoly& xi) {
  json out;
  out["variable"] = "1/gamma";
  out["coefficients"] = to_json(xi.poly);
  return out;
}

json to_json(const JackRecord& rec) {
  json out;
  out["shape"] = to_json(rec.shape);
  json expansion = json::object();
  for (const auto& [mu, c] : rec.expansion.terms()) expansion[mu.to_string()] = to_json(c);
  out["expansion"] = std::move(expansion);
  out["norm"] = to_json(rec.norm);
  json principal = json::array();
  for (const auto& c : rec.principal.coeffs()) principal.push_back(to_json(c));
  out["principal"] = std::move(principal);
  out["p2coeff"] = to_json(rec.p2coeff);
  out["variable"] = "alpha";
  return out;
}

json to_json(const LambdaValues& v) {
  json out;
  out["all"] = to_string(v.all);
  out["orientable"] = to_string(v.orientable);
  out["nonorientable"] = to_string(v.nonorientable);
  return out;
}

json to_json(const GlueCensus& census, const std::vector<std::string>& patterns) {
  json out;
  out["sides"] = census.sides;
  out["configurations"] = census.configurations;
  out["disconnected"] = census.disconnected;
  json rows = json::array();
  for (const auto& [cls, c] : census.by_surface) {
    json row;
    row["euler_char"] = cls.euler_char;
    row["orientable"] = cls.orientable;
    row["genus"] = cls.lambda_genus();
    row["all"] = c.all;
    row["valence3"] = c.valence3;
    rows.push_back(std::move(row));
  }
  out["surfaces"] = std::move(rows);
  if (!patterns.empty()) out["patterns"] = patterns;
  return out;
}

std::string to_csv(const MapCountTable& table) {
  std::ostringstream out;
  out << "i,j,n,poly\n";
  for (const auto& [key, poly] : table.entries) {
    out << space_joined(key.i) << ',' << key.j << ',' << key.n << ',';
    for (size_t k = 0; k < poly.coeffs().size(); ++k) out << (k ? " " : "") << to_string(poly.coeffs()[k]);
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const std::map<MapKey, Rational>& specialized) {
  std::ostringstream out;
  out << "i,j,n,value\n";
  for (const auto& [key, v] : specialized)
    out << space_joined(key.i) << ',' << key.j << ',' << key.n << ',' << to_string(v) << '\n';
  return out.str();
}

std::string to_pretty(const MapCountTable& table) {
  std::ostringstream out;
  for (const auto& [key, poly] : table.entries)
    out << tuple_string(key.i) << "  " << key.j << "  " << key.n << "  " << poly.pretty() << '\n';
  return out.str();
}

std::string to_pretty(const std::map<MapKey, Rational>& specialized) {
  std::ostringstream out;
  for (const auto& [key, v] : specialized)
    out << tuple_string(key.i) << "  " << key.j << "  " << key.n << "  " << to_string(v) << '\n';
  return out.str();
}

}  // namespace xichar
