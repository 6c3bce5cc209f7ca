#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "xichar/verify.hpp"

using namespace xichar;

namespace {

struct Options {
  std::string format = "json";
  int max_edges = 3;
  int oracle_bound = kDefaultOracleBound;
  std::uint64_t seed = VerifyConfig{}.seed;
  bool verbose = false;
};

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    parts.push_back(v);
  }
  return parts;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void cost_warning(const Options& opt) {
  if (opt.max_edges > 3)
    std::cerr << "warning: --max-edges " << opt.max_edges << " solves Jack systems up to weight " << 2 * opt.max_edges
              << "; 4 takes seconds, 5 takes minutes\n";
  if (opt.oracle_bound > kDefaultOracleBound)
    std::cerr << "warning: --oracle-bound " << opt.oracle_bound
              << " enlarges the brute-force sweeps (4 edges: about 2 million matchings)\n";
}

int cmd_table(const Options& opt, const std::string& b_value) {
  cost_warning(opt);
  const auto table = map_count_table(opt.max_edges);
  if (!b_value.empty()) {
    const auto at_b = specialize_counts(table, parse_rational(b_value));
    if (opt.format == "csv") std::cout << to_csv(at_b);
    else if (opt.format == "pretty") std::cout << to_pretty(at_b);
    else print_json(to_json(at_b));
  } else if (opt.format == "csv") {
    std::cout << to_csv(table);
  } else if (opt.format == "pretty") {
    std::cout << to_pretty(table);
  } else {
    print_json(to_json(table));
  }
  const auto report = nonneg_report(table);
  for (const auto& v : report.violations) std::cerr << "negative b-coefficient: " << v << '\n';
  return report.empty() ? 0 : 3;
}

int cmd_xi(const Options& opt, int g, int s, const std::string& route) {
  GammaPoly xi;
  if (route == "closed") xi = xi_closed(g, s);
  else if (route == "logw") xi = xi_from_logW(g, s);
  else {
    cost_warning(opt);
    xi = xi_from_maps(g, s, map_count_table(opt.max_edges));
  }
  if (opt.format == "pretty") std::cout << xi.pretty() << '\n';
  else if (opt.format == "csv") {
    std::cout << "power_of_1/gamma,coefficient\n";
    for (int k = 0; k <= xi.degree(); ++k) std::cout << k << ',' << to_string(xi.coeff(k)) << '\n';
  } else print_json(to_json(xi));
  return 0;
}

int cmd_chi(const Options& opt, const std::string& variant, int g, int s, int m, bool separating) {
  ChiValue v;
  if (variant == "real") v = (g >= 1 && s >= 1) ? chi_real_from_lambda(g, s) : chi_real(g, s);
  else if (variant == "complex") v = chi_complex(g, s);
  else v = chi_fixed_curves(g, s, m, separating);
  if (opt.format == "json") print_json(to_json(v.value));
  else std::cout << to_string(v.value) << '\n';
  return 0;
}

int cmd_jack(const Options& opt, const std::string& shape_text) {
  const auto rec = jack(Partition(parse_parts(shape_text)));
  if (opt.format == "pretty") {
    std::cout << "shape " << rec->shape.to_string() << '\n';
    for (const auto& [mu, c] : rec->expansion.terms()) std::cout << "  p" << mu.to_string() << ": " << c.pretty() << '\n';
    std::cout << "norm " << rec->norm.pretty() << "\nprincipal " << rec->principal.pretty() << "\np2coeff "
              << rec->p2coeff.pretty() << '\n';
  } else {
    print_json(to_json(*rec));
  }
  return 0;
}

int cmd_glue(const Options& opt, const std::string& sides_text) {
  const auto sides = parse_parts(sides_text);
  const auto census = glue_census(sides);
  json by_class = json::array();
  if (opt.verbose) {
    for (const auto& [cls, c] : census.by_surface) {
      if (c.valence3 == 0) continue;
      json row;
      row["euler_char"] = cls.euler_char;
      row["orientable"] = cls.orientable;
      row["patterns"] = glue_patterns(sides, cls, true);
      by_class.push_back(std::move(row));
    }
  }
  if (opt.format == "pretty") {
    std::cout << "configurations " << census.configurations << ", disconnected " << census.disconnected << '\n';
    for (const auto& [cls, c] : census.by_surface)
      std::cout << "chi " << cls.euler_char << (cls.orientable ? " orientable" : " nonorientable") << ": " << c.all
                << " gluings, " << c.valence3 << " with every vertex of valence >= 3\n";
    for (const auto& row : by_class) {
      std::cout << "valence >= 3 patterns, chi " << row["euler_char"].get<int>()
                << (row["orientable"].get<bool>() ? " orientable" : " nonorientable") << ":\n";
      for (const auto& w : row["patterns"]) std::cout << "  " << w.get<std::string>() << '\n';
    }
    return 0;
  }
  json out = to_json(census);
  if (opt.verbose) out["valence3_patterns"] = std::move(by_class);
  print_json(out);
  return 0;
}

int cmd_rooted(const Options& opt, int edges, const std::string& surface) {
  cost_warning(opt);
  const auto census = surface == "orientable" ? rooted_orientable_counts(edges, opt.oracle_bound)
                                              : rooted_locally_orientable_counts(edges, opt.oracle_bound);
  if (opt.format == "json") {
    print_json(to_json(census));
  } else {
    std::map<MapKey, Rational> rows;
    for (const auto& [key, c] : census) rows.emplace(key, Rational(static_cast<long>(c)));
    std::cout << (opt.format == "csv" ? to_csv(rows) : to_pretty(rows));
  }
  return 0;
}

int cmd_lambda(const Options& opt, int g, int s) {
  cost_warning(opt);
  const auto v = lambda_from_census(g, s, opt.oracle_bound);
  if (opt.format == "json") print_json(to_json(v));
  else std::cout << "all " << to_string(v.all) << "\norientable " << to_string(v.orientable) << "\nnonorientable "
                 << to_string(v.nonorientable) << '\n';
  return 0;
}

int cmd_verify(const Options& opt) {
  cost_warning(opt);
  VerifyConfig cfg;
  cfg.max_edges = opt.max_edges;
  cfg.seed = opt.seed;
  const auto report = verify_all(cfg);
  if (opt.format == "json") print_json(to_json(report));
  else std::cout << to_pretty(report);
  if (const auto* f = report.first_failure()) std::cerr << "first failure: " << f->name << ": " << f->detail << '\n';
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack-function map series, parametrized Euler characteristics and brute-force map oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--max-edges", opt.max_edges, "Map-table truncation (Jack weight 2N)")->check(CLI::Range(1, 5));
  app.add_option("--oracle-bound", opt.oracle_bound, "Largest edge count the brute-force oracles accept")
      ->check(CLI::Range(1, kMaxOrientableEdges));
  app.add_option("--seed", opt.seed, "Seed for randomized property checks");
  app.add_flag("-v,--verbose", opt.verbose, "Extra detail (gluing patterns)");

  std::function<int()> action;

  auto* maps = app.add_subcommand("maps", "Refined map numbers");
  maps->require_subcommand(1);
  auto* table = maps->add_subcommand("table", "Map-count polynomials in b");
  std::string b_value;
  table->add_option("--b", b_value, "Specialize b to a rational value");
  table->callback([&] { action = [&] { return cmd_table(opt, b_value); }; });

  auto* euler = app.add_subcommand("euler", "Euler characteristics");
  euler->require_subcommand(1);
  int g = 1, s = 1, m = 0;
  std::string route = "closed", variant = "real";
  bool separating = false;
  auto* xi = euler->add_subcommand("xi", "Parametrized Euler characteristic as a polynomial in 1/gamma");
  xi->add_option("--g", g)->required()->check(CLI::PositiveNumber);
  xi->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  xi->add_option("--route", route)->check(CLI::IsMember({"closed", "logw", "maps"}));
  xi->callback([&] { action = [&] { return cmd_xi(opt, g, s, route); }; });
  auto* chi = euler->add_subcommand("chi", "Orbifold Euler characteristic of a moduli space");
  chi->add_option("--variant", variant)->check(CLI::IsMember({"real", "complex", "fixed"}));
  chi->add_option("--g", g)->required()->check(CLI::NonNegativeNumber);
  chi->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
  chi->add_option("--m", m, "Number of fixed curves")->check(CLI::NonNegativeNumber);
  chi->add_flag("--separating", separating);
  chi->callback([&] { action = [&] { return cmd_chi(opt, variant, g, s, m, separating); }; });

  auto* jack_cmd = app.add_subcommand("jack", "Jack symmetric function record");
  std::string shape;
  jack_cmd->add_option("--shape", shape, "Parts, comma separated, e.g. 2,1")->required();
  jack_cmd->callback([&] { action = [&] { return cmd_jack(opt, shape); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force censuses");
  oracle->require_subcommand(1);
  auto* glue = oracle->add_subcommand("glue", "Side pairings of polygons");
  std::string sides;
  glue->add_option("--sides", sides, "Side counts, comma separated")->required();
  glue->callback([&] { action = [&] { return cmd_glue(opt, sides); }; });
  auto* rooted = oracle->add_subcommand("rooted", "Rooted maps by vertex distribution and faces");
  int edges = 1;
  std::string surface = "orientable";
  rooted->add_option("--edges", edges)->required()->check(CLI::PositiveNumber);
  rooted->add_option("--surface", surface)->check(CLI::IsMember({"orientable", "all"}));
  rooted->callback([&] { action = [&] { return cmd_rooted(opt, edges, surface); }; });
  auto* lambda = oracle->add_subcommand("lambda", "Lambda sums from the rooted-map censuses");
  lambda->add_option("--g", g)->required()->check(CLI::PositiveNumber);
  lambda->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  lambda->callback([&] { action = [&] { return cmd_lambda(opt, g, s); }; });

  auto* verify = app.add_subcommand("verify-all", "Run every cross-check");
  verify->callback([&] { action = [&] { return cmd_verify(opt); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const RouteMismatch& e) {
    std::cerr << "identity violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
