#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(XICHAR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("euler xi") {
  const auto r = run("euler xi --g 1 --s 1");
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(j["variable"] == "1/gamma");
  CHECK(j["coefficients"] == nlohmann::json({"1/12", "-1/4", "1/12"}));
  CHECK(parse(run("euler xi --g 1 --s 1 --route logw")) == j);
  CHECK(parse(run("euler xi --g 1 --s 1 --route maps")) == j);
}

TEST_CASE("euler chi") {
  const auto r = run("euler chi --variant real --g 1 --s 0");
  CHECK(r.status == 0);
  CHECK(parse(r) == "1/2");
  CHECK(run("--format pretty euler chi --variant complex --g 3 --s 1").out == "1/120\n");
  CHECK(run("euler chi --variant fixed --g 3 --s 1 --m 1 --separating").status == 1);
}

TEST_CASE("jack record") {
  const auto j = parse(run("jack --shape 2"));
  CHECK(j["shape"] == nlohmann::json({2}));
  CHECK(j["norm"] == nlohmann::json({"0", "0", "2", "2"}));
  CHECK(j["p2coeff"] == nlohmann::json({"0", "1"}));
  CHECK(j["expansion"]["[1,1]"] == nlohmann::json({"1"}));
  CHECK(run("jack --shape 2,x").status == 1);
}

TEST_CASE("map table output") {
  const auto r = run("maps table");
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(j["max_n"] == 3);
  CHECK(j["rows"].size() == 32);
  CHECK(run("maps table").out == r.out);
  const auto csv = run("--format csv maps table --b 1");
  CHECK(csv.out.rfind("i,j,n,value\n", 0) == 0);
  CHECK(csv.out.find("0 0 0 1,1,2,5\n") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  const auto glue = parse(run("-v oracle glue --sides 4"));
  CHECK(glue["configurations"] == 12);
  bool found = false;
  for (const auto& row : glue["valence3_patterns"])
    if (row["euler_char"] == 0 && row["orientable"] == false) {
      found = true;
      CHECK(row["patterns"].size() == 4);
    }
  CHECK(found);
  const auto pretty = run("--format pretty -v oracle glue --sides 4").out;
  for (const char* w : {"aabb", "abba", "abab^-1", "aba^-1b"}) CHECK(pretty.find(w) != std::string::npos);

  const auto lam = parse(run("oracle lambda --g 1 --s 1"));
  CHECK(lam["all"] == "-1/12");
  CHECK(lam["nonorientable"] == "0");
  CHECK(run("oracle lambda --g 1 --s 2").status == 1);
  CHECK(run("oracle rooted --edges 2 --surface all").status == 0);
}

TEST_CASE("verify-all and argument errors") {
  const auto r = run("verify-all --max-edges 1");
  CHECK(r.status == 0);
  CHECK(parse(r)["exit_code"] == 0);
  CHECK(run("--format xml verify-all").status != 0);
  CHECK(run("--max-edges 9 maps table").status != 0);
  CHECK(run("").status != 0);
}
