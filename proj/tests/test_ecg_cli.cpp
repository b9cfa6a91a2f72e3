#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "arp/cli.hpp"
#include "arp/coloring.hpp"
#include "arp/ecg.hpp"

using namespace arp;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("./") + name;
}

}  // namespace

TEST_CASE("ecg round trip is bit-exact") {
  EdgeColoring col = construct_star_coloring(8, 6);
  std::ostringstream first;
  write_ecg(first, col);
  std::istringstream in(first.str());
  EdgeColoring parsed = read_ecg(in);
  std::ostringstream second;
  write_ecg(second, parsed);
  CHECK(first.str() == second.str());
  CHECK(parsed.color_count() == col.color_count());
  CHECK(parsed.colors() == col.colors());
}

TEST_CASE("ecg accepts comments, rejects malformed input") {
  std::istringstream ok("# a comment\n3 3 2\n0 1 0\n# mid comment\n0 2 1\n1 2 0\n");
  CHECK(read_ecg(ok).color_count() == 2);

  std::istringstream dup("3 3 2\n0 1 0\n0 1 1\n1 2 0\n");
  CHECK_THROWS_AS(read_ecg(dup), std::invalid_argument);

  std::istringstream gap("3 3 3\n0 1 0\n0 2 2\n1 2 0\n");  // color 1 unused
  CHECK_THROWS_AS(read_ecg(gap), std::invalid_argument);

  std::istringstream reversed("3 3 2\n1 0 0\n0 2 1\n1 2 0\n");  // u >= v
  CHECK_THROWS_AS(read_ecg(reversed), std::invalid_argument);

  std::istringstream short_body("3 3 2\n0 1 0\n0 2 1\n");
  CHECK_THROWS_AS(read_ecg(short_body), std::invalid_argument);

  std::istringstream long_body("3 2 2\n0 1 0\n0 2 1\n1 2 0\n");
  CHECK_THROWS_AS(read_ecg(long_body), std::invalid_argument);
}

TEST_CASE("cli formula subcommands") {
  auto ar = run_cli({"ar", "10", "6"});
  CHECK(ar.status == 0);
  CHECK(ar.out == "11\n");

  auto branch = run_cli({"ar", "9", "9", "--branch"});
  CHECK(branch.status == 0);
  CHECK(branch.out == "22 TIE\n");

  CHECK(run_cli({"ex", "10", "5"}).out == "13\n");
  CHECK(run_cli({"excon", "10", "7"}).out == "18\n");
  CHECK(run_cli({"h", "10", "6", "2"}).out == "18\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"nonsense"}).status == 2);
  CHECK(run_cli({"ar", "10"}).status == 2);
  CHECK(run_cli({"ar", "4", "5"}).status == 3);   // out of theorem range
  CHECK(run_cli({"oracle", "ar", "9", "5"}).status == 3);  // refused
}

TEST_CASE("cli construct + detect round trip") {
  std::string path = temp_path("cli_test_clique.ecg");
  auto c = run_cli({"construct", "clique", "6", "5", "--out", path});
  REQUIRE(c.status == 0);
  auto d = run_cli({"detect", path, "5"});
  CHECK(d.status == 0);
  CHECK(d.out == "NONE\n");

  // a rainbow coloring is detected, and the certificate lines parse
  std::string rpath = temp_path("cli_test_rainbow.ecg");
  {
    Graph k5 = complete_graph(5);
    std::vector<int> distinct(10);
    for (int i = 0; i < 10; ++i) distinct[i] = i;
    write_ecg_file(rpath, EdgeColoring(k5, distinct));
  }
  auto found = run_cli({"detect", rpath, "5"});
  CHECK(found.status == 0);
  CHECK(found.out.substr(0, 1) != "N");

  auto cc = run_cli({"detect", rpath, "5", "--color-coding", "50", "7"});
  CHECK(cc.status == 0);
  CHECK(cc.out.substr(0, 1) != "N");

  std::remove(path.c_str());
  std::remove(rpath.c_str());
}

TEST_CASE("cli verify subcommands and exit status") {
  auto bip = run_cli({"verify", "bipartite", "--ell", "4"});
  CHECK(bip.status == 0);
  CHECK(bip.out.find("instances=137") != std::string::npos);
  CHECK(bip.out.find("counterexamples=0") != std::string::npos);

  auto cons = run_cli({"verify", "consistency", "--max-k", "20", "--max-n", "60"});
  CHECK(cons.status == 0);
}

TEST_CASE("cli json output") {
  auto ar = run_cli({"--json", "ar", "10", "6", "--branch"});
  REQUIRE(ar.status == 0);
  auto j = nlohmann::json::parse(ar.out);
  CHECK(j["value"] == 11);
  CHECK(j["branch"] == "STAR");

  auto oar = run_cli({"--json", "oracle", "ar", "5", "5"});
  REQUIRE(oar.status == 0);
  auto jo = nlohmann::json::parse(oar.out);
  CHECK(jo["value"] == 5);
  CHECK(jo.contains("witness"));
  CHECK(jo["stats"].contains("nodes_expanded"));

  auto ver = run_cli({"--json", "verify", "bipartite", "--ell", "3"});
  REQUIRE(ver.status == 0);
  auto jv = nlohmann::json::parse(ver.out);
  CHECK(jv["counterexamples"].empty());
  CHECK(jv["instances"] == 10);
}
