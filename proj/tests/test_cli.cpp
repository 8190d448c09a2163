#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "gfp/cli.hpp"

using gfp::cli::CliResult;
using gfp::cli::run;
using nlohmann::json;

TEST_CASE("info reports torsion with a witness") {
  CliResult r = run({"--p", "2", "--f", "1,0,1", "info"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("torsion: no") != std::string::npos);
  CHECK(r.out.find("[1,1]") != std::string::npos);

  CliResult grig = run({"--p", "2", "--f", "1,1,1", "info", "--json"});
  CHECK(grig.exit_code == 0);
  json j = json::parse(grig.out);
  CHECK(j["schema"] == 1);
  CHECK(j["torsion"]["is_p_group"] == true);
  CHECK(j["torsion"]["r"] == 3);
  CHECK(j["dimension_theoretical"] == "5/8");
}

TEST_CASE("dimension in JSON") {
  CliResult r = run({"--p", "2", "--f", "1,1,1", "dimension", "--mode",
                     "empirical", "--json"});
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["dimension"] == "5/8");
  CHECK(j["r_measured"] == true);
  CHECK(j["t_measured"] == true);
  CHECK(j["matches_closed_form"] == true);

  // byte-identical across runs
  CliResult again = run({"--p", "2", "--f", "1,1,1", "dimension", "--mode",
                         "empirical", "--json"});
  CHECK(again.out == r.out);
}

TEST_CASE("general-dim evaluates the Hanoi data") {
  CliResult r = run({"general-dim", "--k", "3", "--q", "6", "--eps", "1",
                     "--r", "2", "--t", "log6(2)", "--s", "1", "--json"});
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  double dim = j["dimension"].get<double>();
  CHECK(std::abs(dim - (1.0 - std::log(2.0) / std::log(6.0) / 3.0)) < 1e-9);
}

TEST_CASE("exit codes") {
  // spec error
  CHECK(run({"--p", "4", "--f", "1,1", "info"}).exit_code == 2);
  CHECK(run({"--p", "2", "--f", "0,1", "info"}).exit_code == 2);
  // missing spec
  CHECK(run({"info"}).exit_code == 2);
  // usage error
  CHECK(run({"frobnicate"}).exit_code == 2);
  // budget exceeded
  CliResult budget = run({"--p", "2", "--f", "1,1,1", "--budget-elems", "50",
                          "enumerate", "--depth", "4"});
  CHECK(budget.exit_code == 3);
  CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
  // verification failure
  CHECK(run({"--p", "2", "--f", "1,1,1", "verify", "wreath", "--depth",
             "4"}).exit_code == 1);
  CHECK(run({"--p", "2", "--f", "1,1,1", "verify", "wreath", "--depth",
             "3"}).exit_code == 0);
}

TEST_CASE("word queries") {
  CliResult order = run({"--p", "2", "--f", "1,1,1", "order", "--word",
                         "a d0", "--json"});
  CHECK(order.exit_code == 0);
  json oj = json::parse(order.out);
  CHECK(oj["kind"] == "finite");
  CHECK(oj["order"] == 4);

  CliResult inf = run({"--p", "2", "--f", "1,0,1", "order", "--word",
                       "a b[1,1]", "--json"});
  json ij = json::parse(inf.out);
  CHECK(ij["kind"] == "infinite");

  CliResult ident = run({"--p", "2", "--f", "1,1,1", "identity", "--word",
                         "a d0 a d0 a d0 a d0"});
  CHECK(ident.exit_code == 0);
  CHECK(ident.out.find("yes") != std::string::npos);

  CliResult image = run({"--p", "2", "--f", "1,1,1", "act", "--word", "a",
                         "--on", "01"});
  CHECK(image.exit_code == 0);
  CHECK(image.out == "11\n");
}

TEST_CASE("portrait and enumerate output") {
  CliResult portrait = run({"--p", "2", "--f", "1,1,1", "portrait", "--word",
                            "d0", "--depth", "3"});
  CHECK(portrait.exit_code == 0);
  json pj = json::parse(portrait.out);
  CHECK(pj["p"] == 2);
  CHECK(pj["depth"] == 3);
  CHECK(pj["activities"] == json::array({0, 0, 0, 0, 0, 1, 0}));

  CliResult table = run({"--p", "2", "--f", "1,1,1", "enumerate", "--depth",
                         "2"});
  CHECK(table.exit_code == 0);
  CHECK(table.out.rfind("p=2 f=1,1,1 depth=2 size=2^3\n", 0) == 0);

  CliResult indices = run({"--p", "2", "--f", "1,1,1", "indices",
                           "--max-depth", "3", "--json"});
  json nj = json::parse(indices.out);
  CHECK(nj["nus"] == json::array({1, 3, 7}));
}

TEST_CASE("pattern subcommands") {
  CliResult count = run({"--p", "2", "--f", "1,1,1", "patterns", "count",
                         "--depth", "6", "--json"});
  CHECK(count.exit_code == 0);
  json cj = json::parse(count.out);
  CHECK(cj["count"] == "4398046511104");  // 2^42

  CliResult check5 = run({"--p", "2", "--f", "1,1,1", "patterns", "check",
                          "--depth", "4"});
  CHECK(check5.exit_code == 0);

  // window check on a corrupted portrait
  std::string path = "cli_test_portrait.json";
  {
    std::ofstream f(path);
    f << R"({"p":2,"depth":4,"activities":[0,0,0,0,0,1,0,0,0,0,0,0,0,1,0]})";
  }
  CliResult bad = run({"--p", "2", "--f", "1,1,1", "patterns", "check",
                       "--portrait", path});
  CHECK(bad.exit_code == 1);
  std::remove(path.c_str());

  CliResult exported = run({"--p", "2", "--f", "1,1,1", "patterns", "export"});
  CHECK(exported.exit_code == 0);
  CHECK(exported.out.rfind("p=2 m=2 pattern_depth=4 size=4096\n", 0) == 0);
}

TEST_CASE("verify subcommands pass on the known cases") {
  CHECK(run({"--p", "2", "--f", "1,1,1", "verify", "branch-generators",
             "--depth", "5"}).exit_code == 0);
  CHECK(run({"--p", "2", "--f", "1,1,1", "verify", "selfrep", "--depth",
             "3"}).exit_code == 0);
  CHECK(run({"--p", "2", "--f", "1,1,1", "verify", "abelian", "--depth",
             "4"}).exit_code == 0);
}
