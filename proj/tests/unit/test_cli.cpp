#include "doctest.h"

#include "json.hpp"
#include "satake/cli/cli.hpp"
#include "satake/core/error.hpp"
#include "satake/hecke/hecke.hpp"

#include <cstdlib>
#include <sstream>

using namespace satake;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("satfactor output") {
  auto r = run({"satfactor", "G2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"k_R":6,"k_w":6})"));
  auto s = run({"satfactor", "PSL4"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["k"] == 4);
  auto t = run({"satfactor", "A3", "--lattice", "coroot"});
  CHECK(json::parse(t.out)["k"] == 1);
}

TEST_CASE("hecke output re-parses to the computed polynomials") {
  auto r = run({"hecke", "Spin5", "(1,1)", "(1,1)", "(1,1)"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(LaurentPoly::parse(j["m0"].get<std::string>()) == LaurentPoly::parse("q^5-q"));
  CHECK(j["q3_solvable"] == true);
  std::map<int, BigInt> sparse;
  for (auto& [k, v] : j["m0_sparse"].items()) sparse[std::stoi(k)] = BigInt(v.get<int64_t>());
  CHECK(LaurentPoly::from_sparse(sparse) == LaurentPoly::parse("q^5-q"));

  HeckeRing h(RootSystem::build("B2"));
  const auto& prod = h.basis_product({0, 1}, {0, 1});
  for (auto& [k, v] : j["constants"].items()) {
    IVec lab = parse_coweight(h.system(), k).int_labels();
    CHECK(prod.at(lab) == LaurentPoly::parse(v.get<std::string>()));
  }
  CHECK(prod.size() == j["constants"].size());
}

TEST_CASE("bracket arguments are accepted") {
  auto a = run({"hecke", "G2", "[1,0]", "[1,0]", "[0,1]"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["m0"] == "-q^5-q^6+q^11+q^12");
  auto b = run({"check-triple", "Spin5", "[0,0]", "[0,0]", "[0,0]"});
  REQUIRE(b.code == 0);
  json j = json::parse(b.out);
  CHECK(j["Q1_Q2"] == true);
  CHECK(j["Q3"] == true);
  CHECK(j["Q4"] == true);
  CHECK(j["lattice_condition"] == true);
}

TEST_CASE("--eval-q gives nonnegative integers") {
  for (const char* p : {"2", "3", "4", "5", "8", "9"}) {
    for (auto w : std::vector<std::vector<std::string>>{{"(1,1)", "(1,1)", "(1,1)"}, {"(2,0)", "(1,1)", "(1,1)"}, {"(2,2)", "(2,2)", "(3,1)"}}) {
      auto r = run({"hecke", "Spin5", w[0], w[1], w[2], "--eval-q", p});
      REQUIRE(r.code == 0);
      json j = json::parse(r.out);
      CHECK(j["m0"].is_number_integer());
      CHECK(j["m0"].get<int64_t>() >= 0);
    }
  }
}

TEST_CASE("tsv output") {
  auto r = run({"hecke", "Spin5", "(1,1)", "(1,1)", "(1,1)", "--format", "tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("m0\t-q+q^5\n") != std::string::npos);
}

TEST_CASE("tree-count") {
  auto r = run({"tree-count", "2", "1", "1", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 6);
}

TEST_CASE("exit codes and messages") {
  auto bad_vec = run({"tensor", "B2", "(1,1)", "(1,2)"});
  CHECK(bad_vec.code == 2);
  CHECK(bad_vec.err.find("(1,2)") != std::string::npos);
  auto garbage = run({"tensor", "B2", "(1,x)", "(0,0)"});
  CHECK(garbage.code == 2);
  CHECK(garbage.err.find("(1,x)") != std::string::npos);
  CHECK(run({"satfactor", "Q9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hecke", "Spin5", "(1,1)"}).code == 2);
  CHECK(run({"satfactor", "G2", "--format", "xml"}).code == 2);
  CHECK(run({"tree-count", "1", "1", "1", "1"}).code == 2);

  setenv("WEYL_ENUM_CAP", "10", 1);
  auto capped = run({"tensor", "B3", "(2,1,0)", "(2,1,0)"});
  unsetenv("WEYL_ENUM_CAP");
  CHECK(capped.code == 1);
}

TEST_CASE("parse_coweight forms agree") {
  RootSystem b2 = RootSystem::build("B2");
  auto a = parse_coweight(b2, "(3/2,1/2)");
  auto b = parse_coweight(b2, R"(["3/2","1/2"])");
  CHECK(a.ambient == b.ambient);
  CHECK_FALSE(a.integral());
  CHECK_THROWS_AS(a.int_labels(), DomainError);
  CHECK(parse_coweight(b2, "[1,0]").ambient == RVec{1, 1});
  CHECK_THROWS_AS(parse_coweight(b2, "(1,2,3)"), Error);
  CHECK_THROWS_AS(parse_coweight(b2, "1,2"), ParseError);
}

TEST_CASE("fixture list is complete") {
  CHECK(fixture_list().size() >= 40);
  auto r = run({"fixtures"});
  CHECK(r.out.find("PASS") != std::string::npos);
}

}
