#pragma once

#include "satake/rootdata/root_system.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace satake {

// A coweight read from the command line.
struct CoweightArg {
  RVec ambient;
  RVec labels;  // <alpha_i, lam>, possibly fractional
  bool integral() const;
  IVec int_labels() const;  // throws unless integral
};

// "(x,y,...)"  ambient rationals
// "[a,b,...]"  bracket coordinates (see polyhedron/coordinates.hpp)
// ["3/2","1/2"] JSON array of ambient rationals
CoweightArg parse_coweight(const RootSystem& rs, const std::string& text);
std::string ambient_string(const RVec& v);

struct FixtureResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct Fixture {
  std::string name;
  std::function<FixtureResult()> run;
};

const std::vector<Fixture>& fixture_list();

// Exit codes: 0 success, 1 refusal or failure, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satake
