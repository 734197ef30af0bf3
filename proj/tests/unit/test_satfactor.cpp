#include "doctest.h"

#include "satake/rootdata/lattice.hpp"
#include "satake/satfactor/satfactor.hpp"

#include <algorithm>
#include <numeric>

using namespace satake;

TEST_SUITE("satfactor") {

TEST_CASE("k_R is the LCM of the highest-root coefficients") {
  for (const auto& t : {"A3", "B4", "C3", "D5", "G2", "F4", "E6", "E7", "E8", "B2xG2"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    int64_t l = 1;
    for (auto m : rs.all_theta_coeffs()) l = std::lcm(l, m);
    CHECK(k_R(rs) == l);
  }
}

TEST_CASE("the coroot lattice gives k_R") {
  for (const auto& t : {"A1", "A4", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    CHECK(saturation_factor(rs, LatticeSpec::coroot(rs)) == k_R(rs));
  }
}

TEST_CASE("type A: the adjoint factor is l+1") {
  for (int l = 1; l <= 7; ++l) CHECK(k_w(RootSystem::build("A" + std::to_string(l))) == l + 1);
}

TEST_CASE("intermediate lattices of A3") {
  // L/Q of order 2 inside P/Q = Z/4.
  RootSystem rs = RootSystem::build("A3");
  auto w = rs.fundamental_coweights();
  LatticeSpec mid = LatticeSpec::from_generators(rs, {w[1], rs.simple_coroots()[0], rs.simple_coroots()[1], rs.simple_coroots()[2]}, "mid");
  CHECK(mid.index_over_coroots() == 2);
  BigInt k = saturation_factor(rs, mid);
  CHECK(k >= 1);
  CHECK(BigInt(4) % k == 0);
}

TEST_CASE("diagram automorphisms are permutations of the extended diagram") {
  for (const auto& t : {"A3", "B3", "C3", "D4", "D5", "E6", "E7"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    LatticeSpec p = LatticeSpec::coweight(rs);
    auto autos = fundamental_group_action(rs, p.derived_hnf());
    CHECK(BigInt(autos.size()) == p.index_over_coroots());
    std::vector<int> m{1};
    for (auto x : rs.theta_coeffs()) m.push_back(static_cast<int>(x));
    for (const auto& a : autos) {
      std::vector<int> sorted = a.perm;
      std::sort(sorted.begin(), sorted.end());
      for (size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
      // automorphisms preserve the marks
      for (size_t i = 0; i < a.perm.size(); ++i) CHECK(m[i] == m[a.perm[i]]);
    }
  }
}

TEST_CASE("products take the LCM over factors") {
  CHECK(k_for_group("SL2xPSL3") == 3);
  CHECK(k_for_group("PSL2xPSL3") == 6);
  CHECK(k_for_group("G2xSL4") == 6);
  CHECK(k_for_group("PSL4xSp4") == 4);
  CHECK(k_for_group("F4xE8") == 60);
}

TEST_CASE("GL reduces to its derived group") {
  for (int n = 2; n <= 6; ++n) CHECK(k_for_group("GL" + std::to_string(n)) == k_for_group("SL" + std::to_string(n)));
}

}
