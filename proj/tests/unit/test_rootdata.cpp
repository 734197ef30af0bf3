#include "doctest.h"

#include "satake/core/error.hpp"
#include "satake/rootdata/alcove.hpp"
#include "satake/rootdata/lattice.hpp"
#include "satake/rootdata/root_system.hpp"
#include "satake/rootdata/weights.hpp"

#include <cstdlib>
#include <random>
#include <set>

using namespace satake;

namespace {

Rational det(RMat a) {
  size_t n = a.size();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

const std::vector<std::string> small_types{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4", "A1xB2"};

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("sum of positive roots is 2 rho") {
  for (const auto& t : {"A1", "A5", "B3", "C5", "D5", "G2", "F4", "E6", "E7", "E8", "A2xG2"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    RVec s(rs.ambient_dim(), Rational(0));
    for (const auto& a : rs.positive_roots()) s = s + a;
    CHECK(s == Rational(2) * rs.rho());
  }
}

TEST_CASE("Weyl group orders match the product of degrees") {
  for (const auto& t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    RootSystem rs = RootSystem::build(t);
    BigInt p = 1;
    for (int d : rs.degrees()) p *= d;
    CAPTURE(t);
    CHECK(rs.weyl_order() == p);
  }
  CHECK(RootSystem::build("E8").weyl_order() == BigInt(696729600));
  CHECK(RootSystem::build("F4").weyl_order() == 1152);
}

TEST_CASE("enumerated Weyl group has the right size and distinct elements") {
  for (const auto& t : {"A3", "B3", "G2", "D4"}) {
    RootSystem rs = RootSystem::build(t);
    auto els = rs.weyl_elements();
    CHECK(BigInt(els.size()) == rs.weyl_order());
    std::set<RMat> mats;
    for (const auto& w : els) mats.insert(w.matrix(rs));
    CHECK(mats.size() == els.size());
  }
}

TEST_CASE("parity equals the determinant") {
  for (const auto& t : small_types) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    for (const auto& w : rs.weyl_elements()) {
      Rational d = det(w.matrix(rs));
      CHECK(d == Rational(w.length() % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("w(lambda) - lambda lies in the coroot lattice") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const auto& t : small_types) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    auto els = rs.weyl_elements();
    for (int trial = 0; trial < 5; ++trial) {
      RVec lam(rs.ambient_dim(), Rational(0));
      for (const auto& w : rs.fundamental_coweights()) lam = lam + Rational(c(rng)) * w;
      for (const auto& w : els) {
        RVec d = w.apply(rs, lam) - lam;
        bool integral = true;
        for (const auto& x : rs.coroot_coefficients(d)) integral = integral && is_integer(x);
        CHECK(integral);
      }
    }
  }
}

TEST_CASE("to_dominant is idempotent and constant on orbits") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& t : {"A3", "B3", "C3", "G2", "D4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    for (int trial = 0; trial < 10; ++trial) {
      RVec lam(rs.ambient_dim(), Rational(0));
      for (const auto& w : rs.fundamental_coweights()) lam = lam + Rational(c(rng)) * w;
      auto [d, w] = rs.to_dominant(lam);
      CHECK(rs.is_dominant_coweight(d));
      CHECK(w.apply(rs, lam) == d);
      CHECK(rs.to_dominant(d).first == d);
      for (const auto& x : rs.weyl_orbit(lam)) CHECK(rs.to_dominant(x).first == d);
    }
  }
}

TEST_CASE("integer label lattice agrees with the ambient model") {
  for (const auto& t : {"B3", "C3", "G2", "F4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    WeightLattice wl(rs);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      IVec v(rs.rank());
      for (auto& x : v) x = c(rng);
      RVec lab;
      for (auto x : v) lab.emplace_back(x);
      RVec amb = rs.weight_from_labels(lab);
      auto [d, len] = wl.to_dominant(v);
      auto [da, w] = rs.to_dominant(amb);
      IVec back;
      for (const auto& x : rs.weight_labels(da)) back.push_back(to_int64(x));
      CHECK(rs.is_dominant_weight(da));
      CHECK(back == d);
    }
  }
}

TEST_CASE("Langlands dual swaps B and C") {
  CHECK(RootSystem::build("B3").dual().label() == "C3");
  CHECK(RootSystem::build("C4").dual().label() == "B4");
  RootSystem g = RootSystem::build("G2");
  IMat c = g.cartan(), cd = g.dual().cartan();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(c[i][j] == cd[j][i]);
}

TEST_CASE("highest root coefficients") {
  CHECK(RootSystem::build("E8").theta_coeffs() == IVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem::build("F4").theta_coeffs() == IVec{2, 3, 4, 2});
  CHECK(RootSystem::build("B4").theta_coeffs() == IVec{1, 2, 2, 2});
  CHECK(RootSystem::build("C4").theta_coeffs() == IVec{2, 2, 2, 1});
  CHECK(RootSystem::build("D5").theta_coeffs() == IVec{1, 2, 2, 1, 1});
}

TEST_CASE("alcove reduction lands in the fundamental alcove") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (const auto& t : {"A2", "B2", "C3", "G2", "D4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    AlcoveFrame f(rs, 0);
    for (int trial = 0; trial < 30; ++trial) {
      RVec p(rs.ambient_dim(), Rational(0));
      for (const auto& w : rs.fundamental_coweights()) p = p + Rational(num(rng), den(rng)) * w;
      auto r = alcove_reduce(rs, p);
      CHECK(f.in_alcove(rs.coweight_labels(r.point)));
    }
  }
}

TEST_CASE("group presets and fundamental groups") {
  CHECK(group_preset("SL3").lattice.index_over_coroots() == 1);
  CHECK(group_preset("PSL3").lattice.index_over_coroots() == 3);
  CHECK(group_preset("GL3").lattice.index_over_coroots() == 1);
  CHECK(group_preset("SO5").lattice.index_over_coroots() == 2);
  CHECK(group_preset("Spin8").lattice.index_over_coroots() == 1);
  CHECK(group_preset("SO8").lattice.index_over_coroots() == 2);
  CHECK(group_preset("PSO8").lattice.index_over_coroots() == 4);
  CHECK(group_preset("E7ad").lattice.index_over_coroots() == 2);
  CHECK(group_preset("SL2xPSL3").lattice.index_over_coroots() == 3);
  CHECK_THROWS_AS(group_preset("Sp5"), DomainError);
  CHECK_FALSE(is_preset_name("XY7"));
  RootSystem b2 = RootSystem::build("B2");
  CHECK_THROWS_AS(LatticeSpec::from_generators(b2, {RVec{1, 0}}, "small"), DomainError);
}

TEST_CASE("Weyl enumeration cap is enforced") {
  setenv("WEYL_ENUM_CAP", "100", 1);
  CHECK_THROWS_AS(RootSystem::build("F4").weyl_elements(), CapExceeded);
  setenv("WEYL_ENUM_CAP", "bogus", 1);
  CHECK_THROWS_AS(RootSystem::build("B2").weyl_elements(), ParseError);
  unsetenv("WEYL_ENUM_CAP");
  CHECK(RootSystem::build("B2").weyl_elements().size() == 8);
}

}
