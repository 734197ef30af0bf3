#include "doctest.h"

#include "satake/core/error.hpp"
#include "satake/hecke/hecke.hpp"
#include "satake/hecke/tree.hpp"

#include <random>

using namespace satake;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

std::vector<IVec> dominant_box(const WeightLattice& wl, int64_t hi) {
  std::vector<IVec> out{IVec{}};
  for (size_t i = 0; i < wl.rank(); ++i) {
    std::vector<IVec> next;
    for (const auto& v : out)
      for (int64_t x = 0; x <= hi; ++x) {
        IVec w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("A1: products in the tree") {
  HeckeRing h(RootSystem::build("A1"));
  // bipartite: two steps never end at distance 1
  HeckeElem want{{{2}, P("1")}, {{0}, P("q+1")}};
  CHECK(h.basis_product({1}, {1}) == want);
  HeckeElem want2{{{3}, P("1")}, {{1}, P("q")}};
  CHECK(h.basis_product({2}, {1}) == want2);
  CHECK(h.sphere_volume({3}) == P("q^3+q^2"));
}

TEST_CASE("A1 tree counts match m0") {
  HeckeRing h(RootSystem::build("A1"));
  for (int64_t q : {2, 3})
    for (int64_t a = 0; a <= 3; ++a) {
      CHECK(h.sphere_volume({a}).eval_q(q) == Rational(tree_sphere_size(q, a)));
      for (int64_t b = 0; b <= 3; ++b)
        for (int64_t c = 0; c <= 3; ++c) {
          CAPTURE(q);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(h.m0({a}, {b}, {c}).eval_q(q) == Rational(tree_triangle_count(q, a, b, c)));
        }
    }
}

TEST_CASE("tree counting basics") {
  CHECK(tree_sphere_size(2, 0) == 1);
  CHECK(tree_sphere_size(2, 3) == 12);
  CHECK(tree_sphere_size(4, 2) == 20);
  // Degenerate triangles: a = b + c with a single geodesic choice for y.
  CHECK(tree_triangle_count(2, 2, 1, 1) == tree_sphere_size(2, 2));
  CHECK(tree_triangle_count(3, 1, 1, 3) == 0);
  CHECK_THROWS(tree_sphere_size(1, 2));
}

TEST_CASE("Satake image round-trips") {
  for (const auto& t : {"A2", "B2", "C2", "G2"}) {
    CAPTURE(t);
    HeckeRing h(RootSystem::build(t));
    for (const auto& lam : dominant_box(h.lattice(), 2)) {
      HeckeElem one{{lam, LaurentPoly(1)}};
      CHECK(h.from_satake(h.satake_expand(lam)) == one);
      CHECK(h.satake_expand(lam).at(lam) == LaurentPoly::monomial_v(static_cast<int>(h.two_rho_pairing(lam))));
    }
    CHECK(h.satake_expand(IVec(2, 0)) == SatakeImage{{IVec(2, 0), LaurentPoly(1)}});
  }
}

TEST_CASE("sphere volume at q = 1 is the orbit size") {
  for (const auto& t : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(t);
    HeckeRing h(RootSystem::build(t));
    for (const auto& lam : dominant_box(h.lattice(), 1))
      CHECK(h.sphere_volume(lam).eval_q(1) == Rational(static_cast<int64_t>(h.lattice().orbit(lam).size())));
  }
}

TEST_CASE("commutative and associative") {
  std::mt19937 rng(23);
  for (const auto& t : {"A2", "B2", "G2"}) {
    CAPTURE(t);
    HeckeRing h(RootSystem::build(t));
    auto ws = dominant_box(h.lattice(), t[0] == 'G' ? 1 : 2);
    std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
      HeckeElem x{{ws[pick(rng)], 1}}, y{{ws[pick(rng)], 1}}, z{{ws[pick(rng)], 1}};
      CHECK(h.multiply(x, y) == h.multiply(y, x));
      CHECK(h.multiply(h.multiply(x, y), z) == h.multiply(x, h.multiply(y, z)));
    }
  }
}

TEST_CASE("m0 by two routes, positivity and the leading term") {
  for (const auto& t : {"A2", "B2", "G2"}) {
    CAPTURE(t);
    HeckeRing h(RootSystem::build(t));
    auto ws = dominant_box(h.lattice(), 1);
    for (const auto& a : ws)
      for (const auto& b : ws)
        for (const auto& c : ws) {
          LaurentPoly m = h.m0(a, b, c);
          CHECK(m == h.m0_triple_product(a, b, c));
          for (int q : {2, 3, 5}) CHECK(m.eval_q(q) >= 0);
          int64_t top = h.two_rho_pairing(a + b + c);
          if (!m.is_zero()) CHECK(m.high_v() <= top);
          CHECK(BigInt(m.coeff_v(static_cast<int>(top))) == h.reps().n0(a, b, c));
        }
  }
}

TEST_CASE("weights outside the chamber are rejected") {
  HeckeRing h(RootSystem::build("B2"));
  CHECK_THROWS_AS(h.m0({1, -1}, {0, 0}, {0, 0}), DomainError);
  CHECK_THROWS_AS(h.satake_expand({1}), DomainError);
}

}
