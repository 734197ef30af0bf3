#include "doctest.h"

#include "satake/core/error.hpp"
#include "satake/polyhedron/coordinates.hpp"
#include "satake/repring/characters.hpp"
#include "satake/repring/littlewood_richardson.hpp"

#include <random>

using namespace satake;

namespace {

std::vector<IVec> box(size_t rank, int64_t hi) {
  std::vector<IVec> out{IVec{}};
  for (size_t i = 0; i < rank; ++i) {
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

// Product of characters as weight multisets, then peeled from the top.
CharElem tensor_by_peeling(const RepRing& rr, const IVec& a, const IVec& b) {
  std::map<IVec, int64_t> prod;
  for (const auto& [x, m] : rr.all_weights(a))
    for (const auto& [y, n] : rr.all_weights(b)) prod[x + y] += m * n;
  const auto& wl = rr.lattice();
  CharElem out;
  while (true) {
    for (auto it = prod.begin(); it != prod.end();) it = it->second == 0 ? prod.erase(it) : std::next(it);
    if (prod.empty()) break;
    IVec top;
    int64_t best = INT64_MIN;
    for (const auto& [x, m] : prod)
      if (wl.is_dominant(x) && wl.two_rho_dual_pairing(x) > best) {
        best = wl.two_rho_dual_pairing(x);
        top = x;
      }
    REQUIRE(!top.empty());
    int64_t c = prod[top];
    REQUIRE(c > 0);
    out[top] = c;
    for (const auto& [x, m] : rr.all_weights(top)) prod[x] -= c * m;
  }
  return out;
}

IVec labels_of_partition(const IVec& p) {
  IVec l;
  for (size_t i = 0; i + 1 < p.size(); ++i) l.push_back(p[i] - p[i + 1]);
  return l;
}

}  // namespace

TEST_SUITE("repring") {

TEST_CASE("Freudenthal dimension equals the Weyl dimension formula") {
  for (const auto& t : {"A2", "A3", "B2", "C3", "G2", "D4", "B3"}) {
    CAPTURE(t);
    RepRing rr(RootSystem::build(t));
    for (const auto& v : box(rr.lattice().rank(), t[0] == 'D' || t[1] == '3' ? 1 : 2)) CHECK(rr.dimension(v) == rr.weyl_dimension(v));
  }
  RepRing e8(RootSystem::build("E8"));
  IVec adj(8, 0);
  adj[7] = 1;
  CHECK(e8.weyl_dimension(adj) == 248);
}

TEST_CASE("A1 tensor products follow Clebsch-Gordan") {
  RepRing rr(RootSystem::build("A1"));
  for (int64_t a = 0; a <= 8; ++a)
    for (int64_t b = 0; b <= 8; ++b) {
      CharElem want;
      for (int64_t c = std::abs(a - b); c <= a + b; c += 2) want[{c}] = 1;
      CHECK(rr.tensor({a}, {b}) == want);
    }
}

TEST_CASE("Klimyk agrees with multiplying weight multisets") {
  for (const auto& t : {"A2", "B2", "C2", "G2"}) {
    CAPTURE(t);
    RepRing rr(RootSystem::build(t));
    auto ws = box(2, 2);
    for (const auto& a : ws)
      for (const auto& b : ws) CHECK(rr.tensor(a, b) == tensor_by_peeling(rr, a, b));
  }
}

TEST_CASE("Littlewood-Richardson agrees with Klimyk in type A") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs = RootSystem::build("A" + std::to_string(n - 1));
    RepRing rr(rs);
    auto ws = box(n - 1, 3);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        CharElem lr;
        for (const auto& [nu, c] : lr_type_a(labels_to_partition(a), labels_to_partition(b))) lr[labels_of_partition(nu)] += c;
        CHECK(lr == rr.tensor(a, b));
      }
  }
}

TEST_CASE("partition and label conversions") {
  CHECK(labels_to_partition({2, 0, 1}) == IVec{3, 1, 1, 0});
  CHECK(partition_to_labels({3, 1, 1, 0}) == IVec{2, 0, 1});
  CHECK(is_partition({3, 3, 0}));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_THROWS_AS(lr_type_a({1, 2}, {1}), DomainError);
  // c^{(2,1)}_{(1),(1,1)} = 1 and c^{(3,2,1)}_{(2,1),(2,1)} = 2
  CHECK(lr_type_a({1}, {1, 1}).at({2, 1}) == 1);
  CHECK(lr_type_a({2, 1, 0}, {2, 1, 0}).at({3, 2, 1}) == 2);
}

TEST_CASE("n0 is symmetric and invariant under duality") {
  std::mt19937 rng(17);
  for (const auto& t : {"A2", "B2", "G2"}) {
    CAPTURE(t);
    RepRing rr(RootSystem::build(t));
    const auto& wl = rr.lattice();
    std::uniform_int_distribution<int64_t> c(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
      IVec a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
      BigInt n = rr.n0(a, b, d);
      CHECK(rr.n0(b, a, d) == n);
      CHECK(rr.n0(a, d, b) == n);
      CHECK(rr.n0(d, b, a) == n);
      CHECK(rr.n0(b, d, a) == n);
      CHECK(rr.n0(d, a, b) == n);
      CHECK(rr.n0(wl.contragredient(a), wl.contragredient(b), wl.contragredient(d)) == n);
      if (n != 0) CHECK(wl.in_root_lattice(a + b + d));
    }
  }
}

TEST_CASE("representation semigroup is closed on listed generators") {
  struct Case {
    std::string type;
    const std::vector<GeneratorFixture>* gens;
  };
  for (const auto& [type, gens] : {Case{"B2", &b2_generator_fixture()}, Case{"G2", &g2_generator_fixture()}}) {
    CAPTURE(type);
    RootSystem rs = RootSystem::build(type);
    RepRing rr(rs.dual());
    std::vector<LabelTriple> q4;
    for (const auto& g : *gens) {
      LabelTriple l;
      for (size_t k = 0; k < 3; ++k) l[k] = labels_from_bracket(rs, g.bracket[k]);
      CHECK((rr.n0(l[0], l[1], l[2]) != 0) == g.q4);
      if (g.q4) q4.push_back(l);
    }
    for (size_t i = 0; i < q4.size(); ++i)
      for (size_t j = i; j < q4.size(); ++j) CHECK(rr.n0(q4[i][0] + q4[j][0], q4[i][1] + q4[j][1], q4[i][2] + q4[j][2]) != 0);
  }
}

TEST_CASE("bad input is rejected") {
  RepRing rr(RootSystem::build("B2"));
  CHECK_THROWS_AS(rr.tensor({-1, 0}, {0, 0}), DomainError);
  CHECK_THROWS_AS(rr.dimension({1}), DomainError);
}

}
