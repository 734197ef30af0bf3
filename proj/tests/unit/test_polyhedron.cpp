#include "doctest.h"

#include "satake/polyhedron/cone.hpp"
#include "satake/polyhedron/coordinates.hpp"
#include "satake/polyhedron/hilbert.hpp"
#include "satake/polyhedron/inequalities.hpp"
#include "satake/polyhedron/semistable.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace satake;

namespace {

// Extreme rays by brute force: every (d-1)-subset of rows of full rank
// cuts out a line; keep the feasible directions.
std::set<IVec> rays_by_subsets(const InequalitySystem& sys) {
  size_t d = sys.dim, n = sys.rows.size();
  std::set<IVec> out;
  std::vector<bool> choose(n, false);
  std::fill(choose.end() - static_cast<long>(d - 1), choose.end(), true);
  do {
    std::vector<RVec> rows;
    for (size_t i = 0; i < n; ++i)
      if (choose[i]) rows.push_back(sys.rows[i].coeffs);
    if (rank_of(rows) != d - 1) continue;
    RVec r = orthogonal_complement(rows, d).at(0);
    for (int s : {1, -1}) {
      RVec v = Rational(s) * r;
      if (sys.satisfied(v)) out.insert(primitive(v));
    }
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

RVec rect(int64_t x, int64_t y) { return {Rational(x), Rational(y)}; }

std::vector<IVec> s3_images(const IVec& t) {
  std::vector<IVec> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    IVec v;
    for (int k : p) v.insert(v.end(), t.begin() + 2 * k, t.begin() + 2 * k + 2);
    out.push_back(v);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<IVec> b2_generators_flat() {
  RootSystem b2 = RootSystem::build("B2");
  std::vector<IVec> out;
  for (const auto& g : b2_generator_fixture()) {
    IVec flat;
    for (size_t k = 0; k < 3; ++k)
      for (const auto& x : ambient_from_labels(b2, labels_from_bracket(b2, g.bracket[k]))) flat.push_back(to_int64(x));
    for (const auto& v : s3_images(flat)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RVec to_r(const IVec& v) { return to_rvec(v); }

}  // namespace

TEST_SUITE("polyhedron") {

TEST_CASE("B2 system shape") {
  auto sys = b2_stability_system();
  CHECK(sys.dim == 6);
  CHECK(sys.rows.size() == 24);
  std::set<std::string> tags;
  for (const auto& r : sys.rows) tags.insert(r.tag);
  CHECK(tags.size() == 24);
}

TEST_CASE("double description agrees with brute-force rays") {
  auto sys = b2_stability_system();
  auto g = cone_geometry(sys);
  std::set<IVec> dd(g.extreme_rays.begin(), g.extreme_rays.end());
  CHECK(dd.size() == g.extreme_rays.size());
  CHECK(dd == rays_by_subsets(sys));
  for (const auto& r : g.extreme_rays) CHECK(sys.satisfied(to_r(r)));
}

TEST_CASE("facets of small cones") {
  // Orthant in R^4: 4 rays, 4 facets.
  auto g = cone_geometry(orthant_system(4));
  CHECK(g.extreme_rays.size() == 4);
  CHECK(g.facet_count == 4);
  CHECK(g.minimal);
  // A redundant row (x + y >= 0) is not a facet.
  InequalitySystem s = orthant_system(2);
  s.rows.push_back({{Rational(1), Rational(1)}, "sum"});
  auto h = cone_geometry(s);
  CHECK(h.facet_count == 2);
  CHECK_FALSE(h.minimal);
}

TEST_CASE("Hilbert basis of a planar cone") {
  // cone spanned by (1,0) and (1,3)
  InequalitySystem s;
  s.dim = 2;
  s.rows.push_back({{Rational(0), Rational(1)}, "y >= 0"});
  s.rows.push_back({{Rational(3), Rational(-1)}, "3x >= y"});
  auto hb = hilbert_basis(s);
  std::set<IVec> got(hb.begin(), hb.end());
  CHECK(got == std::set<IVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  // Over 2Z x Z every generator has an even first coordinate.
  HilbertOptions o;
  o.lattice_basis = {{2, 0}, {0, 1}};
  auto hb2 = hilbert_basis(s, o);
  for (const auto& v : hb2) CHECK(v[0] % 2 == 0);
  CHECK(std::find(hb2.begin(), hb2.end(), IVec{2, 6}) != hb2.end());
}

TEST_CASE("B2 Hilbert basis is irreducible and generates small points") {
  auto sys = b2_stability_system();
  auto gens = b2_generators_flat();
  HilbertOptions o;
  o.s3_orbits = true;
  o.rank = 2;
  auto hb = hilbert_basis(sys, o);
  std::set<IVec> canon;
  for (const auto& g : gens) canon.insert(s3_canonical(g, 2));
  CHECK(std::set<IVec>(hb.begin(), hb.end()) == canon);

  for (const auto& h : gens) {
    CHECK(sys.satisfied(to_r(h)));
    for (const auto& g : gens) {
      if (g == h) continue;
      CHECK_FALSE(sys.satisfied(to_r(h - g)));
    }
  }
  // Every lattice point of the cone with coordinates <= 3 is a sum of generators.
  std::vector<IVec> pts;
  std::vector<IVec> chamber;
  for (int64_t x = 0; x <= 3; ++x)
    for (int64_t y = 0; y <= x; ++y) chamber.push_back({x, y});
  for (const auto& a : chamber)
    for (const auto& b : chamber)
      for (const auto& c : chamber) {
        IVec t{a[0], a[1], b[0], b[1], c[0], c[1]};
        if (sys.satisfied(to_r(t))) pts.push_back(t);
      }
  std::sort(pts.begin(), pts.end(), [](const IVec& u, const IVec& v) {
    int64_t su = 0, sv = 0;
    for (auto x : u) su += x;
    for (auto x : v) sv += x;
    return su < sv;
  });
  std::set<IVec> ok{IVec(6, 0)};
  for (const auto& t : pts) {
    bool rep = ok.count(t) > 0;
    for (const auto& g : gens)
      if (!rep && ok.count(t - g)) rep = true;
    CAPTURE(join_ints(t));
    CHECK(rep);
    if (rep) ok.insert(t);
  }
}

TEST_CASE("membership is scale invariant and S3 symmetric") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int64_t> num(0, 8);
  for (int trial = 0; trial < 2000; ++trial) {
    Triple t;
    for (auto& a : t) {
      int64_t x = num(rng), y = num(rng);
      if (y > x) std::swap(x, y);
      a = rect(x, y);
    }
    bool in = in_D3_b2(t);
    for (Rational k : {Rational(2), Rational(1, 3), Rational(5, 2)}) {
      Triple s = t;
      for (auto& a : s) a = k * a;
      CHECK(in_D3_b2(s) == in);
    }
    CHECK(in_D3_b2({t[1], t[0], t[2]}) == in);
    CHECK(in_D3_b2({t[2], t[1], t[0]}) == in);
    CHECK(in_D3_b2({t[1], t[2], t[0]}) == in);
    CHECK(in_D3_b2_root_cone(t) == in_D3_b2_root_cone({t[1], t[2], t[0]}));
  }
}

TEST_CASE("root-cone form agrees with the 24 inequalities") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int64_t> num(0, 12), den(1, 4);
  int mismatches = 0;
  std::string first;
  for (int trial = 0; trial < 10000; ++trial) {
    Triple t;
    for (auto& a : t) {
      Rational x(num(rng), den(rng)), y(num(rng), den(rng));
      if (y > x) std::swap(x, y);
      a = {x, y};
    }
    if (in_D3_b2(t) != in_D3_b2_root_cone(t)) {
      if (!mismatches) first = to_string(t[0][0]) + "," + to_string(t[0][1]) + " | " + to_string(t[1][0]) + "," + to_string(t[1][1]) + " | " + to_string(t[2][0]) + "," + to_string(t[2][1]);
      ++mismatches;
    }
  }
  CAPTURE(first);
  CHECK(mismatches == 0);
}

TEST_CASE("the naive triangle test is not sufficient") {
  Triple t{RVec{Rational(7, 2), Rational(3)}, rect(2, 2), rect(2, 2)};
  CHECK(in_D3_b2(t));
  CHECK_FALSE(naive_triangle_b2(t));
}

TEST_CASE("representation oracle implies membership") {
  RootSystem b2 = RootSystem::build("B2");
  std::vector<RVec> chamber;
  for (int64_t x = 0; x <= 2; ++x)
    for (int64_t y = 0; y <= x; ++y) chamber.push_back(rect(x, y));
  for (const auto& a : chamber)
    for (const auto& b : chamber)
      for (const auto& c : chamber) {
        std::array<RVec, 3> lab;
        Triple t{a, b, c};
        for (size_t k = 0; k < 3; ++k) lab[k] = to_rvec(labels_from_ambient(b2, t[k]));
        auto k = oracle_in_D3(b2, lab, 3);
        if (k) CHECK(in_D3_b2(t));
      }
}

TEST_CASE("bracket dictionaries") {
  CHECK(validate_dictionaries().empty());
  RootSystem b2 = RootSystem::build("B2");
  CHECK(ambient_from_labels(b2, labels_from_bracket(b2, {1, 0})) == rect(1, 1));
  CHECK(ambient_from_labels(b2, labels_from_bracket(b2, {0, 1})) == rect(1, 0));
  RootSystem g2 = RootSystem::build("G2");
  for (int64_t x = 0; x <= 3; ++x)
    for (int64_t y = 0; y <= 3; ++y) {
      CHECK(bracket_from_labels(g2, labels_from_bracket(g2, {x, y})) == IVec{x, y});
      CHECK(bracket_from_labels(b2, labels_from_bracket(b2, {x, y})) == IVec{x, y});
    }
  CHECK(b2_generator_fixture().size() == 8);
  CHECK(g2_generator_fixture().size() == 11);
}

TEST_CASE("flat configurations") {
  FlatConfiguration balanced{{{Rational(5), {3, 4}}, {Rational(3), {-1, 0}}, {Rational(4), {0, -7}}}};
  CHECK(flat_semistable(balanced));
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    RVec eta{Rational(c(rng)), Rational(c(rng))};
    if (is_zero(eta)) continue;
    CHECK(slope(balanced, eta).is_zero());
  }
  FlatConfiguration one{{{Rational(1), {1, 1}}, {Rational(1), {-1, 0}}}};
  CHECK_FALSE(flat_semistable(one));
  auto r = resultant(one);
  CHECK(r[0].to_string() != "0");
  // slope at eta = -(1 * cos 45 deg + 1 * cos 180 deg) = 1 - sqrt(2)/2
  SurdSum s = slope(one, {1, 0});
  SurdSum want = SurdSum(Rational(1)) + SurdSum::sqrt_times(Rational(-1, 2), Rational(2));
  CHECK(s == want);
}

TEST_CASE("rank 0 configurations") {
  Rank0Configuration three{{{0, 1}, {1, 1}, {2, 1}}};
  CHECK(rank0_stable(three));
  CHECK(rank0_semistable(three));
  Rank0Configuration half{{{0, 2}, {1, 1}, {2, 1}}};
  CHECK_FALSE(rank0_stable(half));
  CHECK(rank0_semistable(half));
  CHECK_FALSE(rank0_nice_semistable(half));
  Rank0Configuration pair{{{0, 1}, {1, 1}}};
  CHECK(rank0_nice_semistable(pair));
  CHECK_FALSE(rank0_stable(pair));
  Rank0Configuration heavy{{{0, 3}, {1, 1}}};
  CHECK_FALSE(rank0_semistable(heavy));
}

}
