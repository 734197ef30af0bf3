#include "satake/polyhedron/cone.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <set>

namespace satake {

IVec primitive(const RVec& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  std::vector<BigInt> n;
  BigInt g = 0;
  for (const auto& x : v) {
    n.push_back(numerator(x * Rational(den)));
    g = boost::multiprecision::gcd(g, n.back());
  }
  IVec out;
  for (auto& x : n) out.push_back(to_int64(g == 0 ? x : BigInt(x / g)));
  return out;
}

namespace {

struct Ray {
  RVec v;
  std::vector<bool> zero;  // zero[i]: row i (among those processed) is tight
};

RVec scale_down(const RVec& v) {
  IVec p = primitive(v);
  return to_rvec(p);
}

}  // namespace

ConeGeometry cone_geometry(const InequalitySystem& sys) {
  size_t d = sys.dim, m = sys.rows.size();
  RMat a;
  for (const auto& r : sys.rows) a.push_back(r.coeffs);
  if (rank_of(a) != d) throw DomainError("cone is not pointed (inequality matrix has rank < dimension)");

  // Seed with d independent rows: their cone is simplicial.
  std::vector<size_t> seed;
  RMat chosen;
  for (size_t i = 0; i < m && seed.size() < d; ++i) {
    chosen.push_back(a[i]);
    if (rank_of(chosen) == chosen.size())
      seed.push_back(i);
    else
      chosen.pop_back();
  }
  RMat inv = inverse(chosen);  // columns are the rays
  std::vector<bool> done(m, false);
  for (auto i : seed) done[i] = true;
  std::vector<Ray> rays;
  for (size_t c = 0; c < d; ++c) {
    RVec v(d);
    for (size_t r = 0; r < d; ++r) v[r] = inv[r][c];
    Ray ray{scale_down(v), std::vector<bool>(m, false)};
    for (auto i : seed) ray.zero[i] = dot(a[i], ray.v) == 0;
    rays.push_back(ray);
  }

  for (size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Ray> pos, neg, next;
    for (auto& r : rays) {
      Rational s = dot(a[i], r.v);
      r.zero[i] = s == 0;
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (auto& r : pos) next.push_back(r);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // Combinatorial adjacency test.
        std::vector<bool> common(m, false);
        size_t cnt = 0;
        for (size_t k = 0; k < m; ++k)
          if (done[k] && k != i && p.zero[k] && n.zero[k]) {
            common[k] = true;
            ++cnt;
          }
        if (cnt + 2 < d) continue;
        bool adjacent = true;
        for (const auto& r : rays) {
          if (&r == &p || &r == &n) continue;
          if (r.v == p.v || r.v == n.v) continue;
          bool contains = true;
          for (size_t k = 0; k < m && contains; ++k)
            if (common[k] && !r.zero[k]) contains = false;
          if (contains) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Rational sp = dot(a[i], p.v), sn = dot(a[i], n.v);
        RVec v = sp * n.v - sn * p.v;
        Ray nr{scale_down(v), std::vector<bool>(m, false)};
        for (size_t k = 0; k < m; ++k)
          if (done[k]) nr.zero[k] = dot(a[k], nr.v) == 0;
        next.push_back(nr);
      }
    rays = std::move(next);
  }

  ConeGeometry g;
  std::set<IVec> uniq;
  for (const auto& r : rays) uniq.insert(primitive(r.v));
  g.extreme_rays.assign(uniq.begin(), uniq.end());

  std::set<std::vector<bool>> facets;
  for (size_t i = 0; i < m; ++i) {
    RMat tight;
    std::vector<bool> key(g.extreme_rays.size(), false);
    for (size_t k = 0; k < g.extreme_rays.size(); ++k) {
      RVec v = to_rvec(g.extreme_rays[k]);
      if (dot(a[i], v) == 0) {
        tight.push_back(v);
        key[k] = true;
      }
    }
    if (rank_of(tight) + 1 != d) continue;
    if (facets.insert(key).second) g.facet_rows.push_back(i);
  }
  g.facet_count = facets.size();
  g.minimal = g.facet_count == m;
  return g;
}

}  // namespace satake
