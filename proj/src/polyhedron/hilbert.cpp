#include "satake/polyhedron/hilbert.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace satake {

IVec s3_canonical(const IVec& t, size_t rank) {
  if (t.size() != 3 * rank) throw DomainError("triple has the wrong length");
  std::array<IVec, 3> b;
  for (size_t k = 0; k < 3; ++k) b[k].assign(t.begin() + k * rank, t.begin() + (k + 1) * rank);
  std::sort(b.begin(), b.end());
  IVec out;
  for (const auto& v : b) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

// Integer rows with the same sign pattern as the rational ones.
IMat integral_rows(const InequalitySystem& sys) {
  IMat out;
  for (const auto& r : sys.rows) out.push_back(primitive(r.coeffs));
  return out;
}

bool inside(const IMat& a, const IVec& u) {
  for (const auto& r : a) {
    int64_t s = 0;
    for (size_t k = 0; k < u.size(); ++k) s += r[k] * u[k];
    if (s < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<IVec> hilbert_basis(const InequalitySystem& sys, const HilbertOptions& opt) {
  size_t d = sys.dim;
  IMat basis = opt.lattice_basis;
  if (basis.empty()) {
    basis.assign(d, IVec(d, 0));
    for (size_t i = 0; i < d; ++i) basis[i][i] = 1;
  }
  {
    RMat b;
    for (const auto& r : basis) b.push_back(to_rvec(r));
    if (basis.size() != d || rank_of(b) != d) throw DomainError("lattice basis must have full rank");
  }
  // Work in coordinates u with t = sum u_k basis_k.
  InequalitySystem s;
  s.dim = d;
  for (const auto& r : sys.rows) {
    RVec c(d, Rational(0));
    for (size_t k = 0; k < d; ++k) c[k] = dot(r.coeffs, to_rvec(basis[k]));
    s.rows.push_back({c, r.tag});
  }
  ConeGeometry geo = cone_geometry(s);
  IMat a = integral_rows(s);

  // Grading: sum of the rows is positive on the pointed cone.
  IVec g(d, 0);
  for (const auto& r : a) g = g + r;
  auto deg = [&](const IVec& u) {
    int64_t x = 0;
    for (size_t k = 0; k < d; ++k) x += g[k] * u[k];
    return x;
  };
  std::vector<int64_t> ray_deg;
  for (const auto& r : geo.extreme_rays) {
    ray_deg.push_back(deg(r));
    if (ray_deg.back() <= 0) throw DomainError("grading is not positive on the cone");
  }
  // Every generator lies in a half-open parallelepiped of a simplicial subcone.
  std::vector<int64_t> sorted = ray_deg;
  std::sort(sorted.rbegin(), sorted.rend());
  int64_t bound = 0;
  for (size_t k = 0; k < std::min(d, sorted.size()); ++k) bound += sorted[k];

  // Bounding box of {u in cone : deg u <= bound}.
  std::vector<int64_t> lo(d, 0), hi(d, 0);
  for (size_t k = 0; k < geo.extreme_rays.size(); ++k) {
    const auto& r = geo.extreme_rays[k];
    for (size_t j = 0; j < d; ++j) {
      Rational c = Rational(BigInt(r[j]) * bound, BigInt(ray_deg[k]));
      BigInt n = numerator(c), den = denominator(c);
      BigInt f = n >= 0 ? BigInt(n / den) : BigInt(-((-n + den - 1) / den));
      BigInt cval = f * den == n ? f : BigInt(f + 1);
      lo[j] = std::min(lo[j], to_int64(f));
      hi[j] = std::max(hi[j], to_int64(cval));
    }
  }

  std::vector<std::vector<IVec>> by_deg(static_cast<size_t>(bound) + 1);
  IVec u(d, 0);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == d) {
      int64_t e = deg(u);
      if (e > 0 && e <= bound && inside(a, u)) by_deg[static_cast<size_t>(e)].push_back(u);
      return;
    }
    for (int64_t x = lo[j]; x <= hi[j]; ++x) {
      u[j] = x;
      rec(j + 1);
    }
    u[j] = 0;
  };
  rec(0);

  std::vector<IVec> hb;
  for (const auto& layer : by_deg)
    for (const auto& x : layer) {
      bool reducible = false;
      for (const auto& h : hb)
        if (inside(a, x - h)) {
          reducible = true;
          break;
        }
      if (!reducible) hb.push_back(x);
    }

  std::set<IVec> out;
  for (const auto& h : hb) {
    IVec t(d, 0);
    for (size_t k = 0; k < d; ++k) t = t + h[k] * basis[k];
    out.insert(opt.s3_orbits ? s3_canonical(t, opt.rank) : t);
  }
  return {out.begin(), out.end()};
}

}  // namespace satake
