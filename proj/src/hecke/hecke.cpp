#include "satake/hecke/hecke.hpp"

#include "satake/core/error.hpp"

namespace satake {

HeckeRing::HeckeRing(const RootSystem& r)
    : r_(r), reps_(r.dual()), qa_(r.dual()), memo_(std::make_shared<Memo>()) {}

void HeckeRing::check(const IVec& v, const char* what) const {
  if (v.size() != r_.rank())
    throw DomainError(std::string(what) + ": expected " + std::to_string(r_.rank()) + " labels, got " + std::to_string(v.size()));
  if (!lattice().is_dominant(v)) throw DomainError(std::string(what) + " is not dominant: (" + join_ints(v) + ")");
}

int64_t HeckeRing::two_rho_pairing(const IVec& lam) const { return lattice().two_rho_dual_pairing(lam); }

SatakeImage HeckeRing::satake_expand(const IVec& lam) const {
  check(lam, "weight");
  SatakeImage out;
  for (const auto& mu : lattice().dominant_below(lam)) {
    LaurentPoly a = qa_.kl_a(lam, mu);
    if (a.is_zero()) continue;
    out[mu] = a.shift_v(static_cast<int>(two_rho_pairing(mu)));
  }
  return out;
}

SatakeImage HeckeRing::satake_image(const HeckeElem& f) const {
  SatakeImage out;
  for (const auto& [lam, c] : f)
    for (const auto& [mu, s] : satake_expand(lam)) out[mu] += c * s;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

HeckeElem HeckeRing::from_satake(const SatakeImage& s) const {
  HeckeElem out;
  for (const auto& [gam, coef] : s) {
    check(gam, "character");
    LaurentPoly scaled = coef.shift_v(-static_cast<int>(two_rho_pairing(gam)));
    for (const auto& d : lattice().dominant_below(gam)) {
      LaurentPoly b = qa_.kl_b(gam, d);
      if (!b.is_zero()) out[d] += scaled * b;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

const HeckeElem& HeckeRing::basis_product(const IVec& a, const IVec& b) const {
  check(a, "first weight");
  check(b, "second weight");
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->products.find(key);
    if (it != memo_->products.end()) return *it->second;
  }
  // phi-basis coefficients of S(c_a) S(c_b).
  std::map<IVec, LaurentPoly> phi;
  auto below_a = lattice().dominant_below(a);
  auto below_b = lattice().dominant_below(b);
  for (const auto& mu : below_a) {
    LaurentPoly am = qa_.kl_a(a, mu);
    if (am.is_zero()) continue;
    for (const auto& nu : below_b) {
      LaurentPoly an = qa_.kl_a(b, nu);
      if (an.is_zero()) continue;
      LaurentPoly amn = am * an;
      int64_t top = two_rho_pairing(mu) + two_rho_pairing(nu);
      for (const auto& [gam, n] : reps_.tensor(mu, nu)) {
        int64_t e = top - two_rho_pairing(gam);  // 2<mu + nu - gam, rho>
        phi[gam] += amn.shift_v(static_cast<int>(e)) * LaurentPoly(n);
      }
    }
  }
  auto out = std::make_shared<HeckeElem>();
  for (const auto& [gam, p] : phi) {
    if (p.is_zero()) continue;
    for (const auto& d : lattice().dominant_below(gam)) {
      LaurentPoly bd = qa_.kl_b(gam, d);
      if (!bd.is_zero()) (*out)[d] += p * bd;
    }
  }
  for (auto it = out->begin(); it != out->end();) {
    if (it->second.is_zero()) {
      it = out->erase(it);
      continue;
    }
    if (!it->second.is_polynomial_in_q())
      throw Error("structure constant is not a polynomial in q: " + it->second.to_string());
    ++it;
  }
  std::lock_guard<std::mutex> g(memo_->mu);
  auto [it, inserted] = memo_->products.emplace(key, out);
  return *it->second;
}

HeckeElem HeckeRing::multiply(const HeckeElem& f, const HeckeElem& g) const {
  HeckeElem out;
  for (const auto& [a, fa] : f)
    for (const auto& [b, gb] : g) {
      LaurentPoly c = fa * gb;
      if (c.is_zero()) continue;
      for (const auto& [d, m] : basis_product(a, b)) out[d] += c * m;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly HeckeRing::structure_constant(const IVec& a, const IVec& b, const IVec& d) const {
  check(d, "target weight");
  const auto& p = basis_product(a, b);
  auto it = p.find(d);
  return it == p.end() ? LaurentPoly() : it->second;
}

LaurentPoly HeckeRing::sphere_volume(const IVec& gam) const {
  check(gam, "radius");
  int64_t top = two_rho_pairing(gam);
  LaurentPoly v;
  for (const auto& [x, depth] : lattice().orbit(gam)) v += LaurentPoly::monomial_q(static_cast<int>(top - depth));
  return v;
}

LaurentPoly HeckeRing::m0(const IVec& a, const IVec& b, const IVec& c) const {
  check(c, "third weight");
  LaurentPoly m = structure_constant(a, b, lattice().contragredient(c));
  if (m.is_zero()) return m;
  return sphere_volume(c) * m;
}

LaurentPoly HeckeRing::m0_triple_product(const IVec& a, const IVec& b, const IVec& c) const {
  check(c, "third weight");
  IVec zero(r_.rank(), 0);
  LaurentPoly out;
  for (const auto& [d, m] : basis_product(a, b)) {
    const auto& p = basis_product(d, c);
    auto it = p.find(zero);
    if (it != p.end()) out += m * it->second;
  }
  return out;
}

}  // namespace satake
