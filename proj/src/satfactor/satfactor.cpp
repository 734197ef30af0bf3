#include "satake/satfactor/satfactor.hpp"

#include "satake/core/error.hpp"

#include <set>

namespace satake {

BigInt k_R(const RootSystem& rs) {
  BigInt k = 1;
  for (auto m : rs.all_theta_coeffs()) k = lcm(k, BigInt(m));
  return k;
}

namespace {

// Enumerate L / Q by closing {0} under addition of the lattice generators.
std::vector<IVec> coset_representatives(const IMat& q_hnf, const IMat& lattice_rows) {
  size_t n = q_hnf.empty() ? 0 : q_hnf[0].size();
  std::set<IVec> seen{IVec(n, 0)};
  std::vector<IVec> out{IVec(n, 0)};
  for (size_t k = 0; k < out.size(); ++k)
    for (const auto& g : lattice_rows) {
      IVec y = hnf_reduce(q_hnf, out[k] + g);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

IMat project(const IMat& rows, int first, int rank) {
  IMat out;
  for (const auto& r : rows) out.emplace_back(r.begin() + first, r.begin() + first + rank);
  return out;
}

}  // namespace

std::vector<DiagramAutomorphism> fundamental_group_action(const RootSystem& rs, const IMat& lattice_rows) {
  if (!rs.irreducible()) throw DomainError("fundamental group action needs an irreducible system");
  IMat q = coroot_lattice_hnf(rs);
  for (const auto& c : q)
    if (!in_row_lattice(hermite_normal_form(lattice_rows), c))
      throw DomainError("lattice does not contain the coroot lattice");
  AlcoveFrame frame(rs, 0);
  auto verts = frame.vertices();
  std::vector<DiagramAutomorphism> out;
  for (const auto& tau : coset_representatives(q, lattice_rows)) {
    DiagramAutomorphism g;
    g.coset = tau;
    for (const auto& x : verts) {
      RVec y = x + to_rvec(tau);
      RVec z = frame.reduce(y).point;
      int idx = -1;
      for (size_t j = 0; j < verts.size(); ++j)
        if (verts[j] == z) idx = static_cast<int>(j);
      if (idx < 0) throw Error("translated vertex did not land on an alcove vertex");
      g.perm.push_back(idx);
    }
    out.push_back(g);
  }
  return out;
}

BigInt saturation_factor_irreducible(const RootSystem& rs, const IMat& lattice_rows) {
  AlcoveFrame frame(rs, 0);
  auto verts = frame.vertices();
  BigInt k = 1;
  for (const auto& g : fundamental_group_action(rs, lattice_rows)) {
    std::vector<bool> done(verts.size(), false);
    for (size_t s = 0; s < verts.size(); ++s) {
      if (done[s]) continue;
      RVec sum(frame.rank(), Rational(0));
      int t = 0;
      for (size_t i = s; !done[i]; i = g.perm[i]) {
        done[i] = true;
        sum = sum + verts[i];
        ++t;
      }
      RVec b = Rational(1, t) * sum;
      BigInt ko = 1;
      for (const auto& c : b) ko = lcm(ko, denominator(c));
      ko = lcm(ko, denominator(frame.theta_value(b)));
      k = lcm(k, ko);
    }
  }
  return k;
}

BigInt saturation_factor(const RootSystem& rs, const LatticeSpec& L) {
  BigInt k = 1;
  for (const auto& c : rs.components()) {
    RootSystem sub = RootSystem::build(c.label());
    k = lcm(k, saturation_factor_irreducible(sub, project(L.derived_hnf(), c.first, c.rank)));
  }
  return k;
}

BigInt k_w(const RootSystem& rs) { return saturation_factor(rs, LatticeSpec::coweight(rs)); }

BigInt k_for_group(const std::string& preset) {
  GroupPreset g = group_preset(preset);
  return saturation_factor(g.system, g.lattice);
}

}  // namespace satake
