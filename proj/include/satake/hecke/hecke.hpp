#pragma once

#include "satake/qanalog/kostant.hpp"
#include "satake/repring/characters.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace satake {

// Element of the spherical Hecke ring in the basis c_lam (keys: Dynkin labels
// <alpha_i, lam> of dominant coweights of R).
using HeckeElem = std::map<IVec, LaurentPoly>;
// Element of R(G^vee) (x) Z[q^{1/2}, q^{-1/2}] in the ch basis.
using SatakeImage = std::map<IVec, LaurentPoly>;

// Spherical Hecke ring of a split group with root system R. The character
// side is the representation ring of the dual system R^vee.
class HeckeRing {
 public:
  explicit HeckeRing(const RootSystem& r);

  const RootSystem& system() const { return r_; }
  const RepRing& reps() const { return reps_; }
  const QAnalog& qanalog() const { return qa_; }
  const WeightLattice& lattice() const { return qa_.lattice(); }

  // 2<lam, rho> (an integer; <lam, rho> itself may be half-integral).
  int64_t two_rho_pairing(const IVec& lam) const;

  SatakeImage satake_expand(const IVec& lam) const;
  SatakeImage satake_image(const HeckeElem& f) const;
  // Inverse direction: ch-basis element back to the c basis.
  HeckeElem from_satake(const SatakeImage& s) const;

  // c_a * c_b as a HeckeElem: coefficients m_{a,b}(d).
  const HeckeElem& basis_product(const IVec& a, const IVec& b) const;
  HeckeElem multiply(const HeckeElem& f, const HeckeElem& g) const;
  LaurentPoly structure_constant(const IVec& a, const IVec& b, const IVec& d) const;

  LaurentPoly sphere_volume(const IVec& gam) const;
  // m_{a,b,c}(0) = vol(c) m_{a,b}(c^*).
  LaurentPoly m0(const IVec& a, const IVec& b, const IVec& c) const;
  // The same number as the c_0 coefficient of c_a c_b c_c.
  LaurentPoly m0_triple_product(const IVec& a, const IVec& b, const IVec& c) const;
  bool q3_solvable(const IVec& a, const IVec& b, const IVec& c) const { return !m0(a, b, c).is_zero(); }

 private:
  void check(const IVec& v, const char* what) const;

  RootSystem r_;
  RepRing reps_;
  QAnalog qa_;
  struct Memo {
    std::mutex mu;
    std::map<std::pair<IVec, IVec>, std::shared_ptr<const HeckeElem>> products;
  };
  std::shared_ptr<Memo> memo_;
};

}  // namespace satake
