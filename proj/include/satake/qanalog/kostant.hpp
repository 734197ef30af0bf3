#pragma once

#include "satake/core/laurent.hpp"
#include "satake/rootdata/weights.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace satake {

struct IVecHash {
  size_t operator()(const IVec& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

// Unitriangular change of basis between {S(c_lam)} and {phi_lam} on a
// dominance-downward-closed index set: S(c_lam) = sum a_lam(mu) phi_mu and
// phi_lam = sum b_lam(mu) S(c_mu).
struct ChangeOfBasis {
  std::vector<IVec> index;
  std::map<std::pair<IVec, IVec>, LaurentPoly> a, b;  // missing entries are zero
  LaurentPoly a_at(const IVec& lam, const IVec& mu) const;
  LaurentPoly b_at(const IVec& lam, const IVec& mu) const;
};

// q-analogues on the weight lattice of S (the Hecke side takes S = R^vee).
class QAnalog {
 public:
  explicit QAnalog(const RootSystem& s);

  const WeightLattice& lattice() const { return wl_; }

  // sum over ways to write v (coefficients over the simple roots of S) as an
  // N-combination of positive roots, each weighted q^{number of terms}.
  LaurentPoly q_kostant(const IVec& root_coeffs) const;
  // Lusztig's q-analogue K_{lam,mu}(q) = sum_w (-1)^{l(w)} P_q(w(lam+rho) - (mu+rho)).
  LaurentPoly kostka_foulkes(const IVec& lam, const IVec& mu) const;
  // <lam - mu, rho> for mu <= lam (height of lam - mu).
  int64_t height(const IVec& lam, const IVec& mu) const;
  // b_lam(mu) = q^{<lam-mu,rho>} K_{lam,mu}(q^{-1}); zero unless mu <= lam.
  LaurentPoly kl_b(const IVec& lam, const IVec& mu) const;
  // a = b^{-1}; zero unless mu <= lam.
  LaurentPoly kl_a(const IVec& lam, const IVec& mu) const;
  ChangeOfBasis build_change_of_basis(const std::vector<IVec>& index_set) const;

 private:
  using IPoly = std::vector<int64_t>;
  const IPoly& partition(size_t k, const IVec& v) const;

  WeightLattice wl_;
  std::vector<IVec> nonsimple_;  // non-simple positive roots in simple-root coordinates
  struct Memo {
    std::mutex mu;
    std::vector<std::unordered_map<IVec, IPoly, IVecHash>> kostant;
    std::map<std::pair<IVec, IVec>, LaurentPoly> b, a;
  };
  std::shared_ptr<Memo> memo_;
};

}  // namespace satake
