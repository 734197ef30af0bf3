#pragma once

#include "satake/rootdata/weights.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace satake {

// Finitely supported map from dominant weights (Dynkin labels) to integers.
using CharElem = std::map<IVec, BigInt>;

// Representation ring of the group whose weights are those of S.
// For the Langlands dual of G with root system R one takes S = R^vee, so
// dominant coweights of R index the irreducibles.
class RepRing {
 public:
  explicit RepRing(const RootSystem& s);

  const WeightLattice& lattice() const { return wl_; }

  // Multiplicities of the dominant weights of V_lam (Freudenthal).
  const std::map<IVec, int64_t>& dominant_character(const IVec& lam) const;
  int64_t weight_multiplicity(const IVec& lam, const IVec& mu) const;
  // Every weight of V_lam with its multiplicity.
  std::vector<std::pair<IVec, int64_t>> all_weights(const IVec& lam) const;
  BigInt dimension(const IVec& lam) const;            // from the character
  BigInt weyl_dimension(const IVec& lam) const;       // Weyl dimension formula

  // V_lam (x) V_mu = sum c_nu V_nu (Klimyk / Brauer).
  const CharElem& tensor(const IVec& lam, const IVec& mu) const;
  CharElem multiply(const CharElem& a, const CharElem& b) const;
  // dim (V_a (x) V_b (x) V_c)^G = coefficient of c^* in V_a (x) V_b.
  BigInt n0(const IVec& a, const IVec& b, const IVec& c) const;

 private:
  WeightLattice wl_;
  struct Memo {
    std::mutex mu;
    std::map<IVec, std::shared_ptr<const std::map<IVec, int64_t>>> chars;
    std::map<std::pair<IVec, IVec>, std::shared_ptr<const CharElem>> tensors;
  };
  std::shared_ptr<Memo> memo_;
};

}  // namespace satake
