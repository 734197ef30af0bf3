#pragma once

#include "satake/rootdata/root_system.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace satake {

// Integral weights of a root system S written in Dynkin labels
// lambda_i = <lambda, alpha_i^vee>. The Hecke side uses S = R^vee, so these
// labels are <alpha_i, lambda> for a coweight lambda of R.
class WeightLattice {
 public:
  explicit WeightLattice(const RootSystem& s);

  const RootSystem& system() const { return sys_; }
  size_t rank() const { return n_; }
  const IMat& cartan() const { return c_; }
  const IVec& simple_root_labels(size_t j) const { return c_[j]; }
  const IMat& positive_root_coeffs() const { return sys_.positive_root_coeffs(); }
  const IMat& positive_root_labels() const { return pos_labels_; }

  IVec reflect(size_t i, IVec v) const;
  bool is_dominant(const IVec& v) const;
  // Dominant representative and the length of the element used.
  std::pair<IVec, int> to_dominant(IVec v) const;
  // Orbit of a dominant weight with the length of the minimal coset representative.
  std::vector<std::pair<IVec, int>> orbit(const IVec& dominant) const;
  IVec contragredient(const IVec& lam) const;

  std::optional<IVec> root_coeffs(const IVec& v) const;  // integral coefficients over simple roots
  bool in_root_lattice(const IVec& v) const { return root_coeffs(v).has_value(); }
  bool leq(const IVec& mu, const IVec& lam) const;  // lam - mu in N . simple roots
  // All dominant weights mu <= lam (lam first, then by increasing depth below lam).
  std::vector<IVec> dominant_below(const IVec& lam) const;

  // W-invariant form on labels, scaled to integers: (x, y) = form(x, y) / form_scale().
  int64_t form(const IVec& x, const IVec& y) const;
  int64_t form_scale() const { return form_den_; }

  // <lambda, 2 rho_{S^vee}> = sum of labels weighted by 2 rho of the dual over simple coroots.
  int64_t two_rho_dual_pairing(const IVec& v) const;
  const IVec& two_rho_dual_coeffs() const { return two_rho_dual_; }

  struct Element {
    IMat mat;  // action on labels
    int length;
  };
  const std::vector<Element>& elements() const;
  IVec apply(const Element& w, const IVec& v) const;

 private:
  RootSystem sys_;
  size_t n_;
  IMat c_;
  IMat pos_labels_;
  RMat coeff_from_labels_;
  IMat form_num_;
  int64_t form_den_ = 1;
  IVec two_rho_dual_;
  struct Lazy {
    std::once_flag once;
    std::vector<Element> elements;
  };
  std::shared_ptr<Lazy> lazy_;
};

}  // namespace satake
