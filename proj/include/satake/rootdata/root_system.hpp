#pragma once

#include "satake/core/numeric.hpp"

#include <string>
#include <vector>

namespace satake {

struct SimpleType {
  char family = 'A';  // A..G
  int rank = 1;
  int first = 0;           // index of the first simple root of this factor
  int ambient_offset = 0;  // first ambient coordinate used by this factor
  int ambient_dim = 0;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
};

// Upper bound on |W| for operations that enumerate the whole group.
// Reads WEYL_ENUM_CAP from the environment, default 10^6.
BigInt weyl_enumeration_cap();

class RootSystem;

struct WeylElement {
  std::vector<int> word;  // reduced word s_{word[0]} s_{word[1]} ... acting right to left

  int length() const { return static_cast<int>(word.size()); }
  RVec apply(const RootSystem& rs, RVec x) const;
  RMat matrix(const RootSystem& rs) const;  // ambient coordinates, columns are images of e_k
};

class RootSystem {
 public:
  static RootSystem build(const std::string& type_label);

  const std::string& label() const { return label_; }
  size_t rank() const { return simple_roots_.size(); }
  size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<SimpleType>& components() const { return components_; }
  bool irreducible() const { return components_.size() == 1; }

  const std::vector<RVec>& simple_roots() const { return simple_roots_; }
  const std::vector<RVec>& simple_coroots() const { return simple_coroots_; }
  // cartan()[i][j] = <alpha_i, alpha_j^vee>
  const IMat& cartan() const { return cartan_; }

  // Positive roots as coefficient vectors over the simple roots (and the
  // positive coroots over the simple coroots), sorted by height.
  const IMat& positive_root_coeffs() const { return pos_root_coeffs_; }
  const IMat& positive_coroot_coeffs() const { return pos_coroot_coeffs_; }
  std::vector<RVec> positive_roots() const;
  std::vector<RVec> positive_coroots() const;

  const RVec& rho() const { return rho_; }
  const RVec& rho_check() const { return rho_check_; }
  // Sum of positive roots expressed over the simple roots (integer vector 2 rho).
  const IVec& two_rho_coeffs() const { return two_rho_coeffs_; }

  // Highest root of a component, as coefficients m_i over that component's simple roots.
  IVec theta_coeffs(size_t component = 0) const;
  RVec theta(size_t component = 0) const;
  RVec theta_coroot(size_t component = 0) const;
  // Coefficients m_i laid out over all simple roots (each entry belongs to its factor).
  IVec all_theta_coeffs() const;

  BigInt weyl_order() const;
  WeylElement longest_element() const;
  std::vector<int> degrees() const;

  RootSystem dual() const;

  // Fundamental coweights: <alpha_i, w_j> = delta_ij, lying in the span of the coroots.
  const std::vector<RVec>& fundamental_coweights() const { return fund_coweights_; }
  const std::vector<RVec>& fundamental_weights() const { return fund_weights_; }

  // <alpha_i, lam> for every simple root.
  RVec coweight_labels(const RVec& lam) const;
  RVec weight_labels(const RVec& chi) const;  // <chi, alpha_i^vee>
  RVec coweight_from_labels(const RVec& labels) const;
  RVec weight_from_labels(const RVec& labels) const;
  // Component of v orthogonal to the span of the roots.
  RVec central_part(const RVec& v) const;
  // Coefficients of a coweight over the simple coroots (must lie in their span).
  RVec coroot_coefficients(const RVec& lam) const;
  RVec root_coefficients(const RVec& chi) const;

  Rational pairing(const RVec& chi, const RVec& lam) const;

  // Simple reflection s_i acting on the ambient space (same formula for both sides).
  RVec reflect(int i, const RVec& x) const;
  bool is_dominant_coweight(const RVec& lam) const;
  bool is_dominant_weight(const RVec& chi) const;

  // side: true = coweights (coroots), false = weights (roots).
  bool dominance_leq(const RVec& mu, const RVec& lam, bool coweight_side) const;
  std::pair<RVec, WeylElement> to_dominant(const RVec& v) const;
  std::vector<RVec> weyl_orbit(const RVec& v) const;
  RVec contragredient(const RVec& lam) const;

  // Enumerates W when |W| <= cap, else throws CapExceeded.
  std::vector<WeylElement> weyl_elements() const;

 private:
  void finish();

  std::string label_;
  size_t ambient_dim_ = 0;
  std::vector<SimpleType> components_;
  std::vector<RVec> simple_roots_, simple_coroots_;
  IMat cartan_;
  IMat pos_root_coeffs_, pos_coroot_coeffs_;
  RVec rho_, rho_check_;
  IVec two_rho_coeffs_;
  std::vector<RVec> fund_coweights_, fund_weights_;
  std::vector<RVec> center_basis_;  // orthogonal complement of the root span
  RMat gram_inv_roots_;
  RMat gram_inv_coroots_;
};

// Positive roots (coefficient vectors over simple roots) for a Cartan matrix with
// cartan[i][j] = <alpha_i, alpha_j^vee>, via reflection closure; sorted by height.
IMat positive_roots_from_cartan(const IMat& cartan);

}  // namespace satake
