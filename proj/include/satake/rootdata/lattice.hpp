#pragma once

#include "satake/rootdata/root_system.hpp"

#include <string>
#include <vector>

namespace satake {

// A cocharacter lattice L with Q(R^vee) within L within P(R^vee) + center,
// stored as a Z-basis in ambient coordinates.
class LatticeSpec {
 public:
  static LatticeSpec coroot(const RootSystem& rs);
  static LatticeSpec coweight(const RootSystem& rs);
  // Generators are reduced to a basis; throws DomainError unless Q(R^vee)
  // is contained in L and L pairs integrally with every root.
  static LatticeSpec from_generators(const RootSystem& rs, const std::vector<RVec>& gens, std::string name);

  const std::string& name() const { return name_; }
  const std::vector<RVec>& basis() const { return basis_; }
  bool contains(const RVec& v) const;

  // L intersected with the span of the roots, in fundamental-coweight
  // coordinates, as rows of a Hermite normal form.
  const IMat& derived_hnf() const { return derived_hnf_; }
  // |L_derived / Q(R^vee)|
  BigInt index_over_coroots() const;

 private:
  std::string name_;
  std::vector<RVec> basis_;
  IMat derived_hnf_;
  IMat coroot_hnf_;
};

// Coroot lattice in fundamental-coweight coordinates (rows are the simple coroots).
IMat coroot_lattice_hnf(const RootSystem& rs);

struct GroupPreset {
  std::string name;
  RootSystem system;
  LatticeSpec lattice;
};

// Named groups: SL<m>, GL<m>, PSL<m>, Sp<2l>, PSp<2l>, Spin<n>, SO<n>, PSO<2l>,
// G2, F4, E6sc, E6ad, E7sc, E7ad, E8; products joined by 'x' (e.g. SL2xSp4).
// A bare Cartan type label (e.g. "B2") denotes the adjoint group (L = P).
GroupPreset group_preset(const std::string& name);
bool is_preset_name(const std::string& name);
std::vector<std::string> preset_examples();

}  // namespace satake
