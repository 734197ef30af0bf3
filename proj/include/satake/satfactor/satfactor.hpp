#pragma once

#include "satake/rootdata/alcove.hpp"
#include "satake/rootdata/lattice.hpp"

#include <vector>

namespace satake {

struct DiagramAutomorphism {
  IVec coset;              // representative of the class in L / Q(R^vee), coweight coordinates
  std::vector<int> perm;   // perm[i] = image of alcove vertex x_i (0..n)
};

// k_R = LCM of the highest-root coefficients (over all factors).
BigInt k_R(const RootSystem& rs);

// One automorphism per class of L/Q(R^vee) for an irreducible system; the
// lattice is given in fundamental-coweight coordinates (rows spanning L).
std::vector<DiagramAutomorphism> fundamental_group_action(const RootSystem& rs, const IMat& lattice_rows);

// k(W_aff, L) for an irreducible factor.
BigInt saturation_factor_irreducible(const RootSystem& rs, const IMat& lattice_rows);

// k(W_aff, L): LCM over irreducible factors of the projected derived lattice.
BigInt saturation_factor(const RootSystem& rs, const LatticeSpec& L);

BigInt k_w(const RootSystem& rs);

// k(W_aff, L) for a named group (derived-group reduction applied).
BigInt k_for_group(const std::string& preset);

}  // namespace satake
