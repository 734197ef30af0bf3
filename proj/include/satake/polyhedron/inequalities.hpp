#pragma once

#include "satake/core/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace satake {

// Three side lengths in one coordinate system.
using Triple = std::array<RVec, 3>;

RVec flatten(const Triple& t);
Triple unflatten(const RVec& v, size_t rank);

// coeffs . t >= 0
struct Inequality {
  RVec coeffs;
  std::string tag;
};

struct InequalitySystem {
  size_t dim = 0;
  std::vector<Inequality> rows;

  bool satisfied(const RVec& t) const;
  // Indices of the violated rows.
  std::vector<size_t> violated(const RVec& t) const;
};

// The B2 triangle inequalities on (x1,y1,x2,y2,x3,y3), rectangular coordinates:
// 6 chamber rows, 9 for isotropic lines and 9 for isotropic planes.
InequalitySystem b2_stability_system();

// x_i >= 0 on a space of the given dimension.
InequalitySystem orthant_system(size_t dim);

bool in_b2_chamber(const RVec& v);
bool in_D3_b2(const Triple& t);
// The root-cone form: a_i <= a_j + a_k and tau(a_i) <= tau(a_j) + a_k in the
// order of Delta^* = {x >= 0, x + y >= 0}, tau(x,y) = (y,x).
bool in_D3_b2_root_cone(const Triple& t);
// The naive test a_i <=_Delta a_j + a_k.
bool naive_triangle_b2(const Triple& t);

}  // namespace satake
