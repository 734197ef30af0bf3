#pragma once

#include "satake/rootdata/root_system.hpp"

#include <vector>

namespace satake {

// Affine Weyl arithmetic for one irreducible factor, in fundamental-coweight
// coordinates x_i = alpha_i(x).
class AlcoveFrame {
 public:
  AlcoveFrame(const RootSystem& rs, size_t component);

  size_t rank() const { return n_; }
  const IVec& labels() const { return m_; }  // theta = sum m_i alpha_i
  Rational theta_value(const RVec& x) const;
  bool in_alcove(const RVec& x) const;
  RVec reflect(int j, const RVec& x) const;  // j = 0 is the affine reflection in H_{theta,1}

  struct Reduced {
    RVec point;
    std::vector<int> word;  // reflections applied in order
  };
  Reduced reduce(RVec x) const;

  // Vertices x_0 = 0 and x_i = w_i / m_i.
  std::vector<RVec> vertices() const;

 private:
  size_t n_;
  IMat coroot_labels_;  // row j: labels of alpha_j^vee
  RVec theta_check_labels_;
  IVec m_;
};

struct AlcoveReduction {
  RVec point;             // ambient coordinates
  std::vector<int> word;  // 0 = affine reflection, j >= 1 = simple reflection s_j (1-based)
};

// Reduces an ambient coweight into the fundamental alcove of an irreducible system.
AlcoveReduction alcove_reduce(const RootSystem& rs, const RVec& p);

}  // namespace satake
