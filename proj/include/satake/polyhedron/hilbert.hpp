#pragma once

#include "satake/polyhedron/cone.hpp"

namespace satake {

struct HilbertOptions {
  // Rows generate the lattice (full rank); empty means Z^dim.
  IMat lattice_basis;
  // Triples: collapse generators that differ by permuting the three blocks.
  bool s3_orbits = false;
  size_t rank = 0;  // block size when s3_orbits is set
};

// Minimal generating set of the semigroup {t in lattice : A t >= 0}.
std::vector<IVec> hilbert_basis(const InequalitySystem& sys, const HilbertOptions& opt = {});

// Lexicographically smallest permutation of the three blocks.
IVec s3_canonical(const IVec& t, size_t rank);

}  // namespace satake
