#pragma once

#include "satake/polyhedron/inequalities.hpp"
#include "satake/rootdata/root_system.hpp"

#include <optional>

namespace satake {

// Coweights of R are handled as labels <alpha_i, lam>; "ambient" means the
// standard orthonormal model (for B2 the rectangular coordinates (x, y)).
IVec labels_from_ambient(const RootSystem& rs, const RVec& v);
RVec ambient_from_labels(const RootSystem& rs, const IVec& labels);

// The bracket form [x, y] = x w1 + y w2 with w1 the long and w2 the short
// fundamental coweight. For B2 w1 = (1,1), w2 = (1,0); for G2 w1 is the
// adjoint weight of the dual. Other types use Bourbaki order.
IVec labels_from_bracket(const RootSystem& rs, const IVec& bracket);
IVec bracket_from_labels(const RootSystem& rs, const IVec& labels);

using LabelTriple = std::array<IVec, 3>;

struct GeneratorFixture {
  LabelTriple bracket;
  bool q4;  // listed as a solution of the representation problem
};

// Hilbert-basis generators as listed in bracket form (orbit representatives).
const std::vector<GeneratorFixture>& b2_generator_fixture();
const std::vector<GeneratorFixture>& g2_generator_fixture();

bool sum_in_coroot_lattice(const RootSystem& rs, const LabelTriple& labels);

// Consistency checks pinning the bracket dictionaries; returns a message per failure.
std::vector<std::string> validate_dictionaries();

// Least k <= k_max with k t integral and n0(k t) != 0, t given in (rational) labels.
std::optional<int64_t> oracle_in_D3(const RootSystem& rs, const std::array<RVec, 3>& labels, int64_t k_max);

}  // namespace satake
