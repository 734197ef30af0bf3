#include "satake/polyhedron/coordinates.hpp"

#include "satake/core/error.hpp"
#include "satake/repring/characters.hpp"
#include "satake/rootdata/weights.hpp"

namespace satake {

IVec labels_from_ambient(const RootSystem& rs, const RVec& v) {
  if (v.size() != rs.ambient_dim())
    throw DomainError("expected " + std::to_string(rs.ambient_dim()) + " ambient coordinates, got " + std::to_string(v.size()));
  IVec out;
  for (const auto& l : rs.coweight_labels(v)) {
    if (!is_integer(l)) throw DomainError("vector does not pair integrally with the roots");
    out.push_back(to_int64(l));
  }
  return out;
}

RVec ambient_from_labels(const RootSystem& rs, const IVec& labels) {
  if (labels.size() != rs.rank()) throw DomainError("expected " + std::to_string(rs.rank()) + " labels");
  return rs.coweight_from_labels(to_rvec(labels));
}

IVec labels_from_bracket(const RootSystem& rs, const IVec& b) {
  if (b.size() != rs.rank()) throw DomainError("expected " + std::to_string(rs.rank()) + " bracket coordinates");
  if (rs.label() == "B2") return {b[1], b[0]};
  return b;
}

IVec bracket_from_labels(const RootSystem& rs, const IVec& l) {
  if (l.size() != rs.rank()) throw DomainError("expected " + std::to_string(rs.rank()) + " labels");
  if (rs.label() == "B2") return {l[1], l[0]};
  return l;
}

const std::vector<GeneratorFixture>& b2_generator_fixture() {
  static const std::vector<GeneratorFixture> g = {
      {{IVec{0, 1}, IVec{0, 1}, IVec{0, 0}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 0}}, true},
      {{IVec{1, 0}, IVec{0, 1}, IVec{0, 1}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 2}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{1, 0}}, false},
      {{IVec{1, 0}, IVec{1, 0}, IVec{1, 1}}, false},
      {{IVec{0, 1}, IVec{0, 1}, IVec{0, 1}}, false},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 1}}, false},
  };
  return g;
}

const std::vector<GeneratorFixture>& g2_generator_fixture() {
  static const std::vector<GeneratorFixture> g = {
      {{IVec{0, 1}, IVec{0, 1}, IVec{0, 0}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 0}}, true},
      {{IVec{0, 1}, IVec{0, 1}, IVec{0, 1}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{1, 0}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 3}}, true},
      {{IVec{1, 0}, IVec{2, 0}, IVec{0, 3}}, true},
      {{IVec{1, 0}, IVec{0, 1}, IVec{0, 1}}, true},
      {{IVec{1, 0}, IVec{0, 1}, IVec{0, 2}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 2}}, true},
      {{IVec{1, 0}, IVec{1, 0}, IVec{0, 1}}, false},
      {{IVec{1, 0}, IVec{1, 0}, IVec{1, 1}}, false},
  };
  return g;
}

bool sum_in_coroot_lattice(const RootSystem& rs, const LabelTriple& t) {
  WeightLattice wl(rs.dual());
  return wl.in_root_lattice(t[0] + t[1] + t[2]);
}

std::vector<std::string> validate_dictionaries() {
  std::vector<std::string> bad;
  RootSystem b2 = RootSystem::build("B2");
  if (ambient_from_labels(b2, labels_from_bracket(b2, {1, 0})) != RVec{1, 1} ||
      ambient_from_labels(b2, labels_from_bracket(b2, {0, 1})) != RVec{1, 0})
    bad.push_back("B2: [1,0] and [0,1] should be (1,1) and (1,0)");
  const auto& fb = b2_generator_fixture();
  for (size_t i = 0; i < fb.size(); ++i) {
    LabelTriple t;
    for (size_t k = 0; k < 3; ++k) t[k] = labels_from_bracket(b2, fb[i].bracket[k]);
    bool expect = i < 5;
    if (sum_in_coroot_lattice(b2, t) != expect)
      bad.push_back("B2 generator " + std::to_string(i + 1) + ": lattice condition should be " + (expect ? "true" : "false"));
  }
  // (lambda_1, lambda_2, lambda_2) must be the G2 generator listed as Q3-only.
  RootSystem g2 = RootSystem::build("G2");
  IVec lam1{0, 1}, lam2{1, 0};
  if (RepRing(g2.dual()).weyl_dimension(lam1) != 7) bad.push_back("G2: lambda_1 should label the 7-dimensional representation");
  LabelTriple target{bracket_from_labels(g2, lam2), bracket_from_labels(g2, lam2), bracket_from_labels(g2, lam1)};
  const auto& g = g2_generator_fixture()[9];
  if (g.bracket != target || g.q4) bad.push_back("G2: (lambda_1, lambda_2, lambda_2) should be the first Q3-only generator");
  return bad;
}

std::optional<int64_t> oracle_in_D3(const RootSystem& rs, const std::array<RVec, 3>& t, int64_t k_max) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  for (const auto& v : t)
    if (v.size() != rs.rank()) throw DomainError("expected " + std::to_string(rs.rank()) + " labels per vector");
  RepRing reps(rs.dual());
  for (int64_t k = 1; k <= k_max; ++k) {
    std::array<IVec, 3> s;
    bool integral = true;
    for (size_t i = 0; i < 3 && integral; ++i)
      for (const auto& x : t[i]) {
        Rational y = x * Rational(k);
        if (!is_integer(y)) {
          integral = false;
          break;
        }
        s[i].push_back(to_int64(y));
      }
    if (!integral) continue;
    if (reps.n0(s[0], s[1], s[2]) != 0) return k;
  }
  return std::nullopt;
}

}  // namespace satake
