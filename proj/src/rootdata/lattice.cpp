#include "satake/rootdata/lattice.hpp"

#include "satake/core/error.hpp"

#include <regex>

namespace satake {

namespace {

IVec integral_labels(const RootSystem& rs, const RVec& v, const std::string& what) {
  IVec out;
  for (const auto& l : rs.coweight_labels(v)) {
    if (!is_integer(l)) throw DomainError(what + " does not pair integrally with every root");
    out.push_back(to_int64(l));
  }
  return out;
}

}  // namespace

IMat coroot_lattice_hnf(const RootSystem& rs) {
  IMat rows;
  for (const auto& c : rs.simple_coroots()) rows.push_back(integral_labels(rs, c, "coroot"));
  return hermite_normal_form(rows);
}

LatticeSpec LatticeSpec::from_generators(const RootSystem& rs, const std::vector<RVec>& gens, std::string name) {
  LatticeSpec L;
  L.name_ = std::move(name);
  size_t dim = rs.ambient_dim();
  BigInt den = 1;
  for (const auto& g : gens) {
    if (g.size() != dim) throw DomainError("lattice generator has wrong dimension");
    for (const auto& x : g) den = lcm(den, denominator(x));
  }
  IMat rows;
  for (const auto& g : gens) {
    IVec r;
    for (const auto& x : g) r.push_back(to_int64(x * Rational(den)));
    rows.push_back(r);
  }
  for (const auto& row : hermite_normal_form(rows)) {
    RVec b;
    for (auto x : row) b.emplace_back(BigInt(x), den);
    L.basis_.push_back(b);
  }
  for (const auto& b : L.basis_) integral_labels(rs, b, "lattice vector");
  for (const auto& c : rs.simple_coroots())
    if (!L.contains(c)) throw DomainError("lattice '" + L.name_ + "' does not contain the coroot lattice");

  std::vector<RVec> central;
  for (const auto& b : L.basis_) central.push_back(rs.central_part(b));
  IMat kern = integer_kernel(central);
  IMat derived;
  for (const auto& n : kern) {
    RVec v(dim, Rational(0));
    for (size_t k = 0; k < n.size(); ++k)
      if (n[k]) v = v + Rational(BigInt(n[k])) * L.basis_[k];
    derived.push_back(integral_labels(rs, v, "lattice vector"));
  }
  L.derived_hnf_ = hermite_normal_form(derived);
  L.coroot_hnf_ = coroot_lattice_hnf(rs);
  return L;
}

LatticeSpec LatticeSpec::coroot(const RootSystem& rs) { return from_generators(rs, rs.simple_coroots(), "coroot"); }

LatticeSpec LatticeSpec::coweight(const RootSystem& rs) {
  return from_generators(rs, rs.fundamental_coweights(), "coweight");
}

bool LatticeSpec::contains(const RVec& v) const {
  RVec x;
  if (!solve_in_span(basis_, v, x)) return false;
  for (const auto& c : x)
    if (!is_integer(c)) return false;
  return true;
}

BigInt LatticeSpec::index_over_coroots() const {
  // Ratio of covolumes: product of HNF pivots.
  BigInt a = 1, b = 1;
  for (size_t i = 0; i < derived_hnf_.size(); ++i) {
    size_t c = 0;
    while (derived_hnf_[i][c] == 0) ++c;
    a *= derived_hnf_[i][c];
  }
  for (size_t i = 0; i < coroot_hnf_.size(); ++i) {
    size_t c = 0;
    while (coroot_hnf_[i][c] == 0) ++c;
    b *= coroot_hnf_[i][c];
  }
  return b / a;
}

namespace {

GroupPreset make(const std::string& name, const std::string& type, char which) {
  RootSystem rs = RootSystem::build(type);
  if (which == 'Q') return {name, rs, LatticeSpec::coroot(rs)};
  if (which == 'P') return {name, rs, LatticeSpec::coweight(rs)};
  // 'Z': the full integer lattice of the ambient model (GL, SO(2l)).
  std::vector<RVec> gens;
  for (size_t k = 0; k < rs.ambient_dim(); ++k) {
    RVec e(rs.ambient_dim(), Rational(0));
    e[k] = 1;
    gens.push_back(e);
  }
  return {name, rs, LatticeSpec::from_generators(rs, gens, name)};
}

GroupPreset simple_preset(const std::string& name) {
  std::smatch m;
  static const std::regex re(R"(^(SL|GL|PSL|Sp|PSp|Spin|SO|PSO)\(?(\d+)\)?$)");
  if (std::regex_match(name, m, re)) {
    std::string fam = m[1];
    int n = std::stoi(m[2]);
    if (fam == "SL" || fam == "GL" || fam == "PSL") {
      if (n < 2) throw DomainError("rank out of range in '" + name + "'");
      std::string t = "A" + std::to_string(n - 1);
      GroupPreset g = make(name, t, fam == "SL" ? 'Q' : fam == "PSL" ? 'P' : 'Z');
      return g;
    }
    if (fam == "Sp" || fam == "PSp") {
      if (n % 2 || n < 2) throw DomainError("symplectic groups need an even size >= 2: '" + name + "'");
      std::string t = n == 2 ? "A1" : "C" + std::to_string(n / 2);
      return make(name, t, fam == "Sp" ? 'Q' : 'P');
    }
    if (fam == "Spin" || fam == "SO") {
      if (n < 5) throw DomainError("orthogonal groups need size >= 5: '" + name + "'");
      if (n % 2) return make(name, "B" + std::to_string(n / 2), fam == "Spin" ? 'Q' : 'P');
      return make(name, "D" + std::to_string(n / 2), fam == "Spin" ? 'Q' : 'Z');
    }
    if (fam == "PSO") {
      if (n % 2 || n < 6) throw DomainError("PSO needs an even size >= 6: '" + name + "'");
      return make(name, "D" + std::to_string(n / 2), 'P');
    }
  }
  if (name == "G2" || name == "F4" || name == "E8") return make(name, name, 'Q');
  if (name == "E6sc" || name == "E7sc") return make(name, name.substr(0, 2), 'Q');
  if (name == "E6ad" || name == "E7ad") return make(name, name.substr(0, 2), 'P');
  // Bare Cartan type: adjoint group.
  RootSystem rs = RootSystem::build(name);
  return {name, rs, LatticeSpec::coweight(rs)};
}

std::vector<std::string> split_product(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < name.size(); ++i) {
    if (name[i] == 'x' && i + 1 < name.size() && std::isupper(static_cast<unsigned char>(name[i + 1])) && !cur.empty()) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += name[i];
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

GroupPreset group_preset(const std::string& name) {
  auto parts = split_product(name);
  if (parts.size() == 1) return simple_preset(name);
  std::vector<GroupPreset> fs;
  std::string label;
  for (const auto& p : parts) {
    fs.push_back(simple_preset(p));
    if (!label.empty()) label += "x";
    label += fs.back().system.label();
  }
  RootSystem rs = RootSystem::build(label);
  std::vector<RVec> gens;
  size_t off = 0;
  for (const auto& f : fs) {
    for (const auto& b : f.lattice.basis()) {
      RVec v(rs.ambient_dim(), Rational(0));
      for (size_t k = 0; k < b.size(); ++k) v[off + k] = b[k];
      gens.push_back(v);
    }
    off += f.system.ambient_dim();
  }
  return {name, rs, LatticeSpec::from_generators(rs, gens, name)};
}

bool is_preset_name(const std::string& name) {
  try {
    group_preset(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> preset_examples() {
  return {"SL3", "GL3", "PSL3", "Sp4", "PSp4", "Spin5", "SO5", "Spin8", "SO8", "PSO8", "G2", "F4", "E6sc", "E6ad", "E7sc", "E7ad", "E8"};
}

}  // namespace satake
