#include "satake/polyhedron/inequalities.hpp"

#include "satake/core/error.hpp"

namespace satake {

RVec flatten(const Triple& t) {
  RVec out;
  for (const auto& v : t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Triple unflatten(const RVec& v, size_t rank) {
  if (v.size() != 3 * rank) throw DomainError("triple has the wrong length");
  Triple t;
  for (size_t k = 0; k < 3; ++k) t[k].assign(v.begin() + k * rank, v.begin() + (k + 1) * rank);
  return t;
}

bool InequalitySystem::satisfied(const RVec& t) const { return violated(t).empty(); }

std::vector<size_t> InequalitySystem::violated(const RVec& t) const {
  if (t.size() != dim) throw DomainError("point has dimension " + std::to_string(t.size()) + ", system has " + std::to_string(dim));
  std::vector<size_t> bad;
  for (size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i].coeffs, t) < 0) bad.push_back(i);
  return bad;
}

namespace {

// Variable index of x_i / y_i (i = 0,1,2).
size_t X(size_t i) { return 2 * i; }
size_t Y(size_t i) { return 2 * i + 1; }

std::string name(char c, size_t i) { return std::string(1, c) + std::to_string(i + 1); }

}  // namespace

InequalitySystem b2_stability_system() {
  InequalitySystem s;
  s.dim = 6;
  auto row = [&](std::string tag) -> RVec& {
    s.rows.push_back({RVec(6, Rational(0)), std::move(tag)});
    return s.rows.back().coeffs;
  };
  for (size_t i = 0; i < 3; ++i) {
    RVec& r = row("chamber: " + name('x', i) + " >= " + name('y', i));
    r[X(i)] = 1;
    r[Y(i)] = -1;
  }
  for (size_t i = 0; i < 3; ++i) row("chamber: " + name('y', i) + " >= 0")[Y(i)] = 1;
  for (size_t i = 0; i < 3; ++i) {
    size_t j = (i + 1) % 3, k = (i + 2) % 3;
    RVec& r = row("isotropic lines: " + name('x', i) + " <= " + name('x', j) + " + " + name('x', k));
    r[X(j)] = 1;
    r[X(k)] = 1;
    r[X(i)] = -1;
  }
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      size_t k = 3 - i - j;
      RVec& r = row("isotropic lines: " + name('y', i) + " <= " + name('y', j) + " + " + name('x', k));
      r[Y(j)] = 1;
      r[X(k)] = 1;
      r[Y(i)] = -1;
    }
  // x_i + y_j <= S/2, scaled by 2.
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      RVec& r = row("isotropic planes: " + name('x', i) + " + " + name('y', j) + " <= S/2");
      for (auto& c : r) c = 1;
      r[X(i)] -= 2;
      r[Y(j)] -= 2;
    }
  return s;
}

InequalitySystem orthant_system(size_t dim) {
  InequalitySystem s;
  s.dim = dim;
  for (size_t i = 0; i < dim; ++i) {
    RVec r(dim, Rational(0));
    r[i] = 1;
    s.rows.push_back({r, "x" + std::to_string(i + 1) + " >= 0"});
  }
  return s;
}

namespace {

void check_b2(const Triple& t) {
  for (const auto& v : t)
    if (v.size() != 2) throw DomainError("B2 triples need rank-2 vectors");
}

bool in_root_cone(const RVec& w) { return w[0] >= 0 && w[0] + w[1] >= 0; }
RVec tau(const RVec& v) { return {v[1], v[0]}; }

}  // namespace

bool in_b2_chamber(const RVec& v) { return v.size() == 2 && v[0] >= v[1] && v[1] >= 0; }

bool in_D3_b2(const Triple& t) {
  check_b2(t);
  static const InequalitySystem sys = b2_stability_system();
  return sys.satisfied(flatten(t));
}

bool in_D3_b2_root_cone(const Triple& t) {
  check_b2(t);
  for (const auto& v : t)
    if (!in_b2_chamber(v)) return false;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      size_t k = 3 - i - j;
      if (!in_root_cone(t[j] + t[k] - t[i])) return false;
      if (!in_root_cone(tau(t[j]) + t[k] - tau(t[i]))) return false;
    }
  return true;
}

bool naive_triangle_b2(const Triple& t) {
  check_b2(t);
  for (size_t i = 0; i < 3; ++i) {
    size_t j = (i + 1) % 3, k = (i + 2) % 3;
    if (!in_b2_chamber(t[j] + t[k] - t[i])) return false;
  }
  return true;
}

}  // namespace satake
