#include "satake/rootdata/root_system.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace satake {

BigInt weyl_enumeration_cap() {
  if (const char* env = std::getenv("WEYL_ENUM_CAP")) {
    try {
      Rational r = parse_rational(env);
      if (is_integer(r) && r > 0) return numerator(r);
    } catch (const Error&) {
    }
    throw ParseError(std::string("WEYL_ENUM_CAP must be a positive integer, got '") + env + "'");
  }
  return BigInt(1000000);
}

RVec WeylElement::apply(const RootSystem& rs, RVec x) const {
  for (size_t k = word.size(); k-- > 0;) x = rs.reflect(word[k], x);
  return x;
}

RMat WeylElement::matrix(const RootSystem& rs) const {
  size_t n = rs.ambient_dim();
  RMat cols;
  for (size_t k = 0; k < n; ++k) {
    RVec e(n, Rational(0));
    e[k] = 1;
    cols.push_back(apply(rs, e));
  }
  return transpose(cols);
}

namespace {

RVec unit(size_t n, size_t k, Rational s = 1) {
  RVec v(n, Rational(0));
  v[k] = s;
  return v;
}

std::vector<RVec> model_simple_roots(char fam, int l, size_t& dim) {
  std::vector<RVec> r;
  Rational h(1, 2);
  switch (fam) {
    case 'A':
      dim = l + 1;
      for (int i = 0; i < l; ++i) r.push_back(unit(dim, i) - unit(dim, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      dim = l;
      for (int i = 0; i + 1 < l; ++i) r.push_back(unit(dim, i) - unit(dim, i + 1));
      if (fam == 'B') r.push_back(unit(dim, l - 1));
      if (fam == 'C') r.push_back(unit(dim, l - 1, 2));
      if (fam == 'D') r.push_back(unit(dim, l - 2) + unit(dim, l - 1));
      break;
    case 'G':
      dim = 3;
      r.push_back(unit(3, 0) - unit(3, 1));
      r.push_back(unit(3, 0, -2) + unit(3, 1) + unit(3, 2));
      break;
    case 'F':
      dim = 4;
      r.push_back(unit(4, 1) - unit(4, 2));
      r.push_back(unit(4, 2) - unit(4, 3));
      r.push_back(unit(4, 3));
      r.push_back(RVec{h, -h, -h, -h});
      break;
    case 'E': {
      dim = 8;
      RVec a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      r.push_back(a1);
      r.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i < 6; ++i) r.push_back(unit(8, i + 1) - unit(8, i));
      r.resize(l);
      break;
    }
    default:
      throw DomainError(std::string("unknown Cartan type '") + fam + "'");
  }
  return r;
}

void check_rank(char fam, int l) {
  bool ok = true;
  switch (fam) {
    case 'A': ok = l >= 1; break;
    case 'B':
    case 'C': ok = l >= 2; break;
    case 'D': ok = l >= 3; break;
    case 'E': ok = l >= 6 && l <= 8; break;
    case 'F': ok = l == 4; break;
    case 'G': ok = l == 2; break;
    default: throw DomainError(std::string("unknown Cartan type '") + fam + "'");
  }
  if (!ok) throw DomainError(std::string("rank ") + std::to_string(l) + " out of range for type " + fam);
}

std::vector<int> family_degrees(char fam, int l) {
  std::vector<int> d;
  switch (fam) {
    case 'A':
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case 'G': d = {2, 6}; break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'E':
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return d;
}

char dual_family(char f) { return f == 'B' ? 'C' : f == 'C' ? 'B' : f; }

std::vector<std::pair<char, int>> parse_label(const std::string& label) {
  std::vector<std::pair<char, int>> out;
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty type label");
  size_t i = 0;
  while (i < s.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (fam < 'A' || fam > 'G') throw ParseError("unknown type label '" + label + "'");
    ++i;
    if (i < s.size() && s[i] == '_') ++i;
    size_t a = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (a == i) throw ParseError("missing rank in type label '" + label + "'");
    int l = std::stoi(s.substr(a, i - a));
    check_rank(fam, l);
    out.emplace_back(fam, l);
    if (i < s.size()) {
      if (s[i] == 'x' || s[i] == 'X' || s[i] == '*')
        ++i;
      else
        throw ParseError("unexpected character in type label '" + label + "'");
      if (i == s.size()) throw ParseError("dangling product in type label '" + label + "'");
    }
  }
  return out;
}

}  // namespace

IMat positive_roots_from_cartan(const IMat& a) {
  size_t n = a.size();
  std::set<IVec> seen;
  std::deque<IVec> todo;
  for (size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec b = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < n; ++i) {
      int64_t p = 0;  // <beta, alpha_i^vee>
      for (size_t j = 0; j < n; ++j) p += b[j] * a[j][i];
      if (p == 0) continue;
      IVec c = b;
      c[i] -= p;
      if (std::any_of(c.begin(), c.end(), [](int64_t x) { return x < 0; })) continue;
      if (std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; })) continue;
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  IMat out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const IVec& x, const IVec& y) {
    int64_t hx = 0, hy = 0;
    for (auto v : x) hx += v;
    for (auto v : y) hy += v;
    return hx < hy;
  });
  return out;
}

RootSystem RootSystem::build(const std::string& type_label) {
  auto parts = parse_label(type_label);
  RootSystem rs;
  size_t offset = 0;
  int first = 0;
  std::vector<std::vector<RVec>> blocks;
  for (auto [fam, l] : parts) {
    size_t dim = 0;
    auto roots = model_simple_roots(fam, l, dim);
    SimpleType t;
    t.family = fam;
    t.rank = l;
    t.first = first;
    t.ambient_offset = static_cast<int>(offset);
    t.ambient_dim = static_cast<int>(dim);
    rs.components_.push_back(t);
    blocks.push_back(roots);
    offset += dim;
    first += l;
  }
  rs.ambient_dim_ = offset;
  for (size_t c = 0; c < blocks.size(); ++c) {
    for (const auto& r : blocks[c]) {
      RVec v(offset, Rational(0));
      for (size_t k = 0; k < r.size(); ++k) v[rs.components_[c].ambient_offset + k] = r[k];
      rs.simple_roots_.push_back(v);
    }
  }
  for (const auto& r : rs.simple_roots_) rs.simple_coroots_.push_back((Rational(2) / dot(r, r)) * r);
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  size_t n = simple_roots_.size();
  std::string lab;
  for (const auto& c : components_) {
    if (!lab.empty()) lab += "x";
    lab += c.label();
  }
  label_ = lab;

  cartan_.assign(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) cartan_[i][j] = to_int64(dot(simple_roots_[i], simple_coroots_[j]));

  IMat at(n, IVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) at[i][j] = cartan_[j][i];
  pos_root_coeffs_ = positive_roots_from_cartan(cartan_);
  pos_coroot_coeffs_ = positive_roots_from_cartan(at);

  two_rho_coeffs_.assign(n, 0);
  for (const auto& c : pos_root_coeffs_) two_rho_coeffs_ = two_rho_coeffs_ + c;
  rho_.assign(ambient_dim_, Rational(0));
  for (auto& r : positive_roots()) rho_ = rho_ + r;
  rho_ = Rational(1, 2) * rho_;
  rho_check_.assign(ambient_dim_, Rational(0));
  for (auto& r : positive_coroots()) rho_check_ = rho_check_ + r;
  rho_check_ = Rational(1, 2) * rho_check_;

  RMat a(n, RVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(BigInt(cartan_[i][j]));
  gram_inv_coroots_ = inverse(a);              // c = A^{-1} labels
  gram_inv_roots_ = inverse(transpose(a));     // c = (A^T)^{-1} labels
  fund_coweights_.clear();
  fund_weights_.clear();
  for (size_t j = 0; j < n; ++j) {
    RVec w(ambient_dim_, Rational(0)), u(ambient_dim_, Rational(0));
    for (size_t k = 0; k < n; ++k) {
      w = w + gram_inv_coroots_[k][j] * simple_coroots_[k];
      u = u + gram_inv_roots_[k][j] * simple_roots_[k];
    }
    fund_coweights_.push_back(w);
    fund_weights_.push_back(u);
  }
  center_basis_ = orthogonal_complement(simple_roots_, ambient_dim_);
}

std::vector<RVec> RootSystem::positive_roots() const {
  std::vector<RVec> out;
  for (const auto& c : pos_root_coeffs_) {
    RVec v(ambient_dim_, Rational(0));
    for (size_t j = 0; j < c.size(); ++j)
      if (c[j]) v = v + Rational(BigInt(c[j])) * simple_roots_[j];
    out.push_back(v);
  }
  return out;
}

std::vector<RVec> RootSystem::positive_coroots() const {
  std::vector<RVec> out;
  for (const auto& c : pos_coroot_coeffs_) {
    RVec v(ambient_dim_, Rational(0));
    for (size_t j = 0; j < c.size(); ++j)
      if (c[j]) v = v + Rational(BigInt(c[j])) * simple_coroots_[j];
    out.push_back(v);
  }
  return out;
}

IVec RootSystem::theta_coeffs(size_t component) const {
  if (component >= components_.size()) throw DomainError("component index out of range");
  const auto& t = components_[component];
  const IVec* best = nullptr;
  int64_t best_h = -1;
  for (const auto& c : pos_root_coeffs_) {
    int64_t h = 0;
    bool inside = true;
    for (size_t j = 0; j < c.size(); ++j) {
      bool mine = static_cast<int>(j) >= t.first && static_cast<int>(j) < t.first + t.rank;
      if (!mine && c[j]) inside = false;
      h += c[j];
    }
    if (inside && h > best_h) {
      best_h = h;
      best = &c;
    }
  }
  return IVec(best->begin() + t.first, best->begin() + t.first + t.rank);
}

IVec RootSystem::all_theta_coeffs() const {
  IVec m;
  for (size_t c = 0; c < components_.size(); ++c) {
    IVec t = theta_coeffs(c);
    m.insert(m.end(), t.begin(), t.end());
  }
  return m;
}

RVec RootSystem::theta(size_t component) const {
  IVec m = theta_coeffs(component);
  const auto& t = components_[component];
  RVec v(ambient_dim_, Rational(0));
  for (int j = 0; j < t.rank; ++j) v = v + Rational(BigInt(m[j])) * simple_roots_[t.first + j];
  return v;
}

RVec RootSystem::theta_coroot(size_t component) const {
  RVec th = theta(component);
  return (Rational(2) / dot(th, th)) * th;
}

std::vector<int> RootSystem::degrees() const {
  std::vector<int> d;
  for (const auto& c : components_) {
    auto x = family_degrees(c.family, c.rank);
    d.insert(d.end(), x.begin(), x.end());
  }
  return d;
}

BigInt RootSystem::weyl_order() const {
  BigInt o = 1;
  for (int d : degrees()) o *= d;
  return o;
}

RootSystem RootSystem::dual() const {
  RootSystem d;
  d.ambient_dim_ = ambient_dim_;
  d.components_ = components_;
  for (auto& c : d.components_) c.family = dual_family(c.family);
  d.simple_roots_ = simple_coroots_;
  d.simple_coroots_ = simple_roots_;
  d.finish();
  return d;
}

RVec RootSystem::coweight_labels(const RVec& lam) const {
  if (lam.size() != ambient_dim_) throw DomainError("dimension mismatch: expected " + std::to_string(ambient_dim_) + " coordinates");
  RVec l;
  for (const auto& a : simple_roots_) l.push_back(dot(a, lam));
  return l;
}

RVec RootSystem::weight_labels(const RVec& chi) const {
  if (chi.size() != ambient_dim_) throw DomainError("dimension mismatch: expected " + std::to_string(ambient_dim_) + " coordinates");
  RVec l;
  for (const auto& a : simple_coroots_) l.push_back(dot(chi, a));
  return l;
}

RVec RootSystem::coweight_from_labels(const RVec& labels) const {
  if (labels.size() != rank()) throw DomainError("expected " + std::to_string(rank()) + " labels");
  RVec v(ambient_dim_, Rational(0));
  for (size_t i = 0; i < labels.size(); ++i) v = v + labels[i] * fund_coweights_[i];
  return v;
}

RVec RootSystem::weight_from_labels(const RVec& labels) const {
  if (labels.size() != rank()) throw DomainError("expected " + std::to_string(rank()) + " labels");
  RVec v(ambient_dim_, Rational(0));
  for (size_t i = 0; i < labels.size(); ++i) v = v + labels[i] * fund_weights_[i];
  return v;
}

RVec RootSystem::central_part(const RVec& v) const { return v - coweight_from_labels(coweight_labels(v)); }

RVec RootSystem::coroot_coefficients(const RVec& lam) const {
  if (!is_zero(central_part(lam))) throw DomainError("vector is not in the span of the coroots");
  return mat_vec(gram_inv_coroots_, coweight_labels(lam));
}

RVec RootSystem::root_coefficients(const RVec& chi) const {
  if (!is_zero(chi - weight_from_labels(weight_labels(chi)))) throw DomainError("vector is not in the span of the roots");
  return mat_vec(gram_inv_roots_, weight_labels(chi));
}

Rational RootSystem::pairing(const RVec& chi, const RVec& lam) const {
  if (chi.size() != ambient_dim_ || lam.size() != ambient_dim_) throw DomainError("dimension mismatch in pairing");
  return dot(chi, lam);
}

RVec RootSystem::reflect(int i, const RVec& x) const {
  Rational p = dot(x, simple_coroots_[i]);
  if (p == 0) return x;
  return x - p * simple_roots_[i];
}

bool RootSystem::is_dominant_coweight(const RVec& lam) const {
  for (const auto& l : coweight_labels(lam))
    if (l < 0) return false;
  return true;
}

bool RootSystem::is_dominant_weight(const RVec& chi) const {
  for (const auto& l : weight_labels(chi))
    if (l < 0) return false;
  return true;
}

bool RootSystem::dominance_leq(const RVec& mu, const RVec& lam, bool coweight_side) const {
  bool dom = coweight_side ? is_dominant_coweight(mu) && is_dominant_coweight(lam)
                           : is_dominant_weight(mu) && is_dominant_weight(lam);
  if (!dom) throw DomainError("dominance order needs dominant inputs");
  RVec diff = lam - mu;
  RVec c;
  if (coweight_side) {
    if (!is_zero(central_part(diff))) return false;
    c = mat_vec(gram_inv_coroots_, coweight_labels(diff));
  } else {
    if (!is_zero(diff - weight_from_labels(weight_labels(diff)))) return false;
    c = mat_vec(gram_inv_roots_, weight_labels(diff));
  }
  for (const auto& x : c)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

std::pair<RVec, WeylElement> RootSystem::to_dominant(const RVec& v) const {
  RVec x = v;
  std::vector<int> steps;
  while (true) {
    int found = -1;
    for (size_t i = 0; i < rank(); ++i)
      if (dot(x, simple_roots_[i]) < 0) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) break;
    x = reflect(found, x);
    steps.push_back(found);
  }
  WeylElement w;
  w.word.assign(steps.rbegin(), steps.rend());
  return {x, w};
}

std::vector<RVec> RootSystem::weyl_orbit(const RVec& v) const {
  RVec start = to_dominant(v).first;
  std::set<RVec> seen{start};
  std::vector<RVec> order{start};
  for (size_t k = 0; k < order.size(); ++k) {
    RVec x = order[k];
    for (size_t i = 0; i < rank(); ++i) {
      if (dot(x, simple_roots_[i]) <= 0) continue;
      RVec y = reflect(static_cast<int>(i), x);
      if (seen.insert(y).second) {
        order.push_back(y);
        if (BigInt(order.size()) > weyl_enumeration_cap()) throw CapExceeded("Weyl orbit exceeds the enumeration cap");
      }
    }
  }
  return order;
}

RVec RootSystem::contragredient(const RVec& lam) const { return to_dominant(Rational(-1) * lam).first; }

WeylElement RootSystem::longest_element() const {
  RVec v = Rational(-1) * rho_;
  RVec x = v;
  std::vector<int> steps;
  while (true) {
    int found = -1;
    for (size_t i = 0; i < rank(); ++i)
      if (dot(x, simple_coroots_[i]) < 0) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) break;
    x = reflect(found, x);
    steps.push_back(found);
  }
  WeylElement w;
  w.word.assign(steps.rbegin(), steps.rend());
  return w;
}

std::vector<WeylElement> RootSystem::weyl_elements() const {
  if (weyl_order() > weyl_enumeration_cap())
    throw CapExceeded("Weyl group of " + label_ + " has order " + weyl_order().str() + ", above the enumeration cap " +
                      weyl_enumeration_cap().str());
  // Orbit of the regular weight rho; each orbit point carries a reduced word.
  std::map<RVec, std::vector<int>> seen{{rho_, {}}};
  std::vector<RVec> order{rho_};
  for (size_t k = 0; k < order.size(); ++k) {
    RVec x = order[k];
    auto word = seen[x];
    for (size_t i = 0; i < rank(); ++i) {
      if (dot(x, simple_coroots_[i]) <= 0) continue;
      RVec y = reflect(static_cast<int>(i), x);
      if (seen.count(y)) continue;
      std::vector<int> w{static_cast<int>(i)};
      w.insert(w.end(), word.begin(), word.end());
      seen[y] = w;
      order.push_back(y);
    }
  }
  std::vector<WeylElement> out;
  for (const auto& x : order) out.push_back(WeylElement{seen[x]});
  return out;
}

}  // namespace satake
