#include "satake/rootdata/weights.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace satake {

WeightLattice::WeightLattice(const RootSystem& s) : sys_(s), n_(s.rank()), c_(s.cartan()), lazy_(std::make_shared<Lazy>()) {
  for (const auto& coeff : s.positive_root_coeffs()) {
    IVec lab(n_, 0);
    for (size_t j = 0; j < n_; ++j)
      if (coeff[j])
        for (size_t i = 0; i < n_; ++i) lab[i] += coeff[j] * c_[j][i];
    pos_labels_.push_back(lab);
  }
  RMat ct(n_, RVec(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) ct[i][j] = Rational(BigInt(c_[j][i]));
  coeff_from_labels_ = inverse(ct);

  const auto& fw = s.fundamental_weights();
  RMat g(n_, RVec(n_));
  BigInt den = 1;
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      g[i][j] = dot(fw[i], fw[j]);
      den = lcm(den, denominator(g[i][j]));
    }
  form_den_ = to_int64(den);
  form_num_.assign(n_, IVec(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) form_num_[i][j] = to_int64(g[i][j] * Rational(den));

  two_rho_dual_.assign(n_, 0);
  for (const auto& c : s.positive_coroot_coeffs()) two_rho_dual_ = two_rho_dual_ + c;
}

IVec WeightLattice::reflect(size_t i, IVec v) const {
  int64_t p = v[i];
  if (p == 0) return v;
  for (size_t k = 0; k < n_; ++k) v[k] -= p * c_[i][k];
  return v;
}

bool WeightLattice::is_dominant(const IVec& v) const {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x >= 0; });
}

std::pair<IVec, int> WeightLattice::to_dominant(IVec v) const {
  int len = 0;
  while (true) {
    size_t i = 0;
    while (i < n_ && v[i] >= 0) ++i;
    if (i == n_) break;
    v = reflect(i, v);
    ++len;
  }
  return {v, len};
}

std::vector<std::pair<IVec, int>> WeightLattice::orbit(const IVec& dominant) const {
  if (!is_dominant(dominant)) throw DomainError("orbit expects a dominant weight");
  std::set<IVec> seen{dominant};
  std::vector<std::pair<IVec, int>> out{{dominant, 0}};
  BigInt cap = weyl_enumeration_cap();
  for (size_t k = 0; k < out.size(); ++k) {
    auto [x, d] = out[k];
    for (size_t i = 0; i < n_; ++i) {
      if (x[i] <= 0) continue;
      IVec y = reflect(i, x);
      if (seen.insert(y).second) {
        out.emplace_back(y, d + 1);
        if (BigInt(out.size()) > cap) throw CapExceeded("Weyl orbit exceeds the enumeration cap");
      }
    }
  }
  return out;
}

IVec WeightLattice::contragredient(const IVec& lam) const { return to_dominant(-lam).first; }

std::optional<IVec> WeightLattice::root_coeffs(const IVec& v) const {
  IVec out(n_);
  for (size_t i = 0; i < n_; ++i) {
    Rational s(0);
    for (size_t j = 0; j < n_; ++j)
      if (v[j]) s += coeff_from_labels_[i][j] * Rational(BigInt(v[j]));
    if (!is_integer(s)) return std::nullopt;
    out[i] = to_int64(s);
  }
  return out;
}

bool WeightLattice::leq(const IVec& mu, const IVec& lam) const {
  auto c = root_coeffs(lam - mu);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](int64_t x) { return x >= 0; });
}

std::vector<IVec> WeightLattice::dominant_below(const IVec& lam) const {
  if (!is_dominant(lam)) throw DomainError("dominant_below expects a dominant weight");
  // Dominant weights below lam are connected to lam by chains of dominant
  // weights differing by positive roots.
  std::set<IVec> seen{lam};
  std::vector<IVec> out{lam};
  for (size_t k = 0; k < out.size(); ++k) {
    for (const auto& r : pos_labels_) {
      IVec y = out[k] - r;
      if (is_dominant(y) && seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

int64_t WeightLattice::form(const IVec& x, const IVec& y) const {
  int64_t s = 0;
  for (size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < n_; ++j) s += x[i] * form_num_[i][j] * y[j];
  }
  return s;
}

int64_t WeightLattice::two_rho_dual_pairing(const IVec& v) const {
  int64_t s = 0;
  for (size_t i = 0; i < n_; ++i) s += two_rho_dual_[i] * v[i];
  return s;
}

const std::vector<WeightLattice::Element>& WeightLattice::elements() const {
  if (sys_.weyl_order() > weyl_enumeration_cap())
    throw CapExceeded("Weyl group of " + sys_.label() + " has order " + sys_.weyl_order().str() +
                      ", above the enumeration cap " + weyl_enumeration_cap().str());
  std::call_once(lazy_->once, [this] {
    // Columns of the label matrix are images of the fundamental weights;
    // enumerate via the orbit of rho (all labels 1), which is regular.
    IVec rho(n_, 1);
    std::map<IVec, IMat> seen;
    IMat id(n_, IVec(n_, 0));
    for (size_t i = 0; i < n_; ++i) id[i][i] = 1;
    seen[rho] = id;
    std::vector<std::pair<IVec, int>> order{{rho, 0}};
    for (size_t k = 0; k < order.size(); ++k) {
      auto [x, d] = order[k];
      IMat m = seen[x];
      for (size_t i = 0; i < n_; ++i) {
        if (x[i] <= 0) continue;
        IVec y = reflect(i, x);
        if (seen.count(y)) continue;
        IMat m2 = m;  // s_i * w : apply reflection to every column
        for (size_t col = 0; col < n_; ++col) {
          IVec c(n_);
          for (size_t r = 0; r < n_; ++r) c[r] = m[r][col];
          c = reflect(i, c);
          for (size_t r = 0; r < n_; ++r) m2[r][col] = c[r];
        }
        seen[y] = m2;
        order.emplace_back(y, d + 1);
      }
    }
    for (const auto& [x, d] : order) lazy_->elements.push_back(Element{seen[x], d});
  });
  return lazy_->elements;
}

IVec WeightLattice::apply(const Element& w, const IVec& v) const {
  IVec out(n_, 0);
  for (size_t r = 0; r < n_; ++r)
    for (size_t c = 0; c < n_; ++c) out[r] += w.mat[r][c] * v[c];
  return out;
}

}  // namespace satake
