#include "satake/qanalog/kostant.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <set>

namespace satake {

LaurentPoly ChangeOfBasis::a_at(const IVec& lam, const IVec& mu) const {
  auto it = a.find({lam, mu});
  return it == a.end() ? LaurentPoly() : it->second;
}

LaurentPoly ChangeOfBasis::b_at(const IVec& lam, const IVec& mu) const {
  auto it = b.find({lam, mu});
  return it == b.end() ? LaurentPoly() : it->second;
}

QAnalog::QAnalog(const RootSystem& s) : wl_(s), memo_(std::make_shared<Memo>()) {
  for (const auto& c : s.positive_root_coeffs()) {
    int64_t h = 0;
    for (auto x : c) h += x;
    if (h > 1) nonsimple_.push_back(c);
  }
  memo_->kostant.resize(nonsimple_.size() + 1);
}

namespace {

void add_shifted(std::vector<int64_t>& acc, const std::vector<int64_t>& p, size_t shift) {
  if (p.empty()) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (size_t i = 0; i < p.size(); ++i)
    if (__builtin_add_overflow(acc[i + shift], p[i], &acc[i + shift])) throw Error("partition count overflow");
}

}  // namespace

const QAnalog::IPoly& QAnalog::partition(size_t k, const IVec& v) const {
  static const IPoly zero;
  for (auto x : v)
    if (x < 0) return zero;
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->kostant[k].find(v);
    if (it != memo_->kostant[k].end()) return it->second;
  }
  IPoly acc;
  const IVec& beta = nonsimple_[k - 1];
  IVec x = v;
  for (size_t n = 0;; ++n) {
    if (std::any_of(x.begin(), x.end(), [](int64_t c) { return c < 0; })) break;
    if (k == 1) {
      // Only simple roots remain: a unique decomposition with sum(x) terms.
      int64_t terms = 0;
      for (auto c : x) terms += c;
      size_t deg = n + static_cast<size_t>(terms);
      if (acc.size() <= deg) acc.resize(deg + 1, 0);
      acc[deg] += 1;
    } else {
      add_shifted(acc, partition(k - 1, x), n);
    }
    x = x - beta;
  }
  std::lock_guard<std::mutex> g(memo_->mu);
  auto [it, inserted] = memo_->kostant[k].emplace(v, std::move(acc));
  return it->second;
}

LaurentPoly QAnalog::q_kostant(const IVec& v) const {
  if (v.size() != wl_.rank()) throw DomainError("partition function argument has the wrong length");
  for (auto x : v)
    if (x < 0) return LaurentPoly();
  if (nonsimple_.empty()) {
    int64_t terms = 0;
    for (auto c : v) terms += c;
    return LaurentPoly::monomial_q(static_cast<int>(terms));
  }
  const IPoly& p = partition(nonsimple_.size(), v);
  LaurentPoly out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i]) out += LaurentPoly::monomial_q(static_cast<int>(i), BigInt(p[i]));
  return out;
}

LaurentPoly QAnalog::kostka_foulkes(const IVec& lam, const IVec& mu) const {
  if (!wl_.is_dominant(lam) || !wl_.is_dominant(mu)) throw DomainError("Kostka-Foulkes polynomial needs dominant weights");
  if (!wl_.leq(mu, lam)) return LaurentPoly();
  IVec rho(wl_.rank(), 1);
  IVec lr = lam + rho, mr = mu + rho;
  LaurentPoly out;
  for (const auto& w : wl_.elements()) {
    auto c = wl_.root_coeffs(wl_.apply(w, lr) - mr);
    if (!c) throw Error("weight difference left the root lattice");
    LaurentPoly p = q_kostant(*c);
    if (p.is_zero()) continue;
    if (w.length % 2)
      out -= p;
    else
      out += p;
  }
  return out;
}

int64_t QAnalog::height(const IVec& lam, const IVec& mu) const {
  auto c = wl_.root_coeffs(lam - mu);
  if (!c) throw DomainError("weights differ by a non-root-lattice vector");
  int64_t h = 0;
  for (auto x : *c) h += x;
  return h;
}

LaurentPoly QAnalog::kl_b(const IVec& lam, const IVec& mu) const {
  if (!wl_.leq(mu, lam)) return LaurentPoly();
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->b.find({lam, mu});
    if (it != memo_->b.end()) return it->second;
  }
  LaurentPoly k = kostka_foulkes(lam, mu);
  LaurentPoly b = k.invert_variable().shift_q(static_cast<int>(height(lam, mu)));
  std::lock_guard<std::mutex> g(memo_->mu);
  memo_->b.emplace(std::make_pair(lam, mu), b);
  return b;
}

LaurentPoly QAnalog::kl_a(const IVec& lam, const IVec& mu) const {
  if (!wl_.is_dominant(lam) || !wl_.is_dominant(mu)) throw DomainError("change of basis needs dominant weights");
  if (!wl_.leq(mu, lam)) return LaurentPoly();
  if (lam == mu) return LaurentPoly(1);
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->a.find({lam, mu});
    if (it != memo_->a.end()) return it->second;
  }
  // sum_{mu <= nu <= lam} b_lam(nu) a_nu(mu) = 0 for mu < lam.
  LaurentPoly s;
  for (const auto& nu : wl_.dominant_below(lam)) {
    if (nu == lam || !wl_.leq(mu, nu)) continue;
    LaurentPoly b = kl_b(lam, nu);
    if (b.is_zero()) continue;
    s += b * kl_a(nu, mu);
  }
  s = -s;
  std::lock_guard<std::mutex> g(memo_->mu);
  memo_->a.emplace(std::make_pair(lam, mu), s);
  return s;
}

ChangeOfBasis QAnalog::build_change_of_basis(const std::vector<IVec>& index_set) const {
  std::set<IVec> idx(index_set.begin(), index_set.end());
  for (const auto& lam : idx) {
    if (!wl_.is_dominant(lam)) throw DomainError("index set contains a non-dominant weight");
    for (const auto& mu : wl_.dominant_below(lam))
      if (!idx.count(mu)) throw DomainError("index set is not closed downward in the dominance order");
  }
  ChangeOfBasis cb;
  cb.index.assign(idx.begin(), idx.end());
  for (const auto& lam : cb.index)
    for (const auto& mu : cb.index) {
      if (!wl_.leq(mu, lam)) continue;
      LaurentPoly b = lam == mu ? LaurentPoly(1) : kl_b(lam, mu);
      LaurentPoly a = kl_a(lam, mu);
      if (!b.is_zero()) cb.b[{lam, mu}] = b;
      if (!a.is_zero()) cb.a[{lam, mu}] = a;
    }
  return cb;
}

}  // namespace satake
