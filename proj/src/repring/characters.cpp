#include "satake/repring/characters.hpp"

#include "satake/core/error.hpp"

#include <algorithm>

namespace satake {

RepRing::RepRing(const RootSystem& s) : wl_(s), memo_(std::make_shared<Memo>()) {}

namespace {

int64_t height_below(const WeightLattice& wl, const IVec& lam, const IVec& mu) {
  auto c = wl.root_coeffs(lam - mu);
  int64_t h = 0;
  for (auto x : *c) h += x;
  return h;
}

void require_dominant(const WeightLattice& wl, const IVec& v, const char* what) {
  if (v.size() != wl.rank()) throw DomainError(std::string(what) + ": expected " + std::to_string(wl.rank()) + " labels");
  if (!wl.is_dominant(v)) throw DomainError(std::string(what) + " is not dominant: (" + join_ints(v) + ")");
}

}  // namespace

const std::map<IVec, int64_t>& RepRing::dominant_character(const IVec& lam) const {
  require_dominant(wl_, lam, "highest weight");
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->chars.find(lam);
    if (it != memo_->chars.end()) return *it->second;
  }
  auto doms = wl_.dominant_below(lam);
  std::stable_sort(doms.begin(), doms.end(), [&](const IVec& a, const IVec& b) {
    return height_below(wl_, lam, a) < height_below(wl_, lam, b);
  });
  size_t n = wl_.rank();
  IVec rho(n, 1);
  IVec lr = lam + rho;
  int64_t top = wl_.form(lr, lr);
  int64_t lam_norm = wl_.form(lam, lam);
  auto ch = std::make_shared<std::map<IVec, int64_t>>();
  (*ch)[lam] = 1;
  const auto& roots = wl_.positive_root_labels();
  for (size_t k = 1; k < doms.size(); ++k) {
    const IVec& mu = doms[k];
    IVec mr = mu + rho;
    int64_t denom = top - wl_.form(mr, mr);
    int64_t num = 0;
    for (const auto& beta : roots) {
      IVec x = mu;
      while (true) {
        x = x + beta;
        int64_t xn = wl_.form(x, x);
        int64_t xb = wl_.form(x, beta);
        if (xn > lam_norm && xb > 0) break;  // norm only grows from here
        if (xn > lam_norm) continue;
        auto d = wl_.to_dominant(x).first;
        auto it = ch->find(d);
        if (it != ch->end()) num += xb * it->second;
      }
    }
    num *= 2;
    if (denom <= 0 || num % denom != 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    int64_t m = num / denom;
    if (m) (*ch)[mu] = m;
  }
  std::lock_guard<std::mutex> g(memo_->mu);
  auto [it, inserted] = memo_->chars.emplace(lam, ch);
  return *it->second;
}

int64_t RepRing::weight_multiplicity(const IVec& lam, const IVec& mu) const {
  if (mu.size() != wl_.rank()) throw DomainError("weight has the wrong number of labels");
  const auto& ch = dominant_character(lam);
  auto it = ch.find(wl_.to_dominant(mu).first);
  return it == ch.end() ? 0 : it->second;
}

std::vector<std::pair<IVec, int64_t>> RepRing::all_weights(const IVec& lam) const {
  std::vector<std::pair<IVec, int64_t>> out;
  for (const auto& [mu, m] : dominant_character(lam))
    for (const auto& [x, d] : wl_.orbit(mu)) out.emplace_back(x, m);
  return out;
}

BigInt RepRing::dimension(const IVec& lam) const {
  BigInt s = 0;
  for (const auto& [mu, m] : dominant_character(lam)) s += BigInt(m) * BigInt(wl_.orbit(mu).size());
  return s;
}

BigInt RepRing::weyl_dimension(const IVec& lam) const {
  require_dominant(wl_, lam, "highest weight");
  // prod over positive coroots beta^vee of <lam + rho, beta^vee> / <rho, beta^vee>
  Rational d(1);
  for (const auto& c : wl_.system().positive_coroot_coeffs()) {
    int64_t a = 0, b = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      a += c[i] * (lam[i] + 1);
      b += c[i];
    }
    d *= Rational(a, b);
  }
  return numerator(d);
}

const CharElem& RepRing::tensor(const IVec& lam, const IVec& mu) const {
  require_dominant(wl_, lam, "first factor");
  require_dominant(wl_, mu, "second factor");
  auto key = lam < mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    auto it = memo_->tensors.find(key);
    if (it != memo_->tensors.end()) return *it->second;
  }
  // Expand the factor with fewer dominant weights.
  IVec big = key.first, small = key.second;
  if (dominant_character(big).size() < dominant_character(small).size()) std::swap(big, small);
  size_t n = wl_.rank();
  IVec rho(n, 1);
  std::map<IVec, int64_t> acc;
  IVec base = big + rho;
  for (const auto& [nu, m] : dominant_character(small)) {
    for (const auto& [x0, d] : wl_.orbit(nu)) {
      IVec x = base + x0;
      int sign = 1;
      bool wall = false;
      while (true) {
        size_t i = 0;
        for (; i < n; ++i) {
          if (x[i] == 0) {
            wall = true;
            break;
          }
          if (x[i] < 0) break;
        }
        if (wall || i == n) break;
        x = wl_.reflect(i, x);
        sign = -sign;
      }
      if (wall) continue;
      acc[x - rho] += sign * m;
    }
  }
  auto out = std::make_shared<CharElem>();
  for (const auto& [k, v] : acc) {
    if (v < 0) throw Error("negative tensor multiplicity");
    if (v) (*out)[k] = v;
  }
  std::lock_guard<std::mutex> g(memo_->mu);
  auto [it, inserted] = memo_->tensors.emplace(key, out);
  return *it->second;
}

CharElem RepRing::multiply(const CharElem& a, const CharElem& b) const {
  CharElem out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      for (const auto& [z, cz] : tensor(x, y)) out[z] += cx * cy * cz;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

BigInt RepRing::n0(const IVec& a, const IVec& b, const IVec& c) const {
  require_dominant(wl_, c, "third weight");
  const auto& t = tensor(a, b);
  auto it = t.find(wl_.contragredient(c));
  return it == t.end() ? BigInt(0) : it->second;
}

}  // namespace satake
