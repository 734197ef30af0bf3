#include "satake/rootdata/alcove.hpp"

#include "satake/core/error.hpp"

namespace satake {

AlcoveFrame::AlcoveFrame(const RootSystem& rs, size_t component) {
  const auto& t = rs.components().at(component);
  n_ = t.rank;
  m_ = rs.theta_coeffs(component);
  const auto& a = rs.cartan();
  coroot_labels_.assign(n_, IVec(n_));
  for (size_t j = 0; j < n_; ++j)
    for (size_t i = 0; i < n_; ++i) coroot_labels_[j][i] = a[t.first + i][t.first + j];
  RVec tc = rs.coweight_labels(rs.theta_coroot(component));
  theta_check_labels_.assign(tc.begin() + t.first, tc.begin() + t.first + t.rank);
}

Rational AlcoveFrame::theta_value(const RVec& x) const {
  Rational s(0);
  for (size_t i = 0; i < n_; ++i) s += Rational(BigInt(m_[i])) * x[i];
  return s;
}

bool AlcoveFrame::in_alcove(const RVec& x) const {
  for (const auto& c : x)
    if (c < 0) return false;
  return theta_value(x) <= 1;
}

RVec AlcoveFrame::reflect(int j, const RVec& x) const {
  RVec y = x;
  if (j == 0) {
    Rational f = theta_value(x) - 1;
    for (size_t i = 0; i < n_; ++i) y[i] -= f * theta_check_labels_[i];
    return y;
  }
  Rational f = x[j - 1];
  for (size_t i = 0; i < n_; ++i) y[i] -= f * Rational(BigInt(coroot_labels_[j - 1][i]));
  return y;
}

AlcoveFrame::Reduced AlcoveFrame::reduce(RVec x) const {
  Reduced r;
  while (true) {
    int j = -1;
    for (size_t i = 0; i < n_; ++i)
      if (x[i] < 0) {
        j = static_cast<int>(i) + 1;
        break;
      }
    if (j < 0 && theta_value(x) > 1) j = 0;
    if (j < 0) break;
    x = reflect(j, x);
    r.word.push_back(j);
  }
  r.point = x;
  return r;
}

std::vector<RVec> AlcoveFrame::vertices() const {
  std::vector<RVec> v{RVec(n_, Rational(0))};
  for (size_t i = 0; i < n_; ++i) {
    RVec x(n_, Rational(0));
    x[i] = Rational(1, m_[i]);
    v.push_back(x);
  }
  return v;
}

AlcoveReduction alcove_reduce(const RootSystem& rs, const RVec& p) {
  if (!rs.irreducible()) throw DomainError("alcove reduction needs an irreducible root system, got " + rs.label());
  AlcoveFrame f(rs, 0);
  auto red = f.reduce(rs.coweight_labels(p));
  AlcoveReduction out;
  out.point = rs.coweight_from_labels(red.point) + rs.central_part(p);
  out.word = red.word;
  return out;
}

}  // namespace satake
