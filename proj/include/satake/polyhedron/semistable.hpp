#pragma once

#include "satake/core/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace satake {

// Exact element of Q(sqrt 2, sqrt 3, ...): sum of c_f sqrt(f), f squarefree.
class SurdSum {
 public:
  SurdSum() = default;
  explicit SurdSum(const Rational& r);
  // r * sqrt(x) for rational x >= 0.
  static SurdSum sqrt_times(const Rational& r, const Rational& x);

  SurdSum& operator+=(const SurdSum& o);
  SurdSum operator-() const;
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
  const std::map<BigInt, Rational>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  std::map<BigInt, Rational> terms_;  // squarefree radicand -> coefficient
};

struct Atom {
  Rational mass;
  RVec direction;  // nonzero; only its direction matters
};

// Finite weighted configuration on the unit sphere of one Euclidean apartment.
struct FlatConfiguration {
  std::vector<Atom> atoms;
};

// sum m_i xi_i / |xi_i|, coordinatewise.
std::vector<SurdSum> resultant(const FlatConfiguration& c);
// -sum m_i cos angle(xi_i, eta).
SurdSum slope(const FlatConfiguration& c, const RVec& eta);
// On a round sphere a measure is semistable iff its resultant vanishes.
bool flat_semistable(const FlatConfiguration& c);

// Rank-0 building: atoms are masses placed on abstract points.
struct Rank0Configuration {
  std::vector<std::pair<int64_t, Rational>> atoms;  // (point, mass)
};

bool rank0_stable(const Rank0Configuration& c);
bool rank0_semistable(const Rank0Configuration& c);
bool rank0_nice_semistable(const Rank0Configuration& c);

}  // namespace satake
