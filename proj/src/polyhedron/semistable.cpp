#include "satake/polyhedron/semistable.hpp"

#include "satake/core/error.hpp"

namespace satake {

namespace {

// n = s^2 f with f squarefree.
std::pair<BigInt, BigInt> split_square(BigInt n) {
  BigInt s = 1, f = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      f *= p;
    }
  }
  return {s, f * n};
}

}  // namespace

SurdSum::SurdSum(const Rational& r) {
  if (r != 0) terms_[1] = r;
}

SurdSum SurdSum::sqrt_times(const Rational& r, const Rational& x) {
  if (x < 0) throw DomainError("square root of a negative number");
  SurdSum out;
  if (r == 0 || x == 0) return out;
  // sqrt(a/b) = sqrt(a b) / b
  BigInt a = numerator(x), b = denominator(x);
  auto [s, f] = split_square(a * b);
  out.terms_[f] = r * Rational(s, b);
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [f, c] : o.terms_) {
    Rational& t = terms_[f];
    t += c;
    if (t == 0) terms_.erase(f);
  }
  return *this;
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& [f, c] : out.terms_) c = -c;
  return out;
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [f, c] : terms_) {
    std::string cs = satake::to_string(c);
    if (!s.empty() && c > 0) s += "+";
    if (f == 1) {
      s += cs;
      continue;
    }
    if (c == -1)
      s += "-";
    else if (c != 1)
      s += cs + "*";
    s += "sqrt(" + f.str() + ")";
  }
  return s;
}

namespace {

void check(const FlatConfiguration& c) {
  if (c.atoms.empty()) throw DomainError("empty configuration");
  size_t d = c.atoms[0].direction.size();
  for (const auto& a : c.atoms) {
    if (a.mass <= 0) throw DomainError("masses must be positive");
    if (a.direction.size() != d) throw DomainError("directions have different dimensions");
    if (is_zero(a.direction)) throw DomainError("direction must be nonzero");
  }
}

}  // namespace

std::vector<SurdSum> resultant(const FlatConfiguration& c) {
  check(c);
  size_t d = c.atoms[0].direction.size();
  std::vector<SurdSum> r(d);
  for (const auto& a : c.atoms) {
    Rational inv_norm2 = Rational(1) / dot(a.direction, a.direction);
    for (size_t k = 0; k < d; ++k) r[k] += SurdSum::sqrt_times(a.mass * a.direction[k], inv_norm2);
  }
  return r;
}

SurdSum slope(const FlatConfiguration& c, const RVec& eta) {
  check(c);
  if (eta.size() != c.atoms[0].direction.size() || is_zero(eta)) throw DomainError("bad direction eta");
  SurdSum s;
  Rational e2 = dot(eta, eta);
  for (const auto& a : c.atoms) {
    Rational ip = dot(a.direction, eta);
    s += SurdSum::sqrt_times(-a.mass * ip, Rational(1) / (dot(a.direction, a.direction) * e2));
  }
  return s;
}

bool flat_semistable(const FlatConfiguration& c) {
  for (const auto& x : resultant(c))
    if (!x.is_zero()) return false;
  return true;
}

namespace {

std::map<int64_t, Rational> merged(const Rank0Configuration& c) {
  if (c.atoms.empty()) throw DomainError("empty configuration");
  std::map<int64_t, Rational> m;
  for (const auto& [p, w] : c.atoms) {
    if (w <= 0) throw DomainError("masses must be positive");
    m[p] += w;
  }
  return m;
}

Rational total(const std::map<int64_t, Rational>& m) {
  Rational t(0);
  for (const auto& [p, w] : m) t += w;
  return t;
}

}  // namespace

bool rank0_stable(const Rank0Configuration& c) {
  auto m = merged(c);
  Rational half = total(m) / 2;
  for (const auto& [p, w] : m)
    if (w >= half) return false;
  return true;
}

bool rank0_semistable(const Rank0Configuration& c) {
  auto m = merged(c);
  Rational half = total(m) / 2;
  for (const auto& [p, w] : m)
    if (w > half) return false;
  return true;
}

bool rank0_nice_semistable(const Rank0Configuration& c) {
  if (rank0_stable(c)) return true;
  auto m = merged(c);
  return m.size() == 2 && m.begin()->second == std::next(m.begin())->second;
}

}  // namespace satake
