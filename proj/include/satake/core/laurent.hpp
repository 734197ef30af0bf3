#pragma once

#include "satake/core/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace satake {

// Laurent polynomial in v = q^{1/2} with arbitrary-precision coefficients.
// Stored densely from exponent low_ upward; canonical form has nonzero end
// coefficients (the zero polynomial has an empty coefficient vector).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const BigInt& c);
  static LaurentPoly monomial_v(int v_exp, const BigInt& c = 1);
  static LaurentPoly monomial_q(int q_exp, const BigInt& c = 1) { return monomial_v(2 * q_exp, c); }
  static LaurentPoly q() { return monomial_q(1); }

  bool is_zero() const { return coef_.empty(); }
  int low_v() const { return low_; }
  int high_v() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  BigInt coeff_v(int e) const;
  BigInt coeff_q(int e) const { return coeff_v(2 * e); }
  std::map<int, BigInt> terms_v() const;

  // Degree in q: (max v-exponent)/2. Undefined for zero.
  Rational degree_q() const;
  bool is_polynomial_in_q() const;  // even nonnegative v-exponents only
  bool all_even() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coef_ == o.coef_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shift_v(int k) const;
  LaurentPoly shift_q(int k) const { return shift_v(2 * k); }
  // f(q) -> f(q^{-1})
  LaurentPoly invert_variable() const;

  Rational eval_q(const BigInt& q) const;  // requires even exponents
  BigInt eval_v(const BigInt& v) const;    // requires nonnegative exponents

  std::string to_string() const;  // lowest degree first, e.g. "-q+q^5"
  std::string to_json_sparse() const;  // {"-2":1,"0":3} over v-exponents
  static LaurentPoly parse(const std::string& s);
  static LaurentPoly from_sparse(const std::map<int, BigInt>& t);

 private:
  void normalize();
  int low_ = 0;
  std::vector<BigInt> coef_;
};

}  // namespace satake
