#include "satake/core/laurent.hpp"

#include "satake/core/error.hpp"

#include <cctype>
#include <sstream>

namespace satake {

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) coef_.push_back(c);
}

LaurentPoly LaurentPoly::monomial_v(int v_exp, const BigInt& c) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = v_exp;
  return p;
}

void LaurentPoly::normalize() {
  size_t a = 0;
  while (a < coef_.size() && coef_[a] == 0) ++a;
  if (a == coef_.size()) {
    coef_.clear();
    low_ = 0;
    return;
  }
  size_t b = coef_.size();
  while (coef_[b - 1] == 0) --b;
  if (a > 0 || b < coef_.size()) coef_ = std::vector<BigInt>(coef_.begin() + a, coef_.begin() + b);
  low_ += static_cast<int>(a);
}

BigInt LaurentPoly::coeff_v(int e) const {
  if (coef_.empty() || e < low_ || e > high_v()) return 0;
  return coef_[e - low_];
}

std::map<int, BigInt> LaurentPoly::terms_v() const {
  std::map<int, BigInt> t;
  for (size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0) t[low_ + static_cast<int>(i)] = coef_[i];
  return t;
}

Rational LaurentPoly::degree_q() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return Rational(high_v(), 2);
}

bool LaurentPoly::all_even() const {
  for (size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return false;
  return true;
}

bool LaurentPoly::is_polynomial_in_q() const { return is_zero() || (low_ >= 0 && all_even()); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high_v(), o.high_v());
  std::vector<BigInt> c(hi - lo + 1);
  for (size_t i = 0; i < coef_.size(); ++i) c[low_ - lo + i] = coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) c[o.low_ - lo + i] += o.coef_[i];
  coef_ = std::move(c);
  low_ = lo;
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.coef_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (size_t j = 0; j < b.coef_.size(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  r.low_ = a.low_ + b.low_;
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shift_v(int k) const {
  LaurentPoly r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.coef_.assign(coef_.rbegin(), coef_.rend());
  r.low_ = -high_v();
  return r;
}

Rational LaurentPoly::eval_q(const BigInt& q) const {
  if (!all_even()) throw DomainError("cannot evaluate at integer q: half-integral powers present");
  Rational s(0);
  for (const auto& [e, c] : terms_v()) {
    int k = e / 2;
    BigInt p = boost::multiprecision::pow(q, static_cast<unsigned>(k < 0 ? -k : k));
    s += k >= 0 ? Rational(c * p) : Rational(c) / Rational(p);
  }
  return s;
}

BigInt LaurentPoly::eval_v(const BigInt& v) const {
  if (!is_zero() && low_ < 0) throw DomainError("negative exponent in integer evaluation");
  BigInt s = 0;
  for (size_t i = coef_.size(); i-- > 0;) s = s * v + coef_[i];
  if (!is_zero()) s *= boost::multiprecision::pow(v, static_cast<unsigned>(low_));
  return s;
}

namespace {

std::string power_text(int v_exp) {
  if (v_exp % 2 == 0) {
    int e = v_exp / 2;
    if (e == 1) return "q";
    if (e >= 0) return "q^" + std::to_string(e);
    return "q^(" + std::to_string(e) + ")";
  }
  return "q^(" + std::to_string(v_exp) + "/2)";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_v()) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << power_text(e);
  }
  return os.str();
}

std::string LaurentPoly::to_json_sparse() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [e, c] : terms_v()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << e << "\":" << c;
  }
  os << "}";
  return os.str();
}

LaurentPoly LaurentPoly::from_sparse(const std::map<int, BigInt>& t) {
  LaurentPoly r;
  for (const auto& [e, c] : t) r += monomial_v(e, c);
  return r;
}

namespace {

struct PolyParser {
  std::string s;
  size_t i = 0;
  const std::string& whole;

  PolyParser(std::string text, const std::string& w) : s(std::move(text)), whole(w) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + whole + "': " + what);
  }
  bool at_end() const { return i >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[i]; }

  BigInt read_uint() {
    size_t a = i;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (a == i) fail("expected a number");
    return BigInt(s.substr(a, i - a));
  }

  // Exponent in units of the variable; returns a rational numerator/denominator pair.
  Rational read_exponent() {
    char open = peek();
    char close = open == '(' ? ')' : open == '{' ? '}' : '\0';
    if (close) ++i;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    BigInt n = read_uint();
    BigInt d = 1;
    if (peek() == '/') {
      if (!close) fail("fractional exponent needs brackets");
      ++i;
      d = read_uint();
      if (d == 0) fail("zero denominator");
    }
    if (close) {
      if (peek() != close) fail("unbalanced exponent bracket");
      ++i;
    }
    return Rational(neg ? BigInt(-n) : n, d);
  }

  LaurentPoly parse() {
    LaurentPoly out;
    if (at_end()) fail("empty");
    bool any = false;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i;
      } else if (any) {
        fail("expected + or - between terms");
      }
      BigInt c = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = read_uint();
        have_coef = true;
      }
      if (peek() == '*') {
        if (!have_coef) fail("dangling '*'");
        ++i;
      }
      int v_exp = 0;
      if (peek() == 'q' || peek() == 'v') {
        bool is_v = peek() == 'v';
        ++i;
        Rational e(1);
        if (peek() == '^') {
          ++i;
          e = read_exponent();
        }
        Rational ve = is_v ? e : e * 2;
        if (!is_integer(ve)) fail("exponent must be a multiple of 1/2");
        v_exp = static_cast<int>(to_int64(ve));
      } else if (!have_coef) {
        fail("expected a term");
      }
      out += LaurentPoly::monomial_v(v_exp, sign * c);
      any = true;
    }
    return out;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  PolyParser p(compact, text);
  return p.parse();
}

}  // namespace satake
