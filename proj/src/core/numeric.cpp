#include "satake/core/numeric.hpp"

#include "satake/core/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace satake {

namespace {

BigInt parse_bigint(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("empty number in '" + whole + "'");
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) throw ParseError("bad number '" + whole + "'");
  for (size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("bad number '" + whole + "'");
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt n = parse_bigint(trim(s.substr(0, slash)), raw);
    BigInt d = parse_bigint(trim(s.substr(slash + 1)), raw);
    if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) fp = "0";
    BigInt den = 1;
    for (size_t k = 0; k < fp.size(); ++k) den *= 10;
    BigInt a = parse_bigint(ip, raw);
    BigInt b = parse_bigint(fp, raw);
    if (neg) b = -b;
    return Rational(a * den + b, den);
  }
  return Rational(parse_bigint(s, raw));
}

std::string to_string(const BigInt& b) { return b.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

int64_t to_int64(const BigInt& b) {
  if (b > BigInt(INT64_MAX) || b < BigInt(INT64_MIN)) throw Error("integer overflow converting " + b.str());
  return static_cast<int64_t>(b);
}

int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
  return to_int64(numerator(r));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt r = a / g * b;
  return r < 0 ? BigInt(-r) : r;
}

int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

RVec to_rvec(const IVec& v) {
  RVec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(BigInt(x));
  return r;
}

RVec operator+(const RVec& a, const RVec& b) {
  RVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RVec operator-(const RVec& a, const RVec& b) {
  RVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RVec operator*(const Rational& s, const RVec& a) {
  RVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

IVec operator+(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec operator-(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec operator-(const IVec& a) {
  IVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

IVec operator*(int64_t s, const IVec& a) {
  IVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

RMat transpose(const RMat& m) {
  if (m.empty()) return {};
  RMat t(m[0].size(), RVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RMat identity_rmat(size_t n) {
  RMat m(n, RVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMat inverse(const RMat& m) {
  size_t n = m.size();
  RMat a = m, inv = identity_rmat(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RVec mat_vec(const RMat& m, const RVec& v) {
  RVec r(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

RMat mat_mul(const RMat& a, const RMat& b) {
  RMat bt = transpose(b);
  RMat r(a.size(), RVec(bt.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RMat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational piv = a[r][c];
    for (auto& x : a[r]) x /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank_of(const RMat& rows) {
  RMat a = rows;
  return rref(a).size();
}

bool solve_in_span(const std::vector<RVec>& cols, const RVec& target, RVec& x) {
  size_t k = cols.size(), n = target.size();
  RMat aug(n, RVec(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (cols[j].size() != n) throw DomainError("dimension mismatch");
      aug[i][j] = cols[j][i];
    }
    aug[i][k] = target[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return false;
  x.assign(k, Rational(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][k];
  return true;
}

std::vector<RVec> orthogonal_complement(const std::vector<RVec>& rows, size_t dim) {
  RMat a = rows;
  auto piv = rref(a);
  std::vector<bool> is_piv(dim, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<RVec> basis;
  for (size_t f = 0; f < dim; ++f) {
    if (is_piv[f]) continue;
    RVec v(dim, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

IMat hermite_normal_form(IMat rows) {
  if (rows.empty()) return rows;
  size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        int64_t f = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      for (size_t i = 0; i < r; ++i) {
        int64_t f = rows[i][c] / rows[r][c];
        if (rows[i][c] - f * rows[r][c] < 0) --f;
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

IVec hnf_reduce(const IMat& hnf, IVec v) {
  for (const auto& row : hnf) {
    size_t c = 0;
    while (row[c] == 0) ++c;
    int64_t f = v[c] / row[c];
    if (v[c] - f * row[c] < 0) --f;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

bool in_row_lattice(const IMat& hnf, const IVec& v) {
  IVec r = hnf_reduce(hnf, v);
  return std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; });
}

IMat integer_kernel(const std::vector<RVec>& rows) {
  // Scale to integers, then column-reduce the augmented matrix [M | I].
  size_t k = rows.size();
  if (k == 0) return {};
  size_t n = rows[0].size();
  BigInt den = 1;
  for (const auto& r : rows)
    for (const auto& x : r) den = lcm(den, denominator(x));
  IMat aug(k, IVec(n + k, 0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = to_int64(rows[i][j] * Rational(den));
    aug[i][n + i] = 1;
  }
  IMat h = hermite_normal_form(aug);
  IMat kernel;
  for (const auto& row : h) {
    bool zero = true;
    for (size_t j = 0; j < n; ++j)
      if (row[j] != 0) zero = false;
    if (zero) kernel.emplace_back(row.begin() + n, row.end());
  }
  return kernel;
}

std::string join_ints(const IVec& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace satake
