#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace satake {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using RVec = std::vector<Rational>;
using IVec = std::vector<int64_t>;
using RMat = std::vector<RVec>;
using IMat = std::vector<IVec>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const BigInt& b);

bool is_integer(const Rational& r);
int64_t to_int64(const BigInt& b);
int64_t to_int64(const Rational& r);  // throws unless integral

BigInt lcm(const BigInt& a, const BigInt& b);
int64_t lcm64(int64_t a, int64_t b);

RVec to_rvec(const IVec& v);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator*(const Rational& s, const RVec& a);
Rational dot(const RVec& a, const RVec& b);
bool is_zero(const RVec& v);

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator-(const IVec& a);
IVec operator*(int64_t s, const IVec& a);

// Exact Gaussian elimination helpers.
RMat transpose(const RMat& m);
RMat identity_rmat(size_t n);
RMat inverse(const RMat& m);  // throws DomainError if singular
RVec mat_vec(const RMat& m, const RVec& v);
RMat mat_mul(const RMat& a, const RMat& b);
size_t rank_of(const RMat& rows);
// Solve x such that sum_k x_k * cols[k] = target (cols linearly independent);
// returns false when target is outside their span.
bool solve_in_span(const std::vector<RVec>& cols, const RVec& target, RVec& x);
// Rational basis of the orthogonal complement of the span of rows.
std::vector<RVec> orthogonal_complement(const std::vector<RVec>& rows, size_t dim);

// Integer lattice utilities (row-style Hermite normal form).
IMat hermite_normal_form(IMat rows);  // nonzero rows only, echelon, positive pivots
IVec hnf_reduce(const IMat& hnf, IVec v);  // canonical coset representative
bool in_row_lattice(const IMat& hnf, const IVec& v);
// Integer relations n with sum_k n_k rows[k] = 0, as a basis.
IMat integer_kernel(const std::vector<RVec>& rows);

std::string join_ints(const IVec& v, const char* sep = ",");

}  // namespace satake
