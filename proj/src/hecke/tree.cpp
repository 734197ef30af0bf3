#include "satake/hecke/tree.hpp"

#include "satake/core/error.hpp"

#include <functional>

namespace satake {

namespace {

// A vertex is its non-backtracking path from o: the first step picks one of
// q+1 neighbours, later steps one of the q neighbours away from the parent.
using Path = std::vector<int>;

std::vector<Path> sphere(int64_t q, int64_t r) {
  std::vector<Path> out;
  Path p;
  std::function<void()> rec = [&]() {
    if (static_cast<int64_t>(p.size()) == r) {
      out.push_back(p);
      return;
    }
    int64_t branch = p.empty() ? q + 1 : q;
    for (int64_t i = 0; i < branch; ++i) {
      p.push_back(static_cast<int>(i));
      rec();
      p.pop_back();
    }
  };
  rec();
  return out;
}

int64_t distance(const Path& x, const Path& y) {
  size_t k = 0;
  while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
  return static_cast<int64_t>(x.size() + y.size() - 2 * k);
}

void check_args(int64_t q, std::initializer_list<int64_t> lens) {
  if (q < 2) throw DomainError("tree parameter q must be at least 2");
  for (auto l : lens)
    if (l < 0) throw DomainError("side lengths must be nonnegative");
}

}  // namespace

BigInt tree_sphere_size(int64_t q, int64_t r) {
  check_args(q, {r});
  return BigInt(sphere(q, r).size());
}

BigInt tree_triangle_count(int64_t q, int64_t a, int64_t b, int64_t c) {
  check_args(q, {a, b, c});
  auto xs = sphere(q, a);
  auto ys = sphere(q, c);
  BigInt n = 0;
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (distance(x, y) == b) ++n;
  return n;
}

}  // namespace satake
