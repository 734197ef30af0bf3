#include "satake/repring/littlewood_richardson.hpp"

#include "satake/core/error.hpp"

#include <functional>

namespace satake {

bool is_partition(const IVec& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

IVec partition_to_labels(const IVec& p) {
  IVec l;
  for (size_t i = 0; i + 1 < p.size(); ++i) l.push_back(p[i] - p[i + 1]);
  return l;
}

IVec labels_to_partition(const IVec& labels) {
  IVec p(labels.size() + 1, 0);
  for (size_t i = labels.size(); i-- > 0;) p[i] = p[i + 1] + labels[i];
  return p;
}

namespace {

// Number of LR fillings of nu/alpha with content beta.
int64_t count_fillings(const IVec& nu, const IVec& alpha, const IVec& beta) {
  size_t n = nu.size();
  // Cells in reading order: rows top to bottom, each right to left.
  std::vector<std::pair<size_t, int64_t>> cells;
  for (size_t r = 0; r < n; ++r)
    for (int64_t c = nu[r] - 1; c >= alpha[r]; --c) cells.emplace_back(r, c);
  std::vector<IVec> grid(n);
  for (size_t r = 0; r < n; ++r) grid[r].assign(nu[r], 0);
  IVec used(beta.size(), 0);
  int64_t count = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (size_t v = 0; v < beta.size(); ++v) {
      if (used[v] == beta[v]) continue;
      // lattice word: after placing v+1, count(v+1) <= count(v)
      if (v > 0 && used[v] + 1 > used[v - 1]) continue;
      int64_t val = static_cast<int64_t>(v) + 1;
      if (c + 1 < nu[r] && grid[r][c + 1] != 0 && val > grid[r][c + 1]) continue;  // weak rows
      if (r > 0 && c < nu[r - 1] && c >= alpha[r - 1] && grid[r - 1][c] >= val) continue;  // strict columns
      grid[r][c] = val;
      ++used[v];
      rec(k + 1);
      --used[v];
      grid[r][c] = 0;
    }
  };
  rec(0);
  return count;
}

void partitions_containing(const IVec& alpha, int64_t extra, size_t row, IVec& cur, std::vector<IVec>& out) {
  size_t n = alpha.size();
  if (row == n) {
    if (extra == 0) out.push_back(cur);
    return;
  }
  int64_t cap = row == 0 ? alpha[0] + extra : cur[row - 1];
  for (int64_t v = alpha[row]; v <= cap && v - alpha[row] <= extra; ++v) {
    cur[row] = v;
    partitions_containing(alpha, extra - (v - alpha[row]), row + 1, cur, out);
  }
}

}  // namespace

std::map<IVec, BigInt> lr_type_a(const IVec& alpha_in, const IVec& beta_in) {
  if (!is_partition(alpha_in)) throw DomainError("not a partition: (" + join_ints(alpha_in) + ")");
  if (!is_partition(beta_in)) throw DomainError("not a partition: (" + join_ints(beta_in) + ")");
  size_t n = std::max(alpha_in.size(), beta_in.size());
  IVec alpha = alpha_in, beta = beta_in;
  alpha.resize(n, 0);
  beta.resize(n, 0);
  while (!beta.empty() && beta.back() == 0) beta.pop_back();
  int64_t extra = 0;
  for (auto b : beta) extra += b;
  std::vector<IVec> shapes;
  IVec cur(n, 0);
  partitions_containing(alpha, extra, 0, cur, shapes);
  std::map<IVec, BigInt> out;
  for (const auto& nu : shapes) {
    int64_t c = count_fillings(nu, alpha, beta);
    if (c) out[nu] = c;
  }
  return out;
}

}  // namespace satake
