#pragma once

// Sparse Gaussian elimination kernel shared by the prime and rational paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tatehh/field.hpp"

namespace tatehh::detail {

struct PrimeOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  bool is_zero(Value v) const { return v == 0; }
  Value inv(Value v) const { return modp::inv(v, p); }
  Value mul(Value a, Value b) const { return modp::mul(a, b, p); }
  // a - f * b
  Value axpy(const Value& a, const Value& f, const Value& b) const { return modp::sub(a, modp::mul(f, b, p), p); }
  Value neg_mul(const Value& f, const Value& b) const { return modp::sub(0, modp::mul(f, b, p), p); }
};

struct RationalOps {
  using Value = mpq_class;

  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value inv(const Value& v) const {
    Value r = 1 / v;
    r.canonicalize();
    return r;
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value axpy(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
  Value neg_mul(const Value& f, const Value& b) const { return -(f * b); }
};

template <class V>
using SparseRow = std::vector<std::pair<std::uint32_t, V>>;

/// Rank of the matrix whose rows are `rows` (entries sorted by column, no
/// zeros) over `ncols` columns. Pivot rows are taken shortest first and the
/// pivot column inside a row is the one touching the fewest rows, ties broken
/// by index, which keeps fill low and makes the run deterministic.
template <class Ops>
std::size_t eliminate_rank(std::vector<SparseRow<typename Ops::Value>> rows, std::size_t ncols, const Ops& ops) {
  using V = typename Ops::Value;
  const std::size_t nrows = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::set<std::pair<std::size_t, std::size_t>> queue;
  std::vector<char> done(nrows, 0);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(static_cast<std::uint32_t>(r));
    queue.emplace(rows[r].size(), r);
  }

  auto find_col = [](const SparseRow<V>& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& entry, std::uint32_t key) { return entry.first < key; });
    return (it != row.end() && it->first == c) ? it : row.end();
  };

  std::size_t rank = 0;
  SparseRow<V> merged;
  while (!queue.empty()) {
    const std::size_t r = queue.begin()->second;
    queue.erase(queue.begin());
    done[r] = 1;
    SparseRow<V>& pivot_row = rows[r];
    if (pivot_row.empty()) continue;

    std::uint32_t pivot_col = pivot_row.front().first;
    std::size_t best = col_rows[pivot_col].size();
    const V* pivot_val = &pivot_row.front().second;
    for (const auto& entry : pivot_row) {
      const std::size_t count = col_rows[entry.first].size();
      if (count < best) {
        best = count;
        pivot_col = entry.first;
        pivot_val = &entry.second;
      }
    }
    ++rank;
    const V pivot_inv = ops.inv(*pivot_val);

    std::vector<std::uint32_t> targets;
    targets.swap(col_rows[pivot_col]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t j : targets) {
      if (done[j]) continue;
      SparseRow<V>& row = rows[j];
      auto hit = find_col(row, pivot_col);
      if (hit == row.end()) continue;
      const V factor = ops.mul(hit->second, pivot_inv);
      queue.erase({row.size(), j});

      merged.clear();
      merged.reserve(row.size() + pivot_row.size());
      auto a = row.begin();
      auto b = pivot_row.begin();
      while (a != row.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(std::move(*a));
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, ops.neg_mul(factor, b->second));
          col_rows[b->first].push_back(j);
          ++b;
        } else {
          V v = ops.axpy(a->second, factor, b->second);
          if (!ops.is_zero(v)) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      row.swap(merged);
      queue.emplace(row.size(), j);
    }
    pivot_row.clear();
    pivot_row.shrink_to_fit();
  }
  return rank;
}

}  // namespace tatehh::detail
