/**
 *  Copyright 2026 The epsolve Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#pragma once

// Brute-force reference implementations. They work on raw order tables and
// share no code with the library beyond reading FinPoset::leq.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "epsolve/finposet.hpp"

namespace oracle {

using Table = std::vector<std::size_t>;

// Every function [0,n) -> [0,m), lexicographic.
inline std::vector<Table> all_tables(std::size_t n, std::size_t m) {
  std::vector<Table> out;
  if (m == 0 && n > 0) return out;
  Table t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && ++t[i - 1] == m) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline bool monotone(const epsolve::FinPoset& p, const epsolve::FinPoset& q, const Table& t) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !q.leq(t[x], t[y])) return false;
  return true;
}

inline std::vector<Table> monotone_tables(const epsolve::FinPoset& p, const epsolve::FinPoset& q) {
  std::vector<Table> out;
  for (auto& t : all_tables(p.size(), q.size()))
    if (monotone(p, q, t)) out.push_back(t);
  return out;
}

inline bool map_leq(const epsolve::FinPoset& q, const Table& f, const Table& g) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!q.leq(f[x], g[x])) return false;
  return true;
}

// The pair laws, straight from their definitions.
inline bool ep_laws(const epsolve::FinPoset& a, const epsolve::FinPoset& b, const Table& l, const Table& r) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (r[l[x]] != x) return false;
  for (std::size_t y = 0; y < b.size(); ++y)
    if (!b.leq(l[r[y]], y)) return false;
  return true;
}

inline bool adj_laws(const epsolve::FinPoset& a, const epsolve::FinPoset& b, const Table& l, const Table& r) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!a.leq(x, r[l[x]])) return false;
  for (std::size_t y = 0; y < b.size(); ++y)
    if (!b.leq(l[r[y]], y)) return false;
  return true;
}

// All (l, r) pairs of the kind, ordered by l then r.
inline std::vector<std::pair<Table, Table>> pairs(const epsolve::FinPoset& a, const epsolve::FinPoset& b,
                                                  bool ep) {
  std::vector<std::pair<Table, Table>> out;
  const auto ls = monotone_tables(a, b), rs = monotone_tables(b, a);
  for (const auto& l : ls)
    for (const auto& r : rs)
      if (ep ? ep_laws(a, b, l, r) : adj_laws(a, b, l, r)) out.emplace_back(l, r);
  return out;
}

// Order isomorphism by trying every permutation.
inline std::optional<Table> iso(const epsolve::FinPoset& p, const epsolve::FinPoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  Table perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x)
      for (std::size_t y = 0; y < p.size() && ok; ++y) ok = p.leq(x, y) == q.leq(perm[x], perm[y]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Number of partial orders on n points up to isomorphism, by enumerating
// every relation and taking the least relabelled bit pattern as the class.
inline std::size_t count_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<std::uint64_t> classes;
  std::vector<char> r(n * n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::fill(r.begin(), r.end(), 0);
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (bits >> k & 1) r[off[k].first * n + off[k].second] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i * n + j] && r[j * n + i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i * n + j] && r[j * n + k] && !r[i * n + k]) ok = false;
      }
    if (!ok) continue;
    Table perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) code = code << 1 | std::uint64_t(r[perm[i] * n + perm[j]]);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

// Least upper bound of a family of maps p -> q within the full hom-poset.
inline std::optional<Table> lub(const epsolve::FinPoset& p, const epsolve::FinPoset& q,
                                const std::vector<Table>& family) {
  std::vector<Table> upper;
  for (const auto& u : monotone_tables(p, q)) {
    bool above = true;
    for (const auto& f : family) above = above && map_leq(q, f, u);
    if (above) upper.push_back(u);
  }
  for (const auto& u : upper) {
    bool least = true;
    for (const auto& v : upper) least = least && map_leq(q, u, v);
    if (least) return u;
  }
  return std::nullopt;
}

}  // namespace oracle
