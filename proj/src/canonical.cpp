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
// Canonical labelling of finite posets by individualization-refinement with
// automorphism pruning. Exact; intended for posets of up to a few hundred
// elements with modest symmetry.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "epsolve/finposet.hpp"

namespace epsolve {

namespace {

using Coloring = std::vector<std::size_t>;

std::size_t count_colors(const Coloring& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Ranks arbitrary signatures into dense colors, preserving signature order.
template <typename Sig>
Coloring rank_signatures(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(sigs.size());
  for (std::size_t x = 0; x < sigs.size(); ++x) {
    out[x] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), sigs[x]) - sorted.begin());
  }
  return out;
}

Coloring initial_coloring(const FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::array<std::size_t, 3>> sigs(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t down = 0, up = 0;
    for (std::size_t y = 0; y < n; ++y) {
      down += p.leq(y, x);
      up += p.leq(x, y);
    }
    sigs[x] = {p.bottom() == x ? 0u : 1u, down, up};
  }
  return rank_signatures(sigs);
}

// Equitable refinement: split cells by the color histograms of strict lower
// and strict upper neighbours until stable. The old color is the leading
// component, so the result refines the input as an ordered partition.
Coloring refine(const FinPoset& p, Coloring col) {
  const std::size_t n = p.size();
  std::size_t k = count_colors(col);
  while (true) {
    std::vector<std::vector<std::size_t>> sigs(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t>& s = sigs[x];
      s.assign(1 + 2 * k, 0);
      s[0] = col[x];
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (p.leq(y, x)) ++s[1 + col[y]];
        if (p.leq(x, y)) ++s[1 + k + col[y]];
      }
    }
    Coloring next = rank_signatures(sigs);
    std::size_t nk = count_colors(next);
    col = std::move(next);
    if (nk == k) return col;
    k = nk;
  }
}

std::string certificate(const FinPoset& p, const std::vector<std::size_t>& order) {
  static const char* hex = "0123456789abcdef";
  const std::size_t n = p.size();
  std::string cert = "P" + std::to_string(n);
  if (auto b = p.bottom()) {
    auto pos = std::find(order.begin(), order.end(), *b) - order.begin();
    cert += "b" + std::to_string(pos);
  } else {
    cert += "u";
  }
  cert += ":";
  unsigned nibble = 0;
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      nibble = (nibble << 1) | (p.leq(order[i], order[j]) ? 1u : 0u);
      if (++bits == 4) {
        cert.push_back(hex[nibble]);
        nibble = 0;
        bits = 0;
      }
    }
  }
  if (bits) cert.push_back(hex[nibble << (4 - bits)]);
  return cert;
}

struct Labeling {
  std::vector<std::size_t> order;  // order[pos] = element
  std::string cert;
};

class Canonizer {
 public:
  explicit Canonizer(const FinPoset& p) : p_(p) {}

  Labeling run() {
    std::vector<std::size_t> prefix;
    search(initial_coloring(p_), prefix);
    return {best_order_, best_cert_};
  }

 private:
  void search(Coloring col, std::vector<std::size_t>& prefix) {
    col = refine(p_, std::move(col));
    const std::size_t n = p_.size();
    const std::size_t k = count_colors(col);
    if (k == n) {
      std::vector<std::size_t> order(n);
      for (std::size_t x = 0; x < n; ++x) order[col[x]] = x;
      std::string cert = certificate(p_, order);
      if (!have_best_ || cert > best_cert_) {
        best_cert_ = std::move(cert);
        best_order_ = std::move(order);
        have_best_ = true;
      } else if (cert == best_cert_) {
        std::vector<std::size_t> gamma(n);
        for (std::size_t i = 0; i < n; ++i) gamma[best_order_[i]] = order[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<std::size_t> size(k, 0);
    for (std::size_t c : col) ++size[c];
    std::size_t target = 0;
    while (size[target] < 2) ++target;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x) {
      if (col[x] == target) members.push_back(x);
    }
    std::vector<std::size_t> explored;
    for (std::size_t w : members) {
      if (!explored.empty() && in_explored_orbit(w, explored, prefix)) continue;
      Coloring child = col;
      for (std::size_t y = 0; y < n; ++y) {
        if (child[y] > target || (child[y] == target && y != w)) ++child[y];
      }
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  bool in_explored_orbit(std::size_t w, const std::vector<std::size_t>& explored,
                         const std::vector<std::size_t>& prefix) const {
    const std::size_t n = p_.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](std::size_t v) { return g[v] == v; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n; ++x) parent[root(x)] = root(g[x]);
    }
    for (std::size_t u : explored) {
      if (root(u) == root(w)) return true;
    }
    return false;
  }

  const FinPoset& p_;
  bool have_best_ = false;
  std::string best_cert_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

}  // namespace

std::string canonical_form(const FinPoset& p) { return Canonizer(p).run().cert; }

std::optional<std::vector<std::size_t>> iso_check(const FinPoset& p, const FinPoset& q) {
  if (p.size() != q.size() || p.pointed() != q.pointed()) return std::nullopt;
  Labeling lp = Canonizer(p).run();
  Labeling lq = Canonizer(q).run();
  if (lp.cert != lq.cert) return std::nullopt;
  std::vector<std::size_t> iso(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) iso[lp.order[i]] = lq.order[i];
  return iso;
}

std::vector<PosetRef> posets_up_to_iso(std::size_t max_n) {
  auto make = [](std::size_t n, const std::vector<std::uint8_t>& leq) {
    PosetBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b.add_name("x" + std::to_string(i));
      bool least = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i * n + j]) b.set_leq(i, j);
        least = least && leq[i * n + j];
      }
      if (least) b.set_bottom(i);
    }
    return b.finish();
  };

  std::vector<PosetRef> all;
  std::vector<std::vector<std::uint8_t>> level{{}};  // order tables of size n
  all.push_back(make(0, {}));
  for (std::size_t n = 0; n < max_n; ++n) {
    std::map<std::string, std::vector<std::uint8_t>> next;
    for (const auto& leq : level) {
      // New maximal element n placed above a down-closed subset.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool down_closed = true;
        for (std::size_t i = 0; i < n && down_closed; ++i) {
          if (!(mask >> i & 1)) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (leq[j * n + i] && !(mask >> j & 1)) {
              down_closed = false;
              break;
            }
          }
        }
        if (!down_closed) continue;
        const std::size_t m = n + 1;
        std::vector<std::uint8_t> big(m * m, 0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) big[i * m + j] = leq[i * n + j];
          big[i * m + n] = (mask >> i & 1) ? 1 : 0;
        }
        big[n * m + n] = 1;
        PosetRef p = make(m, big);
        next.emplace(canonical_form(*p), std::move(big));
      }
    }
    level.clear();
    for (auto& [cert, leq] : next) {
      all.push_back(make(n + 1, leq));
      level.push_back(std::move(leq));
    }
  }
  return all;
}

}  // namespace epsolve
