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
#include "epsolve/opairs.hpp"


#include "epsolve/memo.hpp"

namespace epsolve {

const char* kind_name(PairKind k) noexcept { return k == PairKind::EP ? "EP" : "ADJ"; }

PairKind parse_kind(std::string_view s) {
  if (s == "EP") return PairKind::EP;
  if (s == "ADJ") return PairKind::ADJ;
  throw Error(Errc::invalid_input, "pair kind must be EP or ADJ, got '" + std::string(s) + "'");
}

namespace {

void check_opposed(const MonotoneMap& l, const MonotoneMap& r) {
  if (!same_poset(l.dom(), r.cod()) || !same_poset(l.cod(), r.dom())) {
    throw Error(Errc::shape_mismatch, "pair components must run A -> B and B -> A");
  }
}

bool is_identity_table(const MonotoneMap& f) {
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (f(x) != x) return false;
  }
  return true;
}

// l . r <= id_B
bool deflationary_lr(const MonotoneMap& l, const MonotoneMap& r) {
  const auto& b = *l.cod();
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (!b.leq(l(r(y)), y)) return false;
  }
  return true;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// join[x * n + y] is the least upper bound of x and y, or kNone.
std::vector<std::size_t> join_table(const FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> join(n * n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!p.leq(x, z) || !p.leq(y, z)) continue;
        bool least = true;
        for (std::size_t w = 0; w < n && least; ++w) {
          least = !(p.leq(x, w) && p.leq(y, w)) || p.leq(z, w);
        }
        if (least) {
          join[x * n + y] = z;
          break;
        }
      }
    }
  }
  return join;
}

// Calls emit(table) for monotone maps a -> b that can be the left half of a
// pair of the given kind. Pruning is by necessary conditions only: a left
// adjoint preserves every join that exists (the least element included), and
// an embedding is order-reflecting.
template <class Emit>
void for_each_left_candidate(const FinPoset& a, const FinPoset& b, PairKind kind,
                             const std::vector<std::optional<std::size_t>>* fixed, Emit emit) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> t(n, 0);
  if (n == 0) {
    emit(t);
    return;
  }
  const auto a_least = a.least();
  const auto b_least = b.least();
  if (a_least && !b_least) return;
  const std::vector<std::size_t> join_a = join_table(a), join_b = join_table(b);
  // Join constraints, each checked once its last element is assigned.
  struct JoinCheck {
    std::size_t x, y, j;
  };
  std::vector<std::vector<JoinCheck>> checks(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::size_t j = join_a[x * n + y];
      if (j != kNone) checks[std::max({x, y, j})].push_back({x, y, j});
    }
  }
  auto fits = [&](std::size_t x, std::size_t v) {
    if (fixed && (*fixed)[x] && *(*fixed)[x] != v) return false;
    if (a_least && x == *a_least && v != *b_least) return false;
    for (std::size_t y = 0; y < x; ++y) {
      const bool ay_x = a.leq(y, x), ax_y = a.leq(x, y);
      const bool by_v = b.leq(t[y], v), bv_y = b.leq(v, t[y]);
      if ((ay_x && !by_v) || (ax_y && !bv_y)) return false;
      if (kind == PairKind::EP && ((by_v && !ay_x) || (bv_y && !ax_y))) return false;
    }
    t[x] = v;
    for (const auto& c : checks[x]) {
      if (join_b[t[c.x] * m + t[c.y]] != t[c.j]) return false;
    }
    return true;
  };
  std::vector<std::size_t> next(n, 0);
  std::size_t x = 0;
  while (true) {
    bool placed = false;
    while (next[x] < m) {
      if (fits(x, next[x]++)) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      next[x] = 0;
      if (x == 0) break;
      --x;
      continue;
    }
    if (x + 1 == n) {
      emit(t);
    } else {
      ++x;
    }
  }
}

std::vector<PairHom> search_pairs(const PosetRef& a, const PosetRef& b, PairKind kind,
                                  const std::vector<std::optional<std::size_t>>* fixed) {
  std::vector<PairHom> out;
  // r is forced by l: r(y) = max{x : l(x) <= y}, when every such set has
  // one. Candidates are screened on raw tables before any pair is built.
  const std::size_t n = a->size(), m = b->size();
  std::vector<std::size_t> r(m);
  for_each_left_candidate(*a, *b, kind, fixed, [&](const std::vector<std::size_t>& l) {
    for (std::size_t y = 0; y < m; ++y) {
      r[y] = kNone;
      for (std::size_t x = 0; x < n && r[y] == kNone; ++x) {
        if (!b->leq(l[x], y)) continue;
        bool greatest = true;
        for (std::size_t s = 0; s < n && greatest; ++s) greatest = !b->leq(l[s], y) || a->leq(s, x);
        if (greatest) r[y] = x;
      }
      if (r[y] == kNone) return;
    }
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (b->leq(y, z) && !a->leq(r[y], r[z])) return;
      }
    }
    MonotoneMap lm(a, b, l), rm(b, a, r);
    if (satisfies(kind, lm, rm)) out.push_back(PairHom::from_monotone(kind, std::move(lm), std::move(rm)));
  });
  return out;
}

void check_hom_cap(const PosetRef& a, const PosetRef& b, const Caps& caps) {
  if (a->size() * b->size() > caps.hom) {
    throw Error(Errc::cap_exceeded,
                "pair enumeration " + std::to_string(a->size()) + "x" + std::to_string(b->size()) +
                    " exceeds hom cap " + std::to_string(caps.hom),
                {{"construction", "enumerate_pairs"}, {"cap", caps.hom}});
  }
}

}  // namespace

bool is_ep_pair(const MonotoneMap& l, const MonotoneMap& r) {
  check_opposed(l, r);
  return is_identity_table(compose(r, l)) && deflationary_lr(l, r);
}

bool is_adjoint_pair(const MonotoneMap& l, const MonotoneMap& r) {
  check_opposed(l, r);
  const auto& a = *l.dom();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a.leq(x, r(l(x)))) return false;
  }
  return deflationary_lr(l, r);
}

bool satisfies(PairKind kind, const MonotoneMap& l, const MonotoneMap& r) {
  return kind == PairKind::EP ? is_ep_pair(l, r) : is_adjoint_pair(l, r);
}

PairHom::PairHom(PairKind kind, MonotoneMap l, MonotoneMap r)
    : kind_(kind), l_(std::move(l)), r_(std::move(r)) {
  if (!is_monotone(l_) || !is_monotone(r_)) {
    throw Error(Errc::invariant_violation, "pair components must be monotone");
  }
  if (!satisfies(kind_, l_, r_)) {
    throw Error(Errc::invariant_violation,
                std::string("components do not form an ") + kind_name(kind_) + " pair",
                {{"kind", kind_name(kind_)}});
  }
}

PairHom PairHom::from_monotone(PairKind kind, MonotoneMap l, MonotoneMap r) {
  if (!satisfies(kind, l, r)) {
    throw Error(Errc::invariant_violation,
                std::string("components do not form an ") + kind_name(kind) + " pair",
                {{"kind", kind_name(kind)}});
  }
  return PairHom(Unchecked{}, kind, std::move(l), std::move(r));
}

PairHom pair_compose(const PairHom& g, const PairHom& f) {
  if (g.kind() != f.kind()) throw Error(Errc::shape_mismatch, "pair_compose: kinds differ");
  // Monotonicity and the laws of both kinds are closed under composition.
  return PairHom(PairHom::Unchecked{}, f.kind(), compose(g.l(), f.l()), compose(f.r(), g.r()));
}

PairHom pair_identity(const PosetRef& p, PairKind kind) {
  return PairHom(PairHom::Unchecked{}, kind, identity(p), identity(p));
}

bool pair_leq(const PairHom& f, const PairHom& g) {
  if (f.kind() != g.kind()) throw Error(Errc::shape_mismatch, "pair_leq: kinds differ");
  return leq_map(f.l(), g.l()) && leq_map(f.r(), g.r());
}

bool is_iso(const PairHom& f) {
  return is_identity_table(compose(f.r(), f.l())) && is_identity_table(compose(f.l(), f.r()));
}

std::vector<PairHom> enumerate_pairs(const PosetRef& a, const PosetRef& b, PairKind kind,
                                     const Caps& caps) {
  check_hom_cap(a, b, caps);
  // Pair sets are pure in (a, b, kind) and recur across chains sharing objects.
  static detail::IdentityMemo<std::shared_ptr<const std::vector<PairHom>>> memo;
  const int tag = static_cast<int>(kind);
  if (auto hit = memo.find(tag, a, b)) return **hit;
  std::vector<PairHom> out = search_pairs(a, b, kind, nullptr);
  memo.put(tag, a, b, std::make_shared<const std::vector<PairHom>>(out),
           out.size() * (8 * (a->size() + b->size()) + 160) + 64);
  return out;
}

std::vector<PairHom> enumerate_pairs_fixing(const PosetRef& a, const PosetRef& b, PairKind kind,
                                            const std::vector<std::optional<std::size_t>>& fixed_l,
                                            const Caps& caps) {
  check_hom_cap(a, b, caps);
  if (fixed_l.size() != a->size()) {
    throw Error(Errc::shape_mismatch, "enumerate_pairs_fixing: one constraint slot per element");
  }
  return search_pairs(a, b, kind, &fixed_l);
}

PairHom bottom_inclusion(const PosetRef& p) {
  if (!p->pointed()) throw Error(Errc::invalid_input, "bottom inclusion needs a pointed poset");
  PosetRef unit = one_point();
  return PairHom(PairKind::EP, constant_map(unit, p, *p->bottom()), constant_map(p, unit, 0));
}

}  // namespace epsolve
