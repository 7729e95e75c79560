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

#include <vector>

#include "epsolve/finposet.hpp"

namespace epsolve {

enum class PairKind { EP, ADJ };

const char* kind_name(PairKind k) noexcept;
PairKind parse_kind(std::string_view s);

/// r . l = id_A and l . r <= id_B.
bool is_ep_pair(const MonotoneMap& l, const MonotoneMap& r);
/// l . r <= id_B and id_A <= r . l.
bool is_adjoint_pair(const MonotoneMap& l, const MonotoneMap& r);
bool satisfies(PairKind kind, const MonotoneMap& l, const MonotoneMap& r);

/// A morphism A -> B of PR K (kind EP) or of the adjoint-pair category
/// (kind ADJ): an embedding/left part l: A -> B with r: B -> A.
class PairHom {
 public:
  /// Throws invariant_violation when (l, r) fails the kind's laws.
  PairHom(PairKind kind, MonotoneMap l, MonotoneMap r);

  /// As the constructor, for components the caller knows to be monotone;
  /// only the kind's laws are checked.
  static PairHom from_monotone(PairKind kind, MonotoneMap l, MonotoneMap r);

  PairKind kind() const noexcept { return kind_; }
  const MonotoneMap& l() const noexcept { return l_; }
  const MonotoneMap& r() const noexcept { return r_; }
  const PosetRef& source() const noexcept { return l_.dom(); }
  const PosetRef& target() const noexcept { return l_.cod(); }

  /// Same data under another kind; every EP pair is also an ADJ pair.
  PairHom as_kind(PairKind k) const { return PairHom(k, l_, r_); }

  friend bool operator==(const PairHom& f, const PairHom& g) {
    return f.kind_ == g.kind_ && f.l_ == g.l_ && f.r_ == g.r_;
  }

 private:
  struct Unchecked {};
  PairHom(Unchecked, PairKind kind, MonotoneMap l, MonotoneMap r)
      : kind_(kind), l_(std::move(l)), r_(std::move(r)) {}

  PairKind kind_;
  MonotoneMap l_;
  MonotoneMap r_;

  friend PairHom pair_identity(const PosetRef&, PairKind);
  friend PairHom pair_compose(const PairHom&, const PairHom&);
};

/// (g . f) = <g.l . f.l, f.r . g.r>.
PairHom pair_compose(const PairHom& g, const PairHom& f);
PairHom pair_identity(const PosetRef& p, PairKind kind = PairKind::EP);
/// Componentwise order: f.l <= g.l and f.r <= g.r.
bool pair_leq(const PairHom& f, const PairHom& g);
/// l and r are mutually inverse.
bool is_iso(const PairHom& f);

/// Every pair A -> B of the given kind, ordered by the table of l.
///
/// Both kinds are Galois connections l -| r, so r is determined by l as
/// r(b) = max{a : l(a) <= b}; candidates are generated from each monotone l
/// and then checked against the kind's laws. Throws cap_exceeded when
/// |A|*|B| > caps.hom.
std::vector<PairHom> enumerate_pairs(const PosetRef& a, const PosetRef& b, PairKind kind,
                                     const Caps& caps = {});

/// The pairs of enumerate_pairs whose left component takes the value
/// fixed_l[x] at every x where one is given. Same caps.
std::vector<PairHom> enumerate_pairs_fixing(const PosetRef& a, const PosetRef& b, PairKind kind,
                                            const std::vector<std::optional<std::size_t>>& fixed_l,
                                            const Caps& caps = {});

/// The ep-pair 1 -> p embedding * at p's bottom. p must be pointed.
PairHom bottom_inclusion(const PosetRef& p);

}  // namespace epsolve
