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

#include <cstddef>
#include <cstdint>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epsolve/caps.hpp"
#include "epsolve/error.hpp"

namespace epsolve {

/// A finite poset with opaque element names and an explicit order table.
///
/// The constructor only checks that the data is representable (square table,
/// known bottom); the order axioms are checked by validate_poset() or the
/// checked() factory. Library constructions build valid posets directly.
class FinPoset {
 public:
  FinPoset(std::vector<std::string> elems, std::vector<std::vector<bool>> leq,
           std::optional<std::string> bottom);

  /// Construct and validate; throws Errc::invariant_violation on failure.
  static std::shared_ptr<const FinPoset> checked(
      std::vector<std::string> elems, std::vector<std::vector<bool>> leq,
      std::optional<std::string> bottom);

  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<std::string>& elems() const noexcept { return elems_; }
  const std::string& name(std::size_t i) const { return elems_[i]; }
  bool leq(std::size_t i, std::size_t j) const noexcept { return leq_[i * elems_.size() + j] != 0; }
  std::optional<std::size_t> bottom() const noexcept { return bottom_; }
  bool pointed() const noexcept { return bottom_.has_value(); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws not_found

  /// The least element, whether or not it is designated as bottom.
  std::optional<std::size_t> least() const;

  /// Structural identity: same element list, order table and bottom.
  friend bool operator==(const FinPoset& a, const FinPoset& b);

  /// Pairs (x, y) with y covering x, computed on first use. Only meaningful
  /// when the axioms hold; see is_valid_by_construction().
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers() const;

  /// Counts a request for covers() and reports whether computing them has
  /// paid off yet; small posets and repeatedly used ones qualify.
  bool wants_covers() const noexcept {
    return size() <= 64 || covers_->uses.fetch_add(1, std::memory_order_relaxed) >= 4;
  }

  /// True for posets built by the library or passed through checked().
  bool is_valid_by_construction() const noexcept { return valid_; }

 private:
  struct Trusted {};
  FinPoset(Trusted, std::vector<std::string> elems, std::vector<std::uint8_t> leq,
           std::optional<std::size_t> bottom);
  void build_index();

  std::vector<std::string> elems_;
  std::vector<std::uint8_t> leq_;  // row-major size() x size()
  std::optional<std::size_t> bottom_;
  std::unordered_map<std::string, std::size_t> index_;
  bool valid_ = false;

  struct CoverCache {
    std::once_flag once;
    std::atomic<std::uint32_t> uses{0};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  };
  std::shared_ptr<CoverCache> covers_ = std::make_shared<CoverCache>();

  friend class PosetBuilder;
};

using PosetRef = std::shared_ptr<const FinPoset>;

/// Builds posets whose axioms hold by construction.
class PosetBuilder {
 public:
  explicit PosetBuilder(std::size_t n) : n_(n), leq_(n * n, 0) {
    names_.reserve(n);
  }
  void add_name(std::string name) { names_.push_back(std::move(name)); }
  void set_leq(std::size_t i, std::size_t j) { leq_[i * n_ + j] = 1; }
  void set_bottom(std::size_t b) { bottom_ = b; }
  PosetRef finish();

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::optional<std::size_t> bottom_;
};

/// Same poset for the purpose of composing maps. Pointer identity is the fast
/// path; otherwise element lists and order tables must coincide.
bool same_poset(const FinPoset& a, const FinPoset& b);
inline bool same_poset(const PosetRef& a, const PosetRef& b) {
  return a == b || same_poset(*a, *b);
}

struct Violation {
  std::string axiom;  // "distinctness", "reflexivity", "antisymmetry", "transitivity", "bottom"
  std::vector<std::string> witness;
};

/// Nothing when every poset axiom holds, otherwise the first violated axiom.
std::optional<Violation> validate_poset(const FinPoset& p);

// Standard small posets.
PosetRef one_point();                    // "1": {*}
PosetRef chain(std::size_t n);           // "0" < "1" < ... ; pointed when n > 0
PosetRef antichain(std::size_t n);       // unpointed
PosetRef diamond();                      // bot < a, b < top
PosetRef vee();                          // bot < a, b

/// Monotone map stored as an index table. The constructor checks shapes
/// only; monotonicity is checked by is_monotone() or checked().
class MonotoneMap {
 public:
  MonotoneMap(PosetRef dom, PosetRef cod, std::vector<std::size_t> table);
  static MonotoneMap checked(PosetRef dom, PosetRef cod, std::vector<std::size_t> table);

  const PosetRef& dom() const noexcept { return dom_; }
  const PosetRef& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  friend bool operator==(const MonotoneMap& f, const MonotoneMap& g);

 private:
  PosetRef dom_;
  PosetRef cod_;
  std::vector<std::size_t> table_;
};

bool is_monotone(const MonotoneMap& f);
MonotoneMap identity(const PosetRef& p);
MonotoneMap constant_map(const PosetRef& dom, const PosetRef& cod, std::size_t value);
/// g . f; throws shape_mismatch unless cod(f) is dom(g).
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
/// Pointwise order; throws shape_mismatch on differing endpoints.
bool leq_map(const MonotoneMap& f, const MonotoneMap& g);
bool same_shape(const MonotoneMap& f, const MonotoneMap& g);

/// An increasing chain in a hom-poset with a witnessed stabilization point.
struct MapChain {
  std::vector<MonotoneMap> terms;
  std::size_t stab_index = 0;
};

/// Throws invariant_violation if the chain is not increasing or the witness
/// fails; otherwise returns the least upper bound, terms[stab_index].
MonotoneMap lub_map_chain(const MapChain& c);

PosetRef product(const PosetRef& p, const PosetRef& q, const Caps& caps = {});
/// Separated sum: both summands side by side above a fresh bottom.
/// Both inputs must be pointed.
PosetRef coproduct(const PosetRef& p, const PosetRef& q, const Caps& caps = {});
PosetRef lift(const PosetRef& p, const Caps& caps = {});

/// All monotone maps dom -> cod in lexicographic table order. Throws
/// cap_exceeded as soon as more than `cap` maps exist.
std::vector<MonotoneMap> monotone_maps(const PosetRef& dom, const PosetRef& cod, std::size_t cap);

struct FunctionSpace {
  PosetRef poset;                 // element i is maps[i]
  std::vector<MonotoneMap> maps;  // lexicographic in their tables
  std::size_t index_of(const MonotoneMap& f) const;  // throws not_found
  std::optional<std::size_t> find_table(std::span<const std::size_t> table) const;

  // Mixed-radix codes of the tables, ascending, when they fit in 64 bits.
  std::vector<std::uint64_t> codes;
  std::size_t radix = 0;
};

/// Monotone maps p -> q ordered pointwise. Throws cap_exceeded beyond caps.elems.
FunctionSpace function_space(const PosetRef& p, const PosetRef& q, const Caps& caps = {});

/// As function_space, shared with other callers on the same inputs.
std::shared_ptr<const FunctionSpace> function_space_ref(const PosetRef& p, const PosetRef& q,
                                                        const Caps& caps = {});

/// Canonical certificate, invariant under order-isomorphism and exact.
std::string canonical_form(const FinPoset& p);

/// An order-isomorphism p -> q as an index table, if one exists.
std::optional<std::vector<std::size_t>> iso_check(const FinPoset& p, const FinPoset& q);

/// Copy of p with elements renamed through `names` (same order table).
PosetRef rename(const PosetRef& p, std::vector<std::string> names);

/// Every poset with at most max_n elements, one per isomorphism class,
/// elements "x0".."xk", bottom designated whenever a least element exists.
/// Ordered by size, then by canonical form.
std::vector<PosetRef> posets_up_to_iso(std::size_t max_n);

}  // namespace epsolve
