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
#include "epsolve/finposet.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "epsolve/memo.hpp"

namespace epsolve {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::invariant_violation: return "invariant_violation";
    case Errc::parse_error: return "parse_error";
    case Errc::not_found: return "not_found";
  }
  return "unknown";
}

namespace {

void check_cap(std::size_t n, const Caps& caps, const char* what) {
  if (n > caps.elems) {
    throw Error(Errc::cap_exceeded,
                std::string(what) + " would have " + std::to_string(n) +
                    " elements, cap is " + std::to_string(caps.elems),
                {{"construction", what}, {"size", n}, {"cap", caps.elems}});
  }
}

}  // namespace

FinPoset::FinPoset(std::vector<std::string> elems, std::vector<std::vector<bool>> leq,
                   std::optional<std::string> bottom)
    : elems_(std::move(elems)) {
  const std::size_t n = elems_.size();
  if (leq.size() != n) {
    throw Error(Errc::invalid_input, "order table must have one row per element");
  }
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      throw Error(Errc::invalid_input, "order table must be square");
    }
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = leq[i][j] ? 1 : 0;
  }
  build_index();
  if (bottom) {
    auto b = find(*bottom);
    if (!b) throw Error(Errc::invalid_input, "bottom '" + *bottom + "' is not an element");
    bottom_ = *b;
  }
}

FinPoset::FinPoset(Trusted, std::vector<std::string> elems, std::vector<std::uint8_t> leq,
                   std::optional<std::size_t> bottom)
    : elems_(std::move(elems)), leq_(std::move(leq)), bottom_(bottom), valid_(true) {
  build_index();
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>>& FinPoset::covers() const {
  std::call_once(covers_->once, [this] {
    const std::size_t n = size(), words = (n + 63) / 64;
    // Strict up-sets as bitsets; y covers x when y is above x but not above
    // any other element strictly above x.
    std::vector<std::uint64_t> up(n * words, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && leq(x, y)) up[x * words + y / 64] |= std::uint64_t{1} << (y % 64);
      }
    }
    std::vector<std::uint64_t> above(words);
    for (std::size_t x = 0; x < n; ++x) {
      std::fill(above.begin(), above.end(), 0);
      for (std::size_t z = 0; z < n; ++z) {
        if (x == z || !leq(x, z)) continue;
        for (std::size_t w = 0; w < words; ++w) above[w] |= up[z * words + w];
      }
      for (std::size_t y = 0; y < n; ++y) {
        const bool strict = (up[x * words + y / 64] >> (y % 64)) & 1;
        const bool indirect = (above[y / 64] >> (y % 64)) & 1;
        if (strict && !indirect) {
          covers_->pairs.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        }
      }
    }
  });
  return covers_->pairs;
}

void FinPoset::build_index() {
  index_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

PosetRef FinPoset::checked(std::vector<std::string> elems, std::vector<std::vector<bool>> leq,
                           std::optional<std::string> bottom) {
  auto p = std::make_shared<FinPoset>(std::move(elems), std::move(leq), std::move(bottom));
  if (auto v = validate_poset(*p)) {
    throw Error(Errc::invariant_violation, "poset violates " + v->axiom,
                {{"axiom", v->axiom}, {"witness", v->witness}});
  }
  p->valid_ = true;
  return p;
}

std::optional<std::size_t> FinPoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinPoset::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) {
    throw Error(Errc::not_found, "unknown element '" + std::string(name) + "'",
                {{"element", std::string(name)}});
  }
  return *i;
}

std::optional<std::size_t> FinPoset::least() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < size() && below_all; ++j) below_all = leq(i, j);
    if (below_all) return i;
  }
  return std::nullopt;
}

bool operator==(const FinPoset& a, const FinPoset& b) {
  return a.elems_ == b.elems_ && a.leq_ == b.leq_ && a.bottom_ == b.bottom_;
}

bool same_poset(const FinPoset& a, const FinPoset& b) { return &a == &b || a == b; }

PosetRef PosetBuilder::finish() {
  if (names_.size() != n_) throw Error(Errc::invalid_input, "builder: wrong number of names");
  return std::shared_ptr<const FinPoset>(
      new FinPoset(FinPoset::Trusted{}, std::move(names_), std::move(leq_), bottom_));
}

std::optional<Violation> validate_poset(const FinPoset& p) {
  const std::size_t n = p.size();
  std::set<std::string> seen;
  for (const auto& e : p.elems()) {
    if (!seen.insert(e).second) return Violation{"distinctness", {e}};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq(i, i)) return Violation{"reflexivity", {p.name(i)}};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq(i, j) && p.leq(j, i)) return Violation{"antisymmetry", {p.name(i), p.name(j)}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq(j, k) && !p.leq(i, k)) {
          return Violation{"transitivity", {p.name(i), p.name(j), p.name(k)}};
        }
      }
    }
  }
  if (auto b = p.bottom()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq(*b, j)) return Violation{"bottom", {p.name(*b), p.name(j)}};
    }
  }
  return std::nullopt;
}

PosetRef one_point() {
  PosetBuilder b(1);
  b.add_name("*");
  b.set_leq(0, 0);
  b.set_bottom(0);
  return b.finish();
}

PosetRef chain(std::size_t n) {
  PosetBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_name(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) b.set_leq(i, j);
  }
  if (n > 0) b.set_bottom(0);
  return b.finish();
}

PosetRef antichain(std::size_t n) {
  PosetBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_name("a" + std::to_string(i));
    b.set_leq(i, i);
  }
  return b.finish();
}

PosetRef diamond() {
  PosetBuilder b(4);
  for (const char* s : {"bot", "a", "b", "top"}) b.add_name(s);
  for (std::size_t i = 0; i < 4; ++i) {
    b.set_leq(i, i);
    b.set_leq(0, i);
    b.set_leq(i, 3);
  }
  b.set_bottom(0);
  return b.finish();
}

PosetRef vee() {
  PosetBuilder b(3);
  for (const char* s : {"bot", "a", "b"}) b.add_name(s);
  for (std::size_t i = 0; i < 3; ++i) {
    b.set_leq(i, i);
    b.set_leq(0, i);
  }
  b.set_bottom(0);
  return b.finish();
}

MonotoneMap::MonotoneMap(PosetRef dom, PosetRef cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!dom_ || !cod_) throw Error(Errc::invalid_input, "map endpoints must be set");
  if (table_.size() != dom_->size()) {
    throw Error(Errc::shape_mismatch, "map table must cover the whole domain");
  }
  for (std::size_t v : table_) {
    if (v >= cod_->size()) throw Error(Errc::shape_mismatch, "map value outside codomain");
  }
}

MonotoneMap MonotoneMap::checked(PosetRef dom, PosetRef cod, std::vector<std::size_t> table) {
  MonotoneMap f(std::move(dom), std::move(cod), std::move(table));
  if (!is_monotone(f)) throw Error(Errc::invariant_violation, "map is not monotone");
  return f;
}

bool operator==(const MonotoneMap& f, const MonotoneMap& g) {
  return f.table_ == g.table_ && same_poset(f.dom_, g.dom_) && same_poset(f.cod_, g.cod_);
}

bool is_monotone(const MonotoneMap& f) {
  const auto& d = *f.dom();
  const auto& c = *f.cod();
  if (d.is_valid_by_construction() && d.wants_covers()) {
    // The order is the reflexive-transitive closure of its covers.
    for (const auto& [x, y] : d.covers()) {
      if (!c.leq(f(x), f(y))) return false;
    }
    return true;
  }
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (d.leq(x, y) && !c.leq(f(x), f(y))) return false;
    }
  }
  return true;
}

MonotoneMap identity(const PosetRef& p) {
  std::vector<std::size_t> t(p->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return MonotoneMap(p, p, std::move(t));
}

MonotoneMap constant_map(const PosetRef& dom, const PosetRef& cod, std::size_t value) {
  return MonotoneMap(dom, cod, std::vector<std::size_t>(dom->size(), value));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!same_poset(f.cod(), g.dom())) {
    throw Error(Errc::shape_mismatch, "compose: codomain of f is not the domain of g");
  }
  std::vector<std::size_t> t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return MonotoneMap(f.dom(), g.cod(), std::move(t));
}

bool same_shape(const MonotoneMap& f, const MonotoneMap& g) {
  return same_poset(f.dom(), g.dom()) && same_poset(f.cod(), g.cod());
}

bool leq_map(const MonotoneMap& f, const MonotoneMap& g) {
  if (!same_shape(f, g)) throw Error(Errc::shape_mismatch, "leq_map: maps have different endpoints");
  const auto& c = *f.cod();
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (!c.leq(f(x), g(x))) return false;
  }
  return true;
}

MonotoneMap lub_map_chain(const MapChain& c) {
  if (c.terms.empty()) throw Error(Errc::invalid_input, "lub of an empty chain");
  if (c.stab_index >= c.terms.size()) {
    throw Error(Errc::invariant_violation, "stabilization index outside the chain",
                {{"stab_index", c.stab_index}, {"length", c.terms.size()}});
  }
  for (std::size_t i = 0; i + 1 < c.terms.size(); ++i) {
    if (!leq_map(c.terms[i], c.terms[i + 1])) {
      throw Error(Errc::invariant_violation, "chain is not increasing at stage " + std::to_string(i),
                  {{"stage", i}});
    }
  }
  const MonotoneMap& top = c.terms[c.stab_index];
  for (std::size_t j = c.stab_index + 1; j < c.terms.size(); ++j) {
    if (!(c.terms[j] == top)) {
      throw Error(Errc::invariant_violation,
                  "stabilization witness fails at stage " + std::to_string(j),
                  {{"stage", j}, {"stab_index", c.stab_index}});
    }
  }
  return top;
}

namespace {

PosetRef build_product(const PosetRef& p, const PosetRef& q) {
  const std::size_t n = p->size(), m = q->size();
  PosetBuilder b(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) b.add_name("(" + p->name(i) + "," + q->name(j) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!p->leq(i, k)) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (q->leq(j, l)) b.set_leq(i * m + j, k * m + l);
        }
      }
    }
  }
  if (p->bottom() && q->bottom()) b.set_bottom(*p->bottom() * m + *q->bottom());
  return b.finish();
}

PosetRef build_coproduct(const PosetRef& p, const PosetRef& q) {
  const std::size_t n = p->size(), m = q->size();
  PosetBuilder b(n + m + 1);
  b.add_name("sum-bottom");
  for (const auto& e : p->elems()) b.add_name("inl(" + e + ")");
  for (const auto& e : q->elems()) b.add_name("inr(" + e + ")");
  for (std::size_t i = 0; i < n + m + 1; ++i) b.set_leq(0, i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p->leq(i, j)) b.set_leq(1 + i, 1 + j);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (q->leq(i, j)) b.set_leq(1 + n + i, 1 + n + j);
    }
  }
  b.set_bottom(0);
  return b.finish();
}

PosetRef build_lift(const PosetRef& p) {
  const std::size_t n = p->size();
  PosetBuilder b(n + 1);
  b.add_name("lift-bottom");
  for (const auto& e : p->elems()) b.add_name("up(" + e + ")");
  for (std::size_t i = 0; i <= n; ++i) b.set_leq(0, i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p->leq(i, j)) b.set_leq(1 + i, 1 + j);
    }
  }
  b.set_bottom(0);
  return b.finish();
}

}  // namespace

std::vector<MonotoneMap> monotone_maps(const PosetRef& dom, const PosetRef& cod, std::size_t cap) {
  const std::size_t n = dom->size(), m = cod->size();
  std::vector<std::vector<std::size_t>> tables;
  std::vector<std::size_t> t(n, 0);
  // Depth-first over dom in element order; a value for x must be compatible
  // with every already-assigned element comparable to x.
  auto fits = [&](std::size_t x, std::size_t v) {
    for (std::size_t y = 0; y < x; ++y) {
      if (dom->leq(y, x) && !cod->leq(t[y], v)) return false;
      if (dom->leq(x, y) && !cod->leq(v, t[y])) return false;
    }
    return true;
  };
  auto overflow = [&] {
    throw Error(Errc::cap_exceeded,
                "more than " + std::to_string(cap) + " monotone maps",
                {{"construction", "monotone_maps"}, {"cap", cap},
                 {"dom_size", n}, {"cod_size", m}});
  };
  if (n == 0) {
    tables.emplace_back();
  } else if (m > 0) {
    std::vector<std::size_t> next(n, 0);
    std::size_t x = 0;
    while (true) {
      bool placed = false;
      while (next[x] < m) {
        std::size_t v = next[x]++;
        if (fits(x, v)) {
          t[x] = v;
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
        tables.push_back(t);
        if (tables.size() > cap) overflow();
      } else {
        ++x;
      }
    }
  }
  std::vector<MonotoneMap> out;
  out.reserve(tables.size());
  for (auto& tab : tables) out.emplace_back(dom, cod, std::move(tab));
  return out;
}

std::optional<std::size_t> FunctionSpace::find_table(std::span<const std::size_t> table) const {
  if (!codes.empty() || maps.empty()) {
    std::uint64_t code = 0;
    for (std::size_t v : table) {
      if (v >= radix) return std::nullopt;
      code = code * radix + v;
    }
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code || table.size() != maps.front().table().size()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - codes.begin());
  }
  auto it = std::lower_bound(maps.begin(), maps.end(), table, [](const MonotoneMap& m, auto t) {
    return std::lexicographical_compare(m.table().begin(), m.table().end(), t.begin(), t.end());
  });
  if (it == maps.end() || !std::equal(it->table().begin(), it->table().end(), table.begin(), table.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - maps.begin());
}

std::size_t FunctionSpace::index_of(const MonotoneMap& f) const {
  auto i = find_table(f.table());
  if (!i || !(maps[*i] == f)) {
    throw Error(Errc::not_found, "map is not an element of this function space");
  }
  return *i;
}

namespace {

FunctionSpace build_function_space(const PosetRef& p, const PosetRef& q, const Caps& caps) {
  FunctionSpace fs;
  fs.maps = monotone_maps(p, q, caps.elems);
  const std::size_t n = fs.maps.size();
  fs.radix = std::max<std::size_t>(q->size(), 1);
  // Codes preserve the lexicographic order when radix^|p| fits.
  double bits = 0;
  for (std::size_t x = 0; x < p->size(); ++x) bits += std::log2(static_cast<double>(fs.radix));
  if (bits < 63) {
    fs.codes.reserve(n);
    for (const auto& f : fs.maps) {
      std::uint64_t code = 0;
      for (std::size_t v : f.table()) code = code * fs.radix + v;
      fs.codes.push_back(code);
    }
  }
  PosetBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "{";
    const auto& t = fs.maps[i].table();
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (x) name += ",";
      name += p->name(x) + "->" + q->name(t[x]);
    }
    name += "}";
    b.add_name(std::move(name));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t x = 0; x < p->size() && le; ++x) le = q->leq(fs.maps[i](x), fs.maps[j](x));
      if (le) b.set_leq(i, j);
    }
  }
  if (p->size() == 0) {
    b.set_bottom(0);
  } else if (auto qb = q->bottom()) {
    b.set_bottom(*fs.find_table(std::vector<std::size_t>(p->size(), *qb)));
  }
  fs.poset = b.finish();
  return fs;
}

// Sharing results per input identity also keeps same_poset on its pointer
// fast path for posets built the same way.
enum Construction { kProduct, kCoproduct, kLift, kFunctionSpace };

detail::IdentityMemo<PosetRef>& poset_memo() {
  static detail::IdentityMemo<PosetRef> m;
  return m;
}

detail::IdentityMemo<std::shared_ptr<const FunctionSpace>>& space_memo() {
  static detail::IdentityMemo<std::shared_ptr<const FunctionSpace>> m;
  return m;
}

template <class Build>
PosetRef memoized(Construction op, const PosetRef& p, const PosetRef& q, Build build) {
  if (auto hit = poset_memo().find(op, p, q)) return *hit;
  PosetRef out = build();
  poset_memo().put(op, p, q, out, detail::poset_weight(*out));
  return out;
}

}  // namespace

PosetRef product(const PosetRef& p, const PosetRef& q, const Caps& caps) {
  check_cap(p->size() * q->size(), caps, "product");
  return memoized(kProduct, p, q, [&] { return build_product(p, q); });
}

PosetRef coproduct(const PosetRef& p, const PosetRef& q, const Caps& caps) {
  if (!p->pointed() || !q->pointed()) {
    throw Error(Errc::invalid_input, "sum requires pointed summands");
  }
  check_cap(p->size() + q->size() + 1, caps, "sum");
  return memoized(kCoproduct, p, q, [&] { return build_coproduct(p, q); });
}

PosetRef lift(const PosetRef& p, const Caps& caps) {
  check_cap(p->size() + 1, caps, "lift");
  return memoized(kLift, p, nullptr, [&] { return build_lift(p); });
}

std::shared_ptr<const FunctionSpace> function_space_ref(const PosetRef& p, const PosetRef& q,
                                                        const Caps& caps) {
  if (auto hit = space_memo().find(kFunctionSpace, p, q)) {
    // The cached space may have been built under a larger cap.
    const std::size_t n = (*hit)->maps.size();
    if (n > caps.elems) {
      throw Error(Errc::cap_exceeded, "more than " + std::to_string(caps.elems) + " monotone maps",
                  {{"construction", "monotone_maps"}, {"cap", caps.elems},
                   {"dom_size", p->size()}, {"cod_size", q->size()}});
    }
    return *hit;
  }
  auto fs = std::make_shared<const FunctionSpace>(build_function_space(p, q, caps));
  const std::size_t table_bytes = 8 * p->size() + 96;
  space_memo().put(kFunctionSpace, p, q, fs,
                   detail::poset_weight(*fs->poset) + fs->maps.size() * 2 * table_bytes);
  return fs;
}

FunctionSpace function_space(const PosetRef& p, const PosetRef& q, const Caps& caps) {
  return *function_space_ref(p, q, caps);
}

PosetRef rename(const PosetRef& p, std::vector<std::string> names) {
  if (names.size() != p->size()) throw Error(Errc::shape_mismatch, "rename: wrong number of names");
  PosetBuilder b(p->size());
  for (auto& s : names) b.add_name(std::move(s));
  for (std::size_t i = 0; i < p->size(); ++i) {
    for (std::size_t j = 0; j < p->size(); ++j) {
      if (p->leq(i, j)) b.set_leq(i, j);
    }
  }
  if (p->bottom()) b.set_bottom(*p->bottom());
  return b.finish();
}

}  // namespace epsolve
