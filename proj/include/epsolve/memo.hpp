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
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "epsolve/finposet.hpp"

namespace epsolve::detail {

/// Results of pure functions of one or two posets, keyed by input identity.
///
/// Entries pin their inputs, so a key's addresses cannot be reused while the
/// entry lives. Callers pass an estimated byte weight per entry. Two
/// generations bound memory: when the young table fills half the budget it
/// replaces the old one, and old hits are promoted.
template <class Value>
class IdentityMemo {
 public:
  std::optional<Value> find(int tag, const PosetRef& a, const PosetRef& b) {
    std::lock_guard lock(mu_);
    const Key key{tag, a.get(), b.get()};
    if (auto it = young_.find(key); it != young_.end()) return it->second.value;
    auto it = old_.find(key);
    if (it == old_.end()) return std::nullopt;
    Entry e = std::move(it->second);
    old_.erase(it);
    Value v = e.value;
    insert(key, std::move(e));
    return v;
  }

  void put(int tag, const PosetRef& a, const PosetRef& b, Value v, std::size_t weight) {
    std::lock_guard lock(mu_);
    if (weight > kBudget / 2) return;
    insert(Key{tag, a.get(), b.get()}, Entry{a, b, std::move(v), weight});
  }

 private:
  struct Key {
    int tag;
    const FinPoset* a;
    const FinPoset* b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<const void*>{}(k.a);
      h ^= std::hash<const void*>{}(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h ^ static_cast<std::size_t>(k.tag);
    }
  };
  struct Entry {
    PosetRef a, b;
    Value value;
    std::size_t weight = 0;
  };
  using Table = std::unordered_map<Key, Entry, KeyHash>;

  void insert(const Key& key, Entry e) {
    if (young_total_ + e.weight > kBudget / 2) {
      old_ = std::move(young_);
      young_ = Table{};
      young_total_ = 0;
    }
    const std::size_t w = e.weight;
    if (young_.insert_or_assign(key, std::move(e)).second) young_total_ += w;
  }

  static constexpr std::size_t kBudget = std::size_t{256} << 20;
  std::mutex mu_;
  Table young_, old_;
  std::size_t young_total_ = 0;
};

/// Rough resident size of a poset, for memo budgets.
inline std::size_t poset_weight(const FinPoset& p) {
  std::size_t w = p.size() * p.size() + 128;
  for (const auto& e : p.elems()) w += 2 * e.size() + 64;
  return w;
}

}  // namespace epsolve::detail
