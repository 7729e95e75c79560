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
#include "doctest.h"
#include "epsolve/opairs.hpp"
#include "oracles.hpp"

using namespace epsolve;

namespace {

MonotoneMap tab(const PosetRef& p, const PosetRef& q, std::vector<std::size_t> t) {
  return MonotoneMap(p, q, std::move(t));
}

std::vector<PosetRef> small_posets() {
  auto all = posets_up_to_iso(3);
  all.erase(all.begin());  // the empty poset
  return all;
}

}  // namespace

TEST_SUITE("opairs") {

TEST_CASE("pair laws on the small examples") {
  auto one = one_point(), c2 = chain(2);
  // bottom inclusion with the unique map back
  CHECK(is_ep_pair(tab(one, c2, {0}), tab(c2, one, {0, 0})));
  // collapse with r picking the top
  CHECK_FALSE(is_ep_pair(tab(c2, one, {0, 0}), tab(one, c2, {1})));
  CHECK(is_adjoint_pair(tab(c2, one, {0, 0}), tab(one, c2, {1})));
  // top inclusion
  CHECK_FALSE(is_ep_pair(tab(one, c2, {1}), tab(c2, one, {0, 0})));
  CHECK_FALSE(is_adjoint_pair(tab(one, c2, {1}), tab(c2, one, {0, 0})));

  CHECK_THROWS_AS(PairHom(PairKind::EP, tab(one, c2, {1}), tab(c2, one, {0, 0})), Error);
  CHECK_THROWS_AS(is_ep_pair(tab(one, c2, {0}), tab(one, c2, {0})), Error);
  CHECK_THROWS_AS(PairHom(PairKind::EP, tab(c2, c2, {1, 0}), tab(c2, c2, {1, 0})), Error);
}

TEST_CASE("composition of bottom inclusions") {
  auto one = one_point(), c2 = chain(2), c3 = chain(3);
  PairHom f(PairKind::EP, tab(one, c2, {0}), tab(c2, one, {0, 0}));
  PairHom g(PairKind::EP, tab(c2, c3, {0, 1}), tab(c3, c2, {0, 1, 1}));
  PairHom gf = pair_compose(g, f);
  CHECK(gf == bottom_inclusion(c3));
  CHECK(pair_compose(pair_identity(c3), gf) == gf);
  CHECK(pair_compose(gf, pair_identity(one)) == gf);
  CHECK_THROWS_AS(pair_compose(f, f), Error);
  CHECK_THROWS_AS(pair_compose(g.as_kind(PairKind::ADJ), f), Error);
}

TEST_CASE("hom-posets of pairs") {
  auto one = one_point(), c2 = chain(2), c3 = chain(3);
  auto ep12 = enumerate_pairs(one, c2, PairKind::EP);
  REQUIRE(ep12.size() == 1);
  CHECK(ep12[0] == bottom_inclusion(c2));
  CHECK(enumerate_pairs(c2, one, PairKind::EP).empty());
  CHECK(enumerate_pairs(c2, one, PairKind::ADJ).size() == 1);

  auto ps = enumerate_pairs(c2, c3, PairKind::EP);
  for (const auto& a : ps) {
    CHECK(pair_leq(a, a));
    for (const auto& b : ps) {
      if (pair_leq(a, b) && pair_leq(b, a)) CHECK(a == b);
      for (const auto& c : ps) {
        if (pair_leq(a, b) && pair_leq(b, c)) CHECK(pair_leq(a, c));
      }
    }
  }
}

TEST_CASE("enumerate_pairs matches brute force") {
  const auto all = small_posets();
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (PairKind kind : {PairKind::EP, PairKind::ADJ}) {
        const auto want = oracle::pairs(*a, *b, kind == PairKind::EP);
        const auto got = enumerate_pairs(a, b, kind);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
          CHECK(got[i].kind() == kind);
          CHECK(got[i].l().table() == want[i].first);
          CHECK(got[i].r().table() == want[i].second);
        }
      }
    }
  }
}

TEST_CASE("enumerate_pairs_fixing keeps exactly the matching pairs") {
  const auto all = small_posets();
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (PairKind kind : {PairKind::EP, PairKind::ADJ}) {
        const auto every = oracle::pairs(*a, *b, kind == PairKind::EP);
        // Pin element 0 to each value in turn, and leave the rest free.
        for (std::size_t v = 0; v < b->size(); ++v) {
          std::vector<std::optional<std::size_t>> fixed(a->size());
          fixed[0] = v;
          std::vector<oracle::Table> want;
          for (const auto& [l, r] : every) {
            if (l[0] == v) want.push_back(l);
          }
          const auto got = enumerate_pairs_fixing(a, b, kind, fixed);
          REQUIRE(got.size() == want.size());
          for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i].l().table() == want[i]);
        }
      }
    }
  }
  CHECK_THROWS_AS(enumerate_pairs_fixing(chain(2), chain(2), PairKind::EP, {std::nullopt}), Error);
}

TEST_CASE("hom cap") {
  Caps tight;
  tight.hom = 5;
  auto c2 = chain(2), c3 = chain(3);
  CHECK_THROWS_AS(enumerate_pairs(c2, c3, PairKind::EP, tight), Error);
  CHECK(enumerate_pairs(c2, c2, PairKind::EP, tight).size() == 1);
  // A cached result must not bypass the cap.
  CHECK_FALSE(enumerate_pairs(c2, c3, PairKind::EP).empty());
  CHECK_THROWS_AS(enumerate_pairs(c2, c3, PairKind::EP, tight), Error);
}

TEST_CASE("isomorphisms") {
  auto d = diamond();
  CHECK(is_iso(pair_identity(d)));
  CHECK_FALSE(is_iso(bottom_inclusion(d)));
  CHECK_THROWS_AS(bottom_inclusion(antichain(2)), Error);
}

}  // TEST_SUITE
