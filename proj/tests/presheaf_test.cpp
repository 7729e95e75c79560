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
#include "epsolve/presheaf.hpp"
#include "epsolve/serialize.hpp"
#include "epsolve/suite.hpp"

using namespace epsolve;

TEST_SUITE("presheaf") {

TEST_CASE("one object, one arrow") {
  FinOCategory k({"o"}, {{one_point()}}, {{0}}, {0});
  CHECK(check_fully_faithful(k));
  Presheaf y = yoneda(k, 0);
  CHECK_NOTHROW(validate_presheaf(k, y));
  CHECK(enumerate_nat_trans(k, y, y).size() == 1);
}

TEST_CASE("the two-object category") {
  const FinOCategory k = two_object_category();
  REQUIRE(k.size() == 2);
  const std::size_t one = k.object_index("1"), two = k.object_index("2-chain");
  CHECK(k.hom(one, two)->size() == 2);
  CHECK(k.hom(two, two)->size() == 3);
  CHECK(check_fully_faithful(k));

  const Presheaf y1 = yoneda(k, one), y2 = yoneda(k, two);
  CHECK_NOTHROW(validate_presheaf(k, y1));
  CHECK_NOTHROW(validate_presheaf(k, y2));
  const auto n12 = enumerate_nat_trans(k, y1, y2);
  CHECK(n12.size() == 2);
  CHECK(enumerate_nat_trans(k, y2, y1).size() == 1);
  for (const auto& t : n12) CHECK(is_natural(k, y1, y2, t));
  CHECK(nat_leq(n12[0], n12[1]) != nat_leq(n12[1], n12[0]));

  const NatTrans id2 = nat_identity(y2);
  CHECK(nat_compose(id2, n12[0]) == n12[0]);
}

TEST_CASE("a category missing a composite is rejected") {
  const FinOCategory k = two_object_category();
  json doc = category_to_json(k);
  doc["comp"].erase("1->2-chain->2-chain");
  CHECK_THROWS_AS(JsonReader().category(doc), Error);
  // The round trip itself is faithful.
  const FinOCategory back = JsonReader().category(category_to_json(k));
  CHECK(category_to_json(back) == category_to_json(k));
}

TEST_CASE("pointwise lubs of transformations") {
  const FinOCategory k = two_object_category();
  const std::size_t two = k.object_index("2-chain");
  const auto& hom = k.hom(two, two);
  // const-bottom, identity and const-top as tokens of hom(2-chain, 2-chain)
  std::size_t bot = 0, top = 0;
  for (std::size_t i = 0; i < hom->size(); ++i) {
    bool least = true, greatest = true;
    for (std::size_t j = 0; j < hom->size(); ++j) {
      least = least && hom->leq(i, j);
      greatest = greatest && hom->leq(j, i);
    }
    if (least) bot = i;
    if (greatest) top = i;
  }
  const Presheaf y2 = yoneda(k, two);
  const NatTrans tb = yoneda_mor(k, {two, two, bot});
  const NatTrans ti = yoneda_mor(k, {two, two, k.id(two)});
  const NatTrans tt = yoneda_mor(k, {two, two, top});
  CHECK(pointwise_lub(k, y2, y2, {{tb, ti}, 1}) == ti);
  CHECK(pointwise_lub(k, y2, y2, {{ti}, 0}) == ti);
  CHECK(pointwise_lub(k, y2, y2, {{tb, ti, tt}, 2}) == tt);
  CHECK_THROWS_AS(pointwise_lub(k, y2, y2, {{tt, tb}, 1}), Error);
}

TEST_CASE("the proof equation") {
  const FinOCategory k = two_object_category();
  const auto c1 = builtin_posets().at("1");
  OmegaChain constant{PairKind::EP, {c1, c1}, {pair_identity(c1)}, 0};
  CHECK(verify_proof_step(k, colimit_finite(constant)).holds());
  CHECK(verify_proof_step(k, colimit_finite(bottom_inclusion_chain())).holds());
  const ProofStep bad = verify_proof_step(k, non_ld_fixture());
  CHECK_FALSE(bad.holds());
  CHECK_FALSE(bad.lhs_is_identity);
}

}  // TEST_SUITE
