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
#include <set>

#include "doctest.h"
#include "epsolve/functors.hpp"
#include "epsolve/suite.hpp"
#include "oracles.hpp"

using namespace epsolve;
using E = FunctorExpr;

namespace {

E c2() { return E::constant(chain(2), "2-chain"); }
E unit() { return E::constant(one_point(), "1"); }

std::vector<E> combinators() {
  return {E::id(),
          c2(),
          E::lift(E::id()),
          E::prod(E::id(), E::id()),
          E::prod(E::id(), c2()),
          E::sum(E::id(), E::id()),
          E::sum(unit(), E::id()),
          E::fun(E::id(), E::id()),
          E::fun(E::id(), c2()),
          E::fun(c2(), E::id()),
          E::compose(E::lift(E::id()), E::fun(E::id(), E::id()))};
}

std::vector<PairHom> probes(PairKind kind) {
  auto all = posets_up_to_iso(3);
  all.erase(all.begin());
  std::vector<PairHom> out;
  for (const auto& a : all)
    for (const auto& b : all)
      for (auto& f : enumerate_pairs(a, b, kind)) out.push_back(std::move(f));
  return out;
}

}  // namespace

TEST_SUITE("functors") {

TEST_CASE("object action") {
  auto p = diamond();
  CHECK(apply_obj(E::id(), p) == p);
  CHECK(oracle::iso(*apply_obj(E::lift(E::id()), one_point()), *chain(2)));
  CHECK(oracle::iso(*apply_obj(E::fun(E::id(), E::id()), chain(2)), *chain(3)));
  CHECK(apply_obj(c2(), p)->size() == 2);
}

TEST_CASE("morphism action") {
  auto two = chain(2);
  auto f = constant_map(two, two, 0);
  CHECK(apply_mor(E::id(), f) == f);
  CHECK(apply_mor(c2(), f).table() == std::vector<std::size_t>{0, 1});
  // new bottom fixed, both old elements to the old bottom
  MonotoneMap lf = apply_mor(E::lift(E::id()), f);
  CHECK(lf.table() == std::vector<std::size_t>{0, 1, 1});
  CHECK_THROWS_AS(apply_mor(E::fun(E::id(), E::id()), f), Error);
}

TEST_CASE("pair action") {
  auto two = chain(2);
  PairHom f = bottom_inclusion(two);
  CHECK(pr_apply_mor(E::id(), f) == f);
  PairHom g = pr_apply_mor(E::lift(E::id()), f);
  CHECK(is_ep_pair(g.l(), g.r()));
  CHECK(g.l().table() == std::vector<std::size_t>{0, 1});
  CHECK(g.r().table() == std::vector<std::size_t>{0, 1, 1});

  E fun = E::fun(E::id(), E::id());
  for (const auto& p : {one_point(), two, diamond()}) {
    PairHom h = pr_apply_mor(fun, pair_identity(p));
    CHECK(h == pair_identity(apply_obj(fun, p)));
  }
}

TEST_CASE("functor laws on exhaustive probes") {
  for (PairKind kind : {PairKind::EP, PairKind::ADJ}) {
    const auto ps = probes(kind);
    CHECK(check_functor_laws(E::id(), ps));
    CHECK(check_functor_laws(E::lift(E::id()), ps));
    CHECK(check_functor_laws(E::prod(E::id(), c2()), ps));
    CHECK(check_functor_laws(E::fun(E::id(), E::id()), ps));
  }
}

TEST_CASE("local continuity") {
  const std::vector<PosetRef> objs{one_point(), chain(2), vee()};
  for (const auto& e : combinators()) {
    for (const auto& a : objs) {
      for (const auto& b : objs) {
        CHECK_MESSAGE(check_local_continuity(e, a, b), e.to_string());
      }
    }
  }
  // Negative control: an action that reverses the order of its argument.
  MixedAction flip = [](const MonotoneMap*, const MonotoneMap& p) {
    const std::size_t top = p.dom()->size() - 1;
    return constant_map(p.dom(), p.cod(), p(top) == top ? 0 : 1);
  };
  CHECK_FALSE(check_local_continuity(flip, chain(2), chain(2)));
}

TEST_CASE("mixed action yields monotone maps") {
  // pr_apply_mor relies on this instead of rechecking its components.
  const std::vector<PosetRef> objs{one_point(), chain(2), vee(), antichain(2)};
  std::size_t checked = 0;
  for (const auto& e : theorem_family(1)) {
    for (const auto& a : objs) {
      for (const auto& b : objs) {
        for (const auto& plus : monotone_maps(a, b, 1000)) {
          for (const auto& minus : monotone_maps(b, a, 1000)) {
            try {
              MonotoneMap out = apply_mixed(e, &minus, plus);
              CHECK(oracle::monotone(*out.dom(), *out.cod(), out.table()));
              ++checked;
            } catch (const Error& err) {
              // sums of unpointed posets
              CHECK(err.code() == Errc::invalid_input);
            }
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("variance") {
  CHECK(variance(E::id()) == Variance::Covariant);
  CHECK(variance(c2()) == Variance::Constant);
  CHECK(variance(E::fun(E::id(), c2())) == Variance::Contravariant);
  CHECK(variance(E::fun(E::id(), E::id())) == Variance::Mixed);
  CHECK(variance(E::fun(E::fun(E::id(), c2()), c2())) == Variance::Covariant);
}

TEST_CASE("the generated family") {
  const auto fam = theorem_family(2);
  CHECK(fam.size() == 3303);
  std::set<std::string> names;
  for (const auto& e : fam) {
    CHECK(e.height() <= 2);
    names.insert(e.to_string());
  }
  CHECK(names.size() == fam.size());
  CHECK(theorem_family(0).size() == 3);
}

TEST_CASE("preservation of cocones") {
  Cocone canon = colimit_finite(bottom_inclusion_chain());
  Preservation p = preserves_cocone(E::id(), canon);
  CHECK(p.colimiting);
  CHECK(p.ld.verdict);
  p = preserves_cocone(E::lift(E::id()), canon);
  CHECK(p.colimiting);
  CHECK(p.ld.verdict);
  CHECK(p.image.apex->size() == 3);

  p = preserves_cocone(E::id(), non_ld_fixture());
  CHECK_FALSE(p.colimiting);
  CHECK_FALSE(p.ld.verdict);
}

}  // TEST_SUITE
