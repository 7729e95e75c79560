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
#include <algorithm>

#include "doctest.h"
#include "epsolve/solver.hpp"
#include "epsolve/suite.hpp"

using namespace epsolve;
using E = FunctorExpr;

namespace {

std::vector<std::size_t> sizes(const OmegaChain& d) {
  std::vector<std::size_t> out;
  for (const auto& o : d.objects) out.push_back(o->size());
  return out;
}

EquationSpec spec(const std::string& text, std::size_t depth) {
  EquationSpec s = parse_equation(text);
  s.depth = depth;
  return s;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("parsing") {
  const E e = parse_equation("D = lift(unit + D)").body;
  REQUIRE(e.op() == E::Op::Lift);
  REQUIRE(e.arg(0).op() == E::Op::Sum);
  CHECK(e.arg(0).arg(0).op() == E::Op::Const);
  CHECK(e.arg(0).arg(0).payload()->size() == 1);
  CHECK(e.arg(0).arg(1).op() == E::Op::Id);

  const E f = parse_equation("D = fun(D, D)").body;
  CHECK(f.op() == E::Op::Fun);
  CHECK(f.arg(0).op() == E::Op::Id);
  CHECK(f.arg(1).op() == E::Op::Id);

  CHECK(parse_equation("  D=prod( const(2-chain) ,D )").body.to_string() == "prod(const(2-chain),D)");
  CHECK(parse_functor("unit + D + D").to_string() == parse_functor("sum(sum(unit, D), D)").to_string());
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_equation("D = lift(");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.detail().at("line") == 1);
    CHECK(e.detail().at("column") == 10);
  }
  CHECK_THROWS_AS(parse_equation("E = D"), Error);
  CHECK_THROWS_AS(parse_equation("D = const(nope)"), Error);
  CHECK_THROWS_AS(parse_equation("D = Lift(D)"), Error);
  CHECK_THROWS_AS(parse_equation("D = lift(D) D"), Error);
}

TEST_CASE("printing round-trips through the parser") {
  for (const auto& e : theorem_family(2)) {
    if (e.to_string().find("compose") != std::string::npos) continue;
    CHECK(parse_functor(e.to_string()).to_string() == e.to_string());
  }
}

TEST_CASE("iteration") {
  OmegaChain d = iterate(spec("D = D", 4));
  CHECK(sizes(d) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(d.stab_index == std::optional<std::size_t>(0));

  d = iterate(spec("D = lift(D)", 4));
  CHECK(sizes(d) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK_FALSE(d.stab_index.has_value());
  for (const auto& f : d.links) CHECK(is_ep_pair(f.l(), f.r()));

  d = iterate(spec("D = fun(D, D)", 4));
  CHECK(sizes(d) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(d.stab_index == std::optional<std::size_t>(0));

  // Separated sum: a fresh bottom under unit and D.
  d = iterate(spec("D = lift(unit + D)", 4));
  CHECK(sizes(d) == std::vector<std::size_t>{1, 4, 7, 10, 13});

  CHECK(iterate(spec("D = lift(D)", 0)).objects.size() == 1);
}

TEST_CASE("caps are reported with the stage") {
  EquationSpec s = spec("D = fun(lift(D), lift(D))", 4);
  s.caps.elems = 20;
  try {
    iterate(s);
    FAIL("expected the element cap to trip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
    CHECK(e.detail().contains("stage"));
  }
  CHECK_THROWS_AS(iterate(spec("D = lift(D)", 9)), Error);
}

TEST_CASE("reports") {
  const EquationSpec s = spec("D = lift(D)", 4);
  const json r = solve_report(s, 0, "D = lift(D)");
  CHECK(r.at("ld").at("defects") == json({4, 3, 2, 1, 0}));
  CHECK(r.at("defect_matrix").size() == 5);
  CHECK(r.at("links_ep") == true);
  CHECK(r.dump() == solve_report(s, 0, "D = lift(D)").dump());

  const std::string csv = stages_csv(r);
  CHECK(csv.rfind("n,size,canonical_form,defect\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  const json st = solve_report(spec("D = D", 3), 0, "D = D");
  CHECK(st.at("stabilized_at") == 0);
  CHECK(st.at("ld").at("verdict") == true);
}

}  // TEST_SUITE
