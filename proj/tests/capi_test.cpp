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
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "epsolve/epsolve.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { epsolve_string_free(p); }
};

std::string fixture() {
  std::ifstream in(EPSOLVE_FIXTURE);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("posets through handles") {
  epsolve_poset* a = nullptr;
  epsolve_poset* b = nullptr;
  REQUIRE(epsolve_poset_builtin("diamond", &a) == EPSOLVE_OK);
  CHECK(epsolve_poset_size(a) == 4);
  Str text;
  REQUIRE(epsolve_poset_to_json(a, &text.p) == EPSOLVE_OK);
  REQUIRE(epsolve_poset_from_json(text.p, &b) == EPSOLVE_OK);
  int iso = 0;
  CHECK(epsolve_poset_iso(a, b, &iso) == EPSOLVE_OK);
  CHECK(iso == 1);
  Str ca, cb;
  epsolve_poset_canonical_form(a, &ca.p);
  epsolve_poset_canonical_form(b, &cb.p);
  CHECK(std::string(ca.p) == cb.p);
  epsolve_poset_free(a);
  epsolve_poset_free(b);

  epsolve_poset* bad = nullptr;
  CHECK(epsolve_poset_builtin("pentagon", &bad) == EPSOLVE_ERR_NOT_FOUND);
  CHECK(bad == nullptr);
  CHECK(epsolve_poset_from_json(R"({"elems":["a","b"],"leq":[[true,true],[true,true]],"bottom":null})", &bad) ==
        EPSOLVE_ERR_INVARIANT);
  const json err = json::parse(epsolve_last_error_json());
  CHECK(err.at("error").at("code") == "invariant_violation");
  CHECK(epsolve_poset_from_json("{", &bad) == EPSOLVE_ERR_INVALID_INPUT);
  CHECK(epsolve_poset_from_json(nullptr, &bad) == EPSOLVE_ERR_NULL_ARGUMENT);
}

TEST_CASE("functors through handles") {
  epsolve_functor* f = nullptr;
  REQUIRE(epsolve_functor_parse("fun(D, D)", &f) == EPSOLVE_OK);
  Str s;
  epsolve_functor_to_string(f, &s.p);
  CHECK(std::string(s.p) == "fun(D,D)");
  epsolve_poset* two = nullptr;
  epsolve_poset* out = nullptr;
  epsolve_poset_builtin("2-chain", &two);
  REQUIRE(epsolve_functor_apply(f, two, nullptr, &out) == EPSOLVE_OK);
  CHECK(epsolve_poset_size(out) == 3);
  epsolve_poset_free(out);
  epsolve_poset_free(two);
  epsolve_functor_free(f);

  CHECK(epsolve_functor_parse("lift(", &f) == EPSOLVE_ERR_PARSE);
  CHECK(std::string(epsolve_last_error_message()).find("column") != std::string::npos);
}

TEST_CASE("the fixture cocone") {
  epsolve_cocone* k = nullptr;
  REQUIRE(epsolve_cocone_from_json(fixture().c_str(), &k) == EPSOLVE_OK);
  Str report;
  int verdict = -1;
  REQUIRE(epsolve_cocone_check_ld(k, nullptr, &report.p, &verdict) == EPSOLVE_OK);
  CHECK(verdict == 0);
  CHECK(json::parse(report.p).at("defects") == json({1, 1, 1}));
  int col = -1;
  CHECK(epsolve_cocone_is_colimiting(k, nullptr, &col) == EPSOLVE_OK);
  CHECK(col == 0);

  epsolve_functor* id = nullptr;
  epsolve_functor_parse("D", &id);
  Str pres;
  int ok = -1;
  CHECK(epsolve_cocone_preserve(k, id, nullptr, &pres.p, &ok) == EPSOLVE_OK);
  CHECK(ok == 0);
  epsolve_functor_free(id);
  epsolve_cocone_free(k);

  // A leg that does not commute is rejected.
  json doc = json::parse(fixture());
  doc["legs"][0]["l"]["table"]["*"] = "1";
  doc["legs"][0]["r"]["table"] = {{"0", "*"}, {"1", "*"}};
  CHECK(epsolve_cocone_from_json(doc.dump().c_str(), &k) != EPSOLVE_OK);
}

TEST_CASE("solve") {
  epsolve_options o;
  epsolve_options_init(&o);
  o.depth = 4;
  Str a, b, csv;
  REQUIRE(epsolve_solve("D = lift(D)", &o, &a.p, &csv.p) == EPSOLVE_OK);
  REQUIRE(epsolve_solve("D = lift(D)", &o, &b.p, nullptr) == EPSOLVE_OK);
  CHECK(std::string(a.p) == b.p);
  CHECK(std::string(csv.p).rfind("n,size,canonical_form,defect", 0) == 0);

  o.depth = 12;
  Str c;
  CHECK(epsolve_solve("D = lift(D)", &o, &c.p, nullptr) == EPSOLVE_ERR_INVALID_INPUT);
  CHECK(c.p == nullptr);
  o.depth = 4;
  o.cap_elems = 3;
  CHECK(epsolve_solve("D = lift(D)", &o, &c.p, nullptr) == EPSOLVE_ERR_CAP_EXCEEDED);
  const json err = json::parse(epsolve_last_error_json());
  CHECK(err.at("error").at("detail").at("stage") == 3);
}

TEST_CASE("yoneda demo") {
  Str r;
  int ok = 0;
  REQUIRE(epsolve_yoneda_demo(nullptr, &r.p, &ok) == EPSOLVE_OK);
  CHECK(ok == 1);
  CHECK(json::parse(r.p).at("result").at("stats").at("nat_y1_y2") == 2);
}

TEST_CASE("status names") {
  CHECK(std::string(epsolve_status_name(EPSOLVE_OK)) == "ok");
  CHECK(std::string(epsolve_status_name(EPSOLVE_ERR_CAP_EXCEEDED)) == "cap_exceeded");
  CHECK(std::string(epsolve_version()).size() > 0);
}

}  // TEST_SUITE
