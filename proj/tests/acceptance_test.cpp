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

// Acceptance criteria P1-P7, one line each. Exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "epsolve/epsolve.h"
#include "epsolve/suite.hpp"
#include "oracles.hpp"

using namespace epsolve;

namespace {

int failures = 0;

void line(const std::string& id, bool pass, const std::string& what) {
  std::printf("%s %s  %s\n", id.c_str(), pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string summary(const PropertyResult& r) {
  return "checked=" + std::to_string(r.checked) + " skipped=" + std::to_string(r.skipped) +
         " violations=" + std::to_string(r.violations) + "  " + r.title;
}

// P6 goes through the shared library, as the CLI does.
bool solver_via_capi(std::string& what) {
  epsolve_options o;
  epsolve_options_init(&o);
  o.depth = 4;
  char* a = nullptr;
  char* b = nullptr;
  if (epsolve_solve("D = lift(D)", &o, &a, nullptr) != EPSOLVE_OK ||
      epsolve_solve("D = lift(D)", &o, &b, nullptr) != EPSOLVE_OK) {
    what = epsolve_last_error_message();
    return false;
  }
  const bool same = std::string(a) == b;
  const json r = json::parse(a);
  epsolve_string_free(a);
  epsolve_string_free(b);
  std::vector<std::size_t> sizes;
  for (const auto& s : r.at("stages")) sizes.push_back(s.at("size").get<std::size_t>());
  const auto defects = r.at("ld").at("defects").get<std::vector<std::size_t>>();
  what = "sizes=" + json(sizes).dump() + " defects=" + json(defects).dump() +
         " byte_identical=" + (same ? "true" : "false");
  return same && sizes == std::vector<std::size_t>{1, 2, 3, 4, 5} &&
         defects == std::vector<std::size_t>{4, 3, 2, 1, 0};
}

// Random increasing chains of maps against the brute-force lub.
bool lub_cross_check(std::size_t cases, std::uint64_t seed, std::string& what) {
  // Codomains have two or more elements, so every hom-poset has a strict step.
  std::vector<PosetRef> lib, cods;
  for (const auto& p : posets_up_to_iso(3)) {
    if (p->size() > 0) lib.push_back(p);
    if (p->size() > 1) cods.push_back(p);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::size_t agree = 0, strict = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const PosetRef p = lib[pick(lib.size())], q = cods[pick(cods.size())];
    const auto maps = oracle::monotone_tables(*p, *q);
    std::vector<oracle::Table> terms{maps[pick(maps.size())]};
    const std::size_t steps = 1 + pick(4);
    for (std::size_t s = 0; s < steps; ++s) {
      std::vector<oracle::Table> above;
      for (const auto& m : maps)
        if (m != terms.back() && oracle::map_leq(*q, terms.back(), m)) above.push_back(m);
      if (above.empty()) break;
      terms.push_back(above[pick(above.size())]);
    }
    terms.push_back(terms.back());
    std::size_t witness = terms.size() - 1;
    while (witness > 0 && terms[witness - 1] == terms.back()) --witness;
    strict += witness > 0;
    MapChain chain;
    for (const auto& t : terms) chain.terms.emplace_back(p, q, t);
    chain.stab_index = witness;
    if (lub_map_chain(chain).table() == oracle::lub(*p, *q, terms)) ++agree;
  }
  what = std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + std::to_string(strict) +
         " chains with a strict step)";
  return agree == cases;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opts;  // seed 0, 200 chains per kind, sizes <= 4, length <= 5, apex <= 5
  const auto ep = random_chains(PairKind::EP, opts);
  const auto adj = random_chains(PairKind::ADJ, opts);

  const PropertyResult p1 = property_ld_implies_colimiting(PairKind::EP, ep, opts);
  line("P1", p1.pass, summary(p1));
  const PropertyResult p2 = property_preservation(PairKind::EP, ep, opts);
  line("P2", p2.pass, summary(p2));
  const PropertyResult p3 = property_fixture_not_ld(opts);
  line("P3", p3.pass, summary(p3) + " defects=" + p3.stats.value("defects", json()).dump());

  const PropertyResult p41 = property_ld_implies_colimiting(PairKind::ADJ, adj, opts);
  const PropertyResult p42 = property_preservation(PairKind::ADJ, adj, opts);
  const PropertyResult p43 = property_ep_second_condition(ep);
  line("P4", p41.pass && p42.pass && p43.pass,
       "ld=>colimiting [" + summary(p41) + "]; preservation [" + summary(p42) + "]; second condition [" +
           summary(p43) + "]");

  const PropertyResult p5 = property_yoneda(opts);
  line("P5", p5.pass, p5.stats.dump());

  std::string what;
  const bool p6 = solver_via_capi(what);
  line("P6", p6, what);

  const bool p7 = lub_cross_check(50, opts.seed, what);
  line("P7", p7, what);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s in %.1f s\n", failures ? "FAILED" : "all criteria pass", secs);
  return failures ? 1 : 0;
}
