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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "epsolve/functors.hpp"
#include "epsolve/presheaf.hpp"
#include "epsolve/serialize.hpp"

namespace epsolve {

/// Parameters of the theorem property suite.
struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 200;          // random stabilizing chains per kind
  std::size_t max_size = 4;         // chain objects have at most this many elements
  std::size_t max_len = 5;          // chains have at most this many links
  std::size_t apex_max = 5;         // apexes of enumerated cocones
  std::size_t functor_height = 2;   // height of the functor family
  std::size_t threads = 0;          // 0: hardware concurrency
  Caps caps;
};

struct PropertyResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  json counterexample;  // null when none
  json stats = json::object();
};

json to_json(const PropertyResult& r);

/// Deterministic generator: chain lengths, stabilization points and links
/// are drawn from a seeded Mersenne twister; objects are drawn from
/// posets_up_to_iso(max_size). Links before the witness are random pairs of
/// the kind, links from it on are identities or renamings.
std::vector<OmegaChain> random_chains(PairKind kind, const SuiteOptions& opts);

/// The constant chain at 1 (`length` objects) with apex the 2-chain and
/// bottom-inclusion legs: a cocone that is not locally determined.
Cocone non_ld_fixture(std::size_t length = 3);

/// 1 -> 2-chain -> 2-chain, bottom inclusion then identity, witness 1.
OmegaChain bottom_inclusion_chain();

/// The stabilizing adjoint chain 2-chain -> 1 -> 1 whose first link picks
/// the top, witness 1.
OmegaChain adjoint_top_chain();

/// The O-category {1, 2-chain} of finite posets.
FinOCategory two_object_category();

/// Height <= h expressions over D, unit and const(2-chain).
std::vector<FunctorExpr> theorem_family(std::size_t height);

// Acceptance properties. Each returns one pass/fail line's worth of data.
PropertyResult property_ld_implies_colimiting(PairKind kind, const std::vector<OmegaChain>& chains,
                                              const SuiteOptions& opts);
PropertyResult property_preservation(PairKind kind, const std::vector<OmegaChain>& chains,
                                     const SuiteOptions& opts);
PropertyResult property_fixture_not_ld(const SuiteOptions& opts);
/// EP chains read as adjoint chains satisfy the second condition with both
/// sides the identity.
PropertyResult property_ep_second_condition(const std::vector<OmegaChain>& ep_chains);
PropertyResult property_yoneda(const SuiteOptions& opts);
PropertyResult property_solver_growth(const SuiteOptions& opts);

/// P1-P6 in order; "all_pass" summarizes.
json run_theorem_suite(const SuiteOptions& opts);

}  // namespace epsolve
