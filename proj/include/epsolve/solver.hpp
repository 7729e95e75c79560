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
#include <string>

#include "epsolve/functors.hpp"
#include "epsolve/serialize.hpp"

namespace epsolve {

/// Grammar (LL(1), whitespace-insensitive, case-sensitive):
///
///   equation := "D" "=" expr
///   expr     := term { "+" term }            a + b is sum(a, b)
///   term     := "D" | "unit" | "const" "(" NAME ")"
///             | ("lift") "(" expr ")"
///             | ("sum" | "prod" | "fun") "(" expr "," expr ")"
///             | "(" expr ")"
///
/// Errors are Errc::parse_error with {"line", "column"} in the detail.
struct EquationSpec {
  std::string variable = "D";
  FunctorExpr body = FunctorExpr::id();
  std::size_t depth = 4;
  Caps caps;
};

EquationSpec parse_equation(std::string_view text);
/// A bare expression, or an equation whose body is taken.
FunctorExpr parse_functor(std::string_view text);

/// The initial chain Δ_0 = 1, Δ_{n+1} = F(Δ_n), first link the bottom
/// inclusion 1 -> F(1), then Δ_{n+1} = PR F Δ_n. stab_index is the first
/// isomorphic link, if any appears within the depth. Errors carry the
/// failing stage in the detail.
OmegaChain iterate(const EquationSpec& spec);

/// Solver run report (deterministic JSON: keys sorted, no timings).
json solve_report(const EquationSpec& spec, std::uint64_t seed, const std::string& source);

/// CSV with columns n,size,canonical_form,defect.
std::string stages_csv(const json& report);

}  // namespace epsolve
