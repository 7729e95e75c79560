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

#include <optional>
#include <vector>

#include "epsolve/opairs.hpp"

namespace epsolve {

/// A finite prefix Δ_0 -> Δ_1 -> ... of an ω-chain of pairs.
///
/// When stab_index = N is present, every link from N on is an isomorphism,
/// and the chain is understood to continue by isomorphisms forever.
struct OmegaChain {
  PairKind kind = PairKind::EP;
  std::vector<PosetRef> objects;
  std::vector<PairHom> links;
  std::optional<std::size_t> stab_index;

  std::size_t last() const { return objects.size() - 1; }
};

/// Throws invalid_input / shape_mismatch / invariant_violation naming the
/// failing link.
void validate_chain(const OmegaChain& d);

/// First n from which all listed links are isomorphisms (objects.size()-1
/// when only the last object qualifies).
std::size_t stabilization_point(const OmegaChain& d);

/// Objects 0..depth and the links between them, with no witness.
OmegaChain truncate(const OmegaChain& d, std::size_t depth);

struct Cocone {
  OmegaChain chain;
  PosetRef apex;
  std::vector<PairHom> legs;  // legs[n]: Δ_n -> apex
};

/// Δ_{n<=m} = links[m-1] . ... . links[n]; identity pair when n = m.
PairHom link_composite(const OmegaChain& d, std::size_t n, std::size_t m);

/// Legs have the chain's kind and c_n = c_{n+1} . Δ_n for every listed n.
bool is_cocone(const Cocone& k);

/// The colimit of a chain with a stabilization witness N: apex Δ_N,
/// c_n = Δ_{n<=N} for n <= N and the inverse isomorphisms beyond N.
Cocone colimit_finite(const OmegaChain& d);

/// Cocone with every leg post-composed by u: apex -> u.target().
Cocone transport(const Cocone& k, const PairHom& u);

/// Same cocone with chain links and legs viewed as another kind.
Cocone with_kind(const Cocone& k, PairKind kind);

struct LdReport {
  PairKind kind = PairKind::EP;
  /// defects[n] = #{x in apex : (c_n^L . c_n^R)(x) != x}
  std::vector<std::size_t> defects;
  bool lub_is_identity = false;
  /// ADJ only: residuals[n][m-n] = #{x in Δ_n : (Δ^R_{n<=m} . Δ^L_{n<=m})(x) != (c_n^R . c_n^L)(x)}
  std::optional<std::vector<std::vector<std::size_t>>> adj_residuals;
  bool adj_condition = true;
  bool verdict = false;
};

/// ⊔_n c_n^L . c_n^R = id_C, with the lub taken by lub_map_chain at the
/// chain's stabilization witness (the last listed index when absent).
LdReport check_local_determination_ep(const Cocone& k);
/// The ep condition plus ⊔_{m>=n} Δ^R_{n<=m} . Δ^L_{n<=m} = c_n^R . c_n^L
/// for every listed n. Accepts EP cocones, reading them as adjoint pairs.
LdReport check_local_determination_adj(const Cocone& k);
LdReport check_local_determination(const Cocone& k);

/// Colimiting test by mediator search: some u: colimit apex -> k.apex with
/// u . κ_n = c_n for all n is an isomorphism pair. Needs a witnessed chain.
/// Within caps.hom all pairs are enumerated; beyond it the only possible
/// mediator, c_N (κ_N is an identity), is checked directly.
bool is_colimiting(const Cocone& k, const Caps& caps = {});

/// A compatible family components[k] in Δ_k, Δ_k^R(components[k+1]) = components[k].
struct Thread {
  std::vector<std::size_t> components;
  std::size_t depth() const { return components.size() - 1; }
};

/// Bounded-depth inverse-limit view: the poset of threads up to `depth`
/// (order-isomorphic to Δ_depth) with legs Δ_n -> threads.
struct ThreadApproximant {
  std::vector<Thread> threads;  // threads[i] is apex element i
  Cocone cocone;                // over truncate(d, depth)
};

ThreadApproximant thread_approximant(const OmegaChain& d, std::size_t depth);

}  // namespace epsolve
