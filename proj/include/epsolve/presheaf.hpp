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
#include <string>
#include <vector>

#include "epsolve/chains.hpp"

namespace epsolve {

/// A morphism token f in hom(src, dst).
struct Arrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t token = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite O-category given by tables: hom-posets of tokens, composition
/// tables and identities. Construction checks the category laws and
/// monotonicity of composition; a failure throws invariant_violation.
class FinOCategory {
 public:
  /// comp[(a*k + b)*k + c] holds g.f for g in hom(b,c), f in hom(a,b), at
  /// index g*|hom(a,b)| + f.
  FinOCategory(std::vector<std::string> objects, std::vector<std::vector<PosetRef>> hom,
               std::vector<std::vector<std::size_t>> comp, std::vector<std::size_t> ids);

  std::size_t size() const noexcept { return objects_.size(); }
  const std::string& object_name(std::size_t a) const { return objects_.at(a); }
  std::size_t object_index(const std::string& name) const;  // throws not_found
  const PosetRef& hom(std::size_t a, std::size_t b) const { return hom_.at(a).at(b); }
  std::size_t id(std::size_t a) const { return ids_.at(a); }
  /// g . f for f in hom(a,b), g in hom(b,c).
  std::size_t compose(std::size_t a, std::size_t b, std::size_t c, std::size_t g, std::size_t f) const;
  const std::vector<std::size_t>& comp_table(std::size_t a, std::size_t b, std::size_t c) const;

  /// Present only on categories made by full_subcategory: the posets the
  /// objects stand for and the monotone map behind every token.
  struct Carriers {
    std::vector<PosetRef> posets;
    std::vector<std::vector<FunctionSpace>> homs;
  };
  const std::optional<Carriers>& carriers() const noexcept { return carriers_; }

 private:
  std::vector<std::string> objects_;
  std::vector<std::vector<PosetRef>> hom_;
  std::vector<std::vector<std::size_t>> comp_;
  std::vector<std::size_t> ids_;
  std::optional<Carriers> carriers_;

  friend FinOCategory full_subcategory(const std::vector<std::pair<std::string, PosetRef>>&, const Caps&);
};

/// The full sub-O-category of finite posets and monotone maps on the given
/// objects; tokens are the elements of the function spaces.
FinOCategory full_subcategory(const std::vector<std::pair<std::string, PosetRef>>& objects,
                              const Caps& caps = {});

/// Object whose carrier is p, if K was built with carriers.
std::optional<std::size_t> find_object(const FinOCategory& k, const PosetRef& p);
/// Token for a monotone map between carrier objects; throws invalid_input
/// when the map is not expressible in K.
Arrow arrow_of(const FinOCategory& k, const MonotoneMap& f);

/// A locally continuous presheaf K^op -> finite posets.
struct Presheaf {
  std::vector<PosetRef> at;
  /// act[a][b][f] : at[b] -> at[a] for f in hom(a,b)
  std::vector<std::vector<std::vector<MonotoneMap>>> act;
};

/// Functoriality (identities, composites reversed) and monotonicity of the
/// action on hom-posets. Throws invariant_violation describing the failure.
void validate_presheaf(const FinOCategory& k, const Presheaf& p);

struct NatTrans {
  std::vector<MonotoneMap> components;  // components[a] : P(a) -> Q(a)
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

bool is_natural(const FinOCategory& k, const Presheaf& p, const Presheaf& q, const NatTrans& t);
bool nat_leq(const NatTrans& s, const NatTrans& t);
/// Vertical composite t . s.
NatTrans nat_compose(const NatTrans& t, const NatTrans& s);
NatTrans nat_identity(const Presheaf& p);

/// y x = hom(-, x), acting by precomposition.
Presheaf yoneda(const FinOCategory& k, std::size_t x);
/// y f : y x -> y y, acting by postcomposition.
NatTrans yoneda_mor(const FinOCategory& k, const Arrow& f);

/// All natural transformations P -> Q in deterministic (lexicographic by
/// object) order. Throws cap_exceeded when more than `cap` candidates exist
/// at one object or more than `cap` transformations are found.
std::vector<NatTrans> enumerate_nat_trans(const FinOCategory& k, const Presheaf& p,
                                          const Presheaf& q, std::size_t cap = 512);

/// For every pair of objects, f |-> y f is an order-isomorphism
/// hom(a,b) ~ Nat(y a, y b).
bool check_fully_faithful(const FinOCategory& k, std::size_t cap = 512);

struct NatChain {
  std::vector<NatTrans> terms;
  std::size_t stab_index = 0;
};

/// Componentwise lub_map_chain; throws invariant_violation if the result is
/// not natural or the chain is not increasing with a valid witness.
NatTrans pointwise_lub(const FinOCategory& k, const Presheaf& p, const Presheaf& q,
                       const NatChain& c);

struct ProofStep {
  bool lhs_is_identity = false;  // y(⊔ c_n^L . c_n^R) = y(id)
  bool rhs_is_identity = false;  // ⊔ y(c_n^L) . y(c_n^R) = y(id)
  bool sides_agree = false;
  bool holds() const { return lhs_is_identity && rhs_is_identity && sides_agree; }
};

/// Evaluates both sides of y(⊔ c_n^L . c_n^R) = ⊔ y(c_n^L) . y(c_n^R) = y(id)
/// independently: left by a lub in K then y, right by y then a pointwise lub
/// of transformations. The cocone's posets and maps must live in K.
ProofStep verify_proof_step(const FinOCategory& k, const Cocone& cocone);

}  // namespace epsolve
