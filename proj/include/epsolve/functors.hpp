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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "epsolve/chains.hpp"

namespace epsolve {

/// Syntax tree of locally continuous functor combinators. The first argument
/// of Fun is contravariant. Values are immutable and cheap to copy.
class FunctorExpr {
 public:
  enum class Op { Id, Const, Lift, Prod, Sum, Fun, Compose };

  static FunctorExpr id();
  /// `name` is used when printing; "1" prints as `unit`.
  static FunctorExpr constant(PosetRef p, std::string name);
  static FunctorExpr lift(FunctorExpr e);
  static FunctorExpr prod(FunctorExpr a, FunctorExpr b);
  static FunctorExpr sum(FunctorExpr a, FunctorExpr b);
  static FunctorExpr fun(FunctorExpr a, FunctorExpr b);
  /// outer . inner
  static FunctorExpr compose(FunctorExpr outer, FunctorExpr inner);

  Op op() const noexcept;
  const FunctorExpr& arg(std::size_t i) const;
  const PosetRef& payload() const;
  const std::string& payload_name() const;

  std::size_t height() const;
  bool has_fun() const;
  /// Concrete DSL syntax; Compose prints as the substituted expression.
  std::string to_string() const;

 private:
  struct Node;
  explicit FunctorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// e with every occurrence of D replaced by `inner`.
FunctorExpr substitute(const FunctorExpr& e, const FunctorExpr& inner);

enum class Variance { Constant, Covariant, Contravariant, Mixed };
const char* variance_name(Variance v) noexcept;
/// How the chain variable occurs in e.
Variance variance(const FunctorExpr& e);

PosetRef apply_obj(const FunctorExpr& e, const PosetRef& p, const Caps& caps = {});

/// Mixed-variance action F(minus, plus): F(X) -> F(Y) for plus: X -> Y and
/// minus: Y -> X, used at contravariant positions. `minus` may be null when
/// e has no Fun node.
MonotoneMap apply_mixed(const FunctorExpr& e, const MonotoneMap* minus, const MonotoneMap& plus,
                        const Caps& caps = {});

/// Covariant action; throws invalid_input on expressions containing Fun.
MonotoneMap apply_mor(const FunctorExpr& e, const MonotoneMap& f, const Caps& caps = {});

/// PR F f = <F(f.r, f.l), F(f.l, f.r)>, which is <F f.l, F f.r> on Fun-free
/// expressions. Throws invariant_violation if the result breaks the kind's laws.
PairHom pr_apply_mor(const FunctorExpr& e, const PairHom& f, const Caps& caps = {});

/// PR F preserves identities and composites over the probe set.
bool check_functor_laws(const FunctorExpr& e, const std::vector<PairHom>& probes,
                        const Caps& caps = {});

using MixedAction = std::function<MonotoneMap(const MonotoneMap* minus, const MonotoneMap& plus)>;

/// The raw action is monotone in each argument over the full hom-posets
/// hom(A,B) and hom(B,A).
bool check_local_continuity(const MixedAction& action, const PosetRef& a, const PosetRef& b);
/// Raw-action check plus, for both pair kinds, monotonicity of PR F on the
/// enumerated pair hom-poset and preservation of witnessed lubs.
bool check_local_continuity(const FunctorExpr& e, const PosetRef& a, const PosetRef& b,
                            const Caps& caps = {});

struct Preservation {
  Cocone image;
  bool colimiting = false;
  LdReport ld;
};

/// Image of the cocone under PR F, with the chains-module verdicts on it.
Preservation preserves_cocone(const FunctorExpr& e, const Cocone& k, const Caps& caps = {});

/// Named constants available to const(...) in the DSL: "1", "2-chain",
/// "3-chain", "diamond", "vee".
const std::map<std::string, PosetRef>& builtin_posets();

/// Every expression of height <= max_height over D and the given constants,
/// one per printed normal form, in generation order.
std::vector<FunctorExpr> functor_family(std::size_t max_height,
                                        const std::vector<FunctorExpr>& constants);

}  // namespace epsolve
