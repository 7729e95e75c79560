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
#include "epsolve/functors.hpp"

#include <limits>
#include <set>

namespace epsolve {

struct FunctorExpr::Node {
  Op op;
  std::vector<FunctorExpr> args;
  PosetRef payload;
  std::string payload_name;
};

FunctorExpr FunctorExpr::id() { return FunctorExpr(std::make_shared<const Node>(Node{Op::Id, {}, {}, {}})); }

FunctorExpr FunctorExpr::constant(PosetRef p, std::string name) {
  if (!p) throw Error(Errc::invalid_input, "constant functor needs a poset");
  if (auto v = validate_poset(*p)) {
    throw Error(Errc::invariant_violation, "constant poset violates " + v->axiom);
  }
  return FunctorExpr(std::make_shared<const Node>(Node{Op::Const, {}, std::move(p), std::move(name)}));
}

FunctorExpr FunctorExpr::lift(FunctorExpr e) {
  return FunctorExpr(std::make_shared<const Node>(Node{Op::Lift, {std::move(e)}, {}, {}}));
}
FunctorExpr FunctorExpr::prod(FunctorExpr a, FunctorExpr b) {
  return FunctorExpr(std::make_shared<const Node>(Node{Op::Prod, {std::move(a), std::move(b)}, {}, {}}));
}
FunctorExpr FunctorExpr::sum(FunctorExpr a, FunctorExpr b) {
  return FunctorExpr(std::make_shared<const Node>(Node{Op::Sum, {std::move(a), std::move(b)}, {}, {}}));
}
FunctorExpr FunctorExpr::fun(FunctorExpr a, FunctorExpr b) {
  return FunctorExpr(std::make_shared<const Node>(Node{Op::Fun, {std::move(a), std::move(b)}, {}, {}}));
}
FunctorExpr FunctorExpr::compose(FunctorExpr outer, FunctorExpr inner) {
  return FunctorExpr(
      std::make_shared<const Node>(Node{Op::Compose, {std::move(outer), std::move(inner)}, {}, {}}));
}

FunctorExpr::Op FunctorExpr::op() const noexcept { return node_->op; }
const FunctorExpr& FunctorExpr::arg(std::size_t i) const { return node_->args.at(i); }
const PosetRef& FunctorExpr::payload() const { return node_->payload; }
const std::string& FunctorExpr::payload_name() const { return node_->payload_name; }

std::size_t FunctorExpr::height() const {
  std::size_t h = 0;
  for (const auto& a : node_->args) h = std::max(h, a.height() + 1);
  return h;
}

bool FunctorExpr::has_fun() const {
  if (node_->op == Op::Fun) return true;
  for (const auto& a : node_->args) {
    if (a.has_fun()) return true;
  }
  return false;
}

std::string FunctorExpr::to_string() const {
  switch (node_->op) {
    case Op::Id: return "D";
    case Op::Const: return payload_name() == "1" ? "unit" : "const(" + payload_name() + ")";
    case Op::Lift: return "lift(" + arg(0).to_string() + ")";
    case Op::Prod: return "prod(" + arg(0).to_string() + "," + arg(1).to_string() + ")";
    case Op::Sum: return "sum(" + arg(0).to_string() + "," + arg(1).to_string() + ")";
    case Op::Fun: return "fun(" + arg(0).to_string() + "," + arg(1).to_string() + ")";
    case Op::Compose: return substitute(arg(0), arg(1)).to_string();
  }
  return {};
}

FunctorExpr substitute(const FunctorExpr& e, const FunctorExpr& inner) {
  using Op = FunctorExpr::Op;
  switch (e.op()) {
    case Op::Id: return inner;
    case Op::Const: return e;
    case Op::Lift: return FunctorExpr::lift(substitute(e.arg(0), inner));
    case Op::Prod: return FunctorExpr::prod(substitute(e.arg(0), inner), substitute(e.arg(1), inner));
    case Op::Sum: return FunctorExpr::sum(substitute(e.arg(0), inner), substitute(e.arg(1), inner));
    case Op::Fun: return FunctorExpr::fun(substitute(e.arg(0), inner), substitute(e.arg(1), inner));
    case Op::Compose: return substitute(substitute(e.arg(0), e.arg(1)), inner);
  }
  return e;
}

const char* variance_name(Variance v) noexcept {
  switch (v) {
    case Variance::Constant: return "constant";
    case Variance::Covariant: return "covariant";
    case Variance::Contravariant: return "contravariant";
    case Variance::Mixed: return "mixed";
  }
  return "unknown";
}

namespace {

struct Occurrence {
  bool pos = false;
  bool neg = false;
};

void occurrences(const FunctorExpr& e, bool positive, Occurrence& occ) {
  using Op = FunctorExpr::Op;
  switch (e.op()) {
    case Op::Id: (positive ? occ.pos : occ.neg) = true; return;
    case Op::Const: return;
    case Op::Fun:
      occurrences(e.arg(0), !positive, occ);
      occurrences(e.arg(1), positive, occ);
      return;
    case Op::Compose:
      occurrences(substitute(e.arg(0), e.arg(1)), positive, occ);
      return;
    default:
      for (std::size_t i = 0; i < (e.op() == Op::Lift ? 1u : 2u); ++i) occurrences(e.arg(i), positive, occ);
  }
}

}  // namespace

Variance variance(const FunctorExpr& e) {
  Occurrence occ;
  occurrences(e, true, occ);
  if (occ.pos && occ.neg) return Variance::Mixed;
  if (occ.pos) return Variance::Covariant;
  if (occ.neg) return Variance::Contravariant;
  return Variance::Constant;
}

PosetRef apply_obj(const FunctorExpr& e, const PosetRef& p, const Caps& caps) {
  using Op = FunctorExpr::Op;
  switch (e.op()) {
    case Op::Id: return p;
    case Op::Const: return e.payload();
    case Op::Lift: return lift(apply_obj(e.arg(0), p, caps), caps);
    case Op::Prod: return product(apply_obj(e.arg(0), p, caps), apply_obj(e.arg(1), p, caps), caps);
    case Op::Sum: return coproduct(apply_obj(e.arg(0), p, caps), apply_obj(e.arg(1), p, caps), caps);
    case Op::Fun:
      return function_space_ref(apply_obj(e.arg(0), p, caps), apply_obj(e.arg(1), p, caps), caps)->poset;
    case Op::Compose: return apply_obj(e.arg(0), apply_obj(e.arg(1), p, caps), caps);
  }
  throw Error(Errc::invalid_input, "unknown functor node");
}

MonotoneMap apply_mixed(const FunctorExpr& e, const MonotoneMap* minus, const MonotoneMap& plus,
                        const Caps& caps) {
  using Op = FunctorExpr::Op;
  switch (e.op()) {
    case Op::Id: return plus;
    case Op::Const: return identity(e.payload());
    case Op::Lift: {
      MonotoneMap g = apply_mixed(e.arg(0), minus, plus, caps);
      std::vector<std::size_t> t(g.table().size() + 1, 0);
      for (std::size_t x = 0; x < g.table().size(); ++x) t[x + 1] = g(x) + 1;
      return MonotoneMap(lift(g.dom(), caps), lift(g.cod(), caps), std::move(t));
    }
    case Op::Prod: {
      MonotoneMap g = apply_mixed(e.arg(0), minus, plus, caps);
      MonotoneMap h = apply_mixed(e.arg(1), minus, plus, caps);
      const std::size_t m = h.dom()->size(), m2 = h.cod()->size();
      std::vector<std::size_t> t(g.dom()->size() * m);
      for (std::size_t i = 0; i < g.dom()->size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i * m + j] = g(i) * m2 + h(j);
      }
      return MonotoneMap(product(g.dom(), h.dom(), caps), product(g.cod(), h.cod(), caps), std::move(t));
    }
    case Op::Sum: {
      MonotoneMap g = apply_mixed(e.arg(0), minus, plus, caps);
      MonotoneMap h = apply_mixed(e.arg(1), minus, plus, caps);
      const std::size_t n = g.dom()->size(), n2 = g.cod()->size();
      std::vector<std::size_t> t(1 + n + h.dom()->size(), 0);
      for (std::size_t i = 0; i < n; ++i) t[1 + i] = 1 + g(i);
      for (std::size_t j = 0; j < h.dom()->size(); ++j) t[1 + n + j] = 1 + n2 + h(j);
      return MonotoneMap(coproduct(g.dom(), h.dom(), caps), coproduct(g.cod(), h.cod(), caps), std::move(t));
    }
    case Op::Fun: {
      if (!minus) {
        throw Error(Errc::invalid_input,
                    "the covariant map action is undefined on fun(...); use the pair action");
      }
      // h |-> H(minus, plus) . h . G(plus, minus)
      MonotoneMap g = apply_mixed(e.arg(0), &plus, *minus, caps);  // G(Y) -> G(X)
      MonotoneMap h = apply_mixed(e.arg(1), minus, plus, caps);    // H(X) -> H(Y)
      auto src = function_space_ref(g.cod(), h.dom(), caps);
      auto dst = function_space_ref(g.dom(), h.cod(), caps);
      std::vector<std::size_t> t(src->maps.size());
      std::vector<std::size_t> image(g.dom()->size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        const MonotoneMap& m = src->maps[i];
        for (std::size_t x = 0; x < image.size(); ++x) image[x] = h(m(g(x)));
        auto j = dst->find_table(image);
        if (!j) throw Error(Errc::invariant_violation, "fun action left the function space");
        t[i] = *j;
      }
      return MonotoneMap(src->poset, dst->poset, std::move(t));
    }
    case Op::Compose: {
      MonotoneMap inner_plus = apply_mixed(e.arg(1), minus, plus, caps);
      if (!minus) return apply_mixed(e.arg(0), nullptr, inner_plus, caps);
      MonotoneMap inner_minus = apply_mixed(e.arg(1), &plus, *minus, caps);
      return apply_mixed(e.arg(0), &inner_minus, inner_plus, caps);
    }
  }
  throw Error(Errc::invalid_input, "unknown functor node");
}

MonotoneMap apply_mor(const FunctorExpr& e, const MonotoneMap& f, const Caps& caps) {
  if (e.has_fun()) {
    throw Error(Errc::invalid_input,
                "apply_mor is defined only for fun-free expressions; use pr_apply_mor");
  }
  return apply_mixed(e, nullptr, f, caps);
}

PairHom pr_apply_mor(const FunctorExpr& e, const PairHom& f, const Caps& caps) {
  MonotoneMap l = apply_mixed(e, &f.r(), f.l(), caps);
  MonotoneMap r = apply_mixed(e, &f.l(), f.r(), caps);
  try {
    // The structural action sends monotone maps to monotone maps.
    return PairHom::from_monotone(f.kind(), std::move(l), std::move(r));
  } catch (const Error& err) {
    throw Error(Errc::invariant_violation,
                "PR " + e.to_string() + " produced an invalid pair: " + err.what(),
                {{"functor", e.to_string()}});
  }
}

bool check_functor_laws(const FunctorExpr& e, const std::vector<PairHom>& probes, const Caps& caps) {
  for (const auto& p : probes) {
    for (const PosetRef& obj : {p.source(), p.target()}) {
      PairHom id = pair_identity(obj, p.kind());
      if (!(pr_apply_mor(e, id, caps) == pair_identity(apply_obj(e, obj, caps), p.kind()))) return false;
    }
  }
  for (const auto& f : probes) {
    for (const auto& g : probes) {
      if (f.kind() != g.kind() || !same_poset(f.target(), g.source())) continue;
      PairHom lhs = pr_apply_mor(e, pair_compose(g, f), caps);
      PairHom rhs = pair_compose(pr_apply_mor(e, g, caps), pr_apply_mor(e, f, caps));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool check_local_continuity(const MixedAction& action, const PosetRef& a, const PosetRef& b) {
  const auto unbounded = std::numeric_limits<std::size_t>::max();
  const std::vector<MonotoneMap> fwd = monotone_maps(a, b, unbounded);
  const std::vector<MonotoneMap> back = monotone_maps(b, a, unbounded);
  for (const auto& m : back) {
    for (const auto& f : fwd) {
      for (const auto& g : fwd) {
        if (leq_map(f, g) && !leq_map(action(&m, f), action(&m, g))) return false;
      }
    }
  }
  for (const auto& p : fwd) {
    for (const auto& m : back) {
      for (const auto& m2 : back) {
        if (leq_map(m, m2) && !leq_map(action(&m, p), action(&m2, p))) return false;
      }
    }
  }
  return true;
}

bool check_local_continuity(const FunctorExpr& e, const PosetRef& a, const PosetRef& b,
                            const Caps& caps) {
  MixedAction raw = [&](const MonotoneMap* minus, const MonotoneMap& plus) {
    return apply_mixed(e, minus, plus, caps);
  };
  if (!check_local_continuity(raw, a, b)) return false;
  for (PairKind kind : {PairKind::EP, PairKind::ADJ}) {
    const std::vector<PairHom> pairs = enumerate_pairs(a, b, kind, caps);
    std::vector<PairHom> images;
    for (const auto& f : pairs) images.push_back(pr_apply_mor(e, f, caps));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (!pair_leq(pairs[i], pairs[j])) continue;
        if (!pair_leq(images[i], images[j])) return false;
        // The two-term chain [f, g] stabilizes at 1; its image must too.
        MonotoneMap lub_l = lub_map_chain({{images[i].l(), images[j].l()}, 1});
        MonotoneMap lub_r = lub_map_chain({{images[i].r(), images[j].r()}, 1});
        if (!(lub_l == images[j].l() && lub_r == images[j].r())) return false;
      }
    }
  }
  return true;
}

Preservation preserves_cocone(const FunctorExpr& e, const Cocone& k, const Caps& caps) {
  Preservation out;
  Cocone& img = out.image;
  img.chain.kind = k.chain.kind;
  img.chain.stab_index = k.chain.stab_index;
  for (const auto& obj : k.chain.objects) img.chain.objects.push_back(apply_obj(e, obj, caps));
  for (const auto& f : k.chain.links) img.chain.links.push_back(pr_apply_mor(e, f, caps));
  img.apex = apply_obj(e, k.apex, caps);
  for (const auto& c : k.legs) img.legs.push_back(pr_apply_mor(e, c, caps));
  out.colimiting = is_colimiting(img, caps);
  out.ld = check_local_determination(img);
  return out;
}

const std::map<std::string, PosetRef>& builtin_posets() {
  static const std::map<std::string, PosetRef> table = {
      {"1", one_point()},     {"2-chain", chain(2)}, {"3-chain", chain(3)},
      {"diamond", diamond()}, {"vee", vee()},
  };
  return table;
}

std::vector<FunctorExpr> functor_family(std::size_t max_height,
                                        const std::vector<FunctorExpr>& constants) {
  std::vector<FunctorExpr> all;
  std::set<std::string> seen;
  auto add = [&](FunctorExpr e) {
    if (seen.insert(e.to_string()).second) all.push_back(std::move(e));
  };
  add(FunctorExpr::id());
  for (const auto& c : constants) add(c);
  std::size_t lower_end = 0;  // all[0, lower_end) have height < current
  for (std::size_t h = 1; h <= max_height; ++h) {
    const std::vector<FunctorExpr> lower(all.begin(), all.end());
    lower_end = lower.size();
    auto tall = [&](const FunctorExpr& a, const FunctorExpr& b) {
      return std::max(a.height(), b.height()) + 1 == h;
    };
    for (std::size_t i = 0; i < lower_end; ++i) {
      if (lower[i].height() + 1 == h) add(FunctorExpr::lift(lower[i]));
    }
    for (auto make : {&FunctorExpr::prod, &FunctorExpr::sum, &FunctorExpr::fun, &FunctorExpr::compose}) {
      for (const auto& a : lower) {
        for (const auto& b : lower) {
          if (tall(a, b)) add(make(a, b));
        }
      }
    }
  }
  return all;
}

}  // namespace epsolve
