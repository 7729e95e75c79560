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
#include "epsolve/chains.hpp"

#include <string>

namespace epsolve {

namespace {

std::size_t moved_count(const MonotoneMap& f, const MonotoneMap& g) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < f.table().size(); ++x) n += f(x) != g(x);
  return n;
}

PairHom inverse(const PairHom& iso) { return PairHom::from_monotone(iso.kind(), iso.r(), iso.l()); }

std::size_t effective_witness(const OmegaChain& d) { return d.stab_index.value_or(d.last()); }

void require_cocone(const Cocone& k) {
  if (!is_cocone(k)) throw Error(Errc::invalid_input, "legs do not form a cocone over the chain");
}

}  // namespace

void validate_chain(const OmegaChain& d) {
  if (d.objects.empty()) throw Error(Errc::invalid_input, "chain needs at least one object");
  if (d.links.size() + 1 != d.objects.size()) {
    throw Error(Errc::invalid_input, "chain needs exactly one link between consecutive objects");
  }
  for (std::size_t n = 0; n < d.links.size(); ++n) {
    const PairHom& f = d.links[n];
    if (f.kind() != d.kind) {
      throw Error(Errc::invariant_violation, "link " + std::to_string(n) + " has the wrong kind",
                  {{"link", n}});
    }
    if (!same_poset(f.source(), d.objects[n]) || !same_poset(f.target(), d.objects[n + 1])) {
      throw Error(Errc::shape_mismatch,
                  "link " + std::to_string(n) + " does not run between objects " +
                      std::to_string(n) + " and " + std::to_string(n + 1),
                  {{"link", n}});
    }
  }
  if (d.stab_index) {
    if (*d.stab_index > d.last()) {
      throw Error(Errc::invariant_violation, "stabilization index beyond the chain",
                  {{"stab_index", *d.stab_index}});
    }
    for (std::size_t n = *d.stab_index; n < d.links.size(); ++n) {
      if (!is_iso(d.links[n])) {
        throw Error(Errc::invariant_violation,
                    "stabilization witness fails: link " + std::to_string(n) + " is not an isomorphism",
                    {{"link", n}, {"stab_index", *d.stab_index}});
      }
    }
  }
}

std::size_t stabilization_point(const OmegaChain& d) {
  std::size_t n = d.links.size();
  while (n > 0 && is_iso(d.links[n - 1])) --n;
  return n;
}

OmegaChain truncate(const OmegaChain& d, std::size_t depth) {
  if (depth > d.last()) throw Error(Errc::invalid_input, "truncation depth beyond the chain");
  OmegaChain t;
  t.kind = d.kind;
  t.objects.assign(d.objects.begin(), d.objects.begin() + static_cast<std::ptrdiff_t>(depth + 1));
  t.links.assign(d.links.begin(), d.links.begin() + static_cast<std::ptrdiff_t>(depth));
  return t;
}

PairHom link_composite(const OmegaChain& d, std::size_t n, std::size_t m) {
  if (n > m || m > d.last()) {
    throw Error(Errc::invalid_input,
                "link_composite(" + std::to_string(n) + ", " + std::to_string(m) + ") out of range",
                {{"n", n}, {"m", m}, {"last", d.last()}});
  }
  PairHom acc = pair_identity(d.objects[n], d.kind);
  for (std::size_t i = n; i < m; ++i) acc = pair_compose(d.links[i], acc);
  return acc;
}

bool is_cocone(const Cocone& k) {
  if (k.legs.size() != k.chain.objects.size()) return false;
  for (std::size_t n = 0; n < k.legs.size(); ++n) {
    const PairHom& c = k.legs[n];
    if (c.kind() != k.chain.kind) return false;
    if (!same_poset(c.source(), k.chain.objects[n]) || !same_poset(c.target(), k.apex)) return false;
  }
  for (std::size_t n = 0; n < k.chain.links.size(); ++n) {
    if (!(pair_compose(k.legs[n + 1], k.chain.links[n]) == k.legs[n])) return false;
  }
  return true;
}

Cocone colimit_finite(const OmegaChain& d) {
  if (!d.stab_index) {
    throw Error(Errc::invalid_input, "colimit_finite needs a stabilization witness");
  }
  validate_chain(d);
  const std::size_t N = *d.stab_index;
  Cocone k{d, d.objects[N], {}};
  for (std::size_t n = 0; n <= d.last(); ++n) {
    if (n <= N) {
      k.legs.push_back(link_composite(d, n, N));
    } else {
      k.legs.push_back(inverse(link_composite(d, N, n)));
    }
  }
  return k;
}

Cocone transport(const Cocone& k, const PairHom& u) {
  Cocone t{k.chain, u.target(), {}};
  for (const auto& c : k.legs) t.legs.push_back(pair_compose(u, c));
  return t;
}

Cocone with_kind(const Cocone& k, PairKind kind) {
  Cocone t{k.chain, k.apex, {}};
  t.chain.kind = kind;
  t.chain.links.clear();
  for (const auto& f : k.chain.links) t.chain.links.push_back(f.as_kind(kind));
  for (const auto& c : k.legs) t.legs.push_back(c.as_kind(kind));
  return t;
}

namespace {

// Shared first condition of both definitions.
void first_condition(const Cocone& k, LdReport& rep) {
  const MonotoneMap id = identity(k.apex);
  MapChain e;
  e.stab_index = effective_witness(k.chain);
  for (const auto& c : k.legs) {
    e.terms.push_back(compose(c.l(), c.r()));
    rep.defects.push_back(moved_count(e.terms.back(), id));
  }
  for (std::size_t n = 0; n + 1 < e.terms.size(); ++n) {
    if (!leq_map(e.terms[n], e.terms[n + 1])) {
      throw Error(Errc::invariant_violation,
                  "c_n^L . c_n^R is not increasing at stage " + std::to_string(n), {{"stage", n}});
    }
  }
  rep.lub_is_identity = lub_map_chain(e) == id;
}

}  // namespace

LdReport check_local_determination_ep(const Cocone& k) {
  if (k.chain.kind != PairKind::EP) {
    throw Error(Errc::invalid_input, "ep local determination needs an EP cocone");
  }
  validate_chain(k.chain);
  require_cocone(k);
  LdReport rep;
  rep.kind = PairKind::EP;
  first_condition(k, rep);
  rep.verdict = rep.lub_is_identity;
  return rep;
}

LdReport check_local_determination_adj(const Cocone& k) {
  validate_chain(k.chain);
  require_cocone(k);
  LdReport rep;
  rep.kind = PairKind::ADJ;
  first_condition(k, rep);
  const std::size_t last = k.chain.last();
  const std::size_t witness = effective_witness(k.chain);
  std::vector<std::vector<std::size_t>> residuals;
  for (std::size_t n = 0; n <= last; ++n) {
    const MonotoneMap target = compose(k.legs[n].r(), k.legs[n].l());
    MapChain t;
    t.stab_index = (witness > n ? witness : n) - n;
    std::vector<std::size_t> row;
    for (std::size_t m = n; m <= last; ++m) {
      PairHom dnm = link_composite(k.chain, n, m);
      t.terms.push_back(compose(dnm.r(), dnm.l()));
      row.push_back(moved_count(t.terms.back(), target));
    }
    if (!(lub_map_chain(t) == target)) rep.adj_condition = false;
    residuals.push_back(std::move(row));
  }
  rep.adj_residuals = std::move(residuals);
  rep.verdict = rep.lub_is_identity && rep.adj_condition;
  return rep;
}

LdReport check_local_determination(const Cocone& k) {
  return k.chain.kind == PairKind::EP ? check_local_determination_ep(k)
                                      : check_local_determination_adj(k);
}

bool is_colimiting(const Cocone& k, const Caps& caps) {
  require_cocone(k);
  const Cocone canon = colimit_finite(k.chain);
  auto mediates = [&](const PairHom& u) {
    for (std::size_t n = 0; n < k.legs.size(); ++n) {
      if (!(pair_compose(u, canon.legs[n]) == k.legs[n])) return false;
    }
    return true;
  };
  if (canon.apex->size() * k.apex->size() <= caps.hom) {
    // The left halves of u . κ_n = c_n pin u.l on the image of each κ_n.l;
    // the search skips every pair that already disagrees there.
    std::vector<std::optional<std::size_t>> fixed(canon.apex->size());
    for (std::size_t n = 0; n < k.legs.size(); ++n) {
      const MonotoneMap& kappa = canon.legs[n].l();
      const MonotoneMap& c = k.legs[n].l();
      for (std::size_t e = 0; e < kappa.table().size(); ++e) {
        auto& slot = fixed[kappa(e)];
        if (slot && *slot != c(e)) return false;
        slot = c(e);
      }
    }
    for (const PairHom& u : enumerate_pairs_fixing(canon.apex, k.apex, k.chain.kind, fixed, caps)) {
      if (mediates(u) && is_iso(u)) return true;
    }
    return false;
  }
  const PairHom& forced = k.legs[*k.chain.stab_index];
  return mediates(forced) && is_iso(forced);
}

ThreadApproximant thread_approximant(const OmegaChain& d, std::size_t depth) {
  validate_chain(d);
  if (depth > d.last()) throw Error(Errc::invalid_input, "approximant depth beyond the chain");
  const PosetRef& top = d.objects[depth];
  std::vector<PairHom> to_top;
  for (std::size_t k = 0; k <= depth; ++k) to_top.push_back(link_composite(d, k, depth));

  ThreadApproximant out;
  PosetBuilder b(top->size());
  for (std::size_t y = 0; y < top->size(); ++y) {
    Thread t;
    std::string name = "<";
    for (std::size_t k = 0; k <= depth; ++k) {
      t.components.push_back(to_top[k].r()(y));
      if (k) name += "|";
      name += d.objects[k]->name(t.components.back());
    }
    b.add_name(name + ">");
    out.threads.push_back(std::move(t));
  }
  // Componentwise order; the top component alone decides it since the
  // projections are monotone.
  for (std::size_t i = 0; i < top->size(); ++i) {
    for (std::size_t j = 0; j < top->size(); ++j) {
      bool le = true;
      for (std::size_t k = 0; k <= depth && le; ++k) {
        le = d.objects[k]->leq(out.threads[i].components[k], out.threads[j].components[k]);
      }
      if (le) b.set_leq(i, j);
    }
  }
  if (top->bottom()) b.set_bottom(*top->bottom());
  PosetRef apex = b.finish();

  out.cocone.chain = truncate(d, depth);
  out.cocone.apex = apex;
  for (std::size_t n = 0; n <= depth; ++n) {
    // Thread i corresponds to element i of Δ_depth.
    MonotoneMap l(d.objects[n], apex, to_top[n].l().table());
    std::vector<std::size_t> r(apex->size());
    for (std::size_t i = 0; i < apex->size(); ++i) r[i] = out.threads[i].components[n];
    out.cocone.legs.emplace_back(d.kind, std::move(l), MonotoneMap(apex, d.objects[n], std::move(r)));
  }
  return out;
}

}  // namespace epsolve
