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
#include "epsolve/suite.hpp"

#include <map>

#include "epsolve/parallel.hpp"
#include "epsolve/solver.hpp"

namespace epsolve {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Renamed copies are shared per source poset so that functor images of equal
// chain objects are computed once.
PairHom renaming_iso(const PosetRef& p, PairKind kind, std::map<const FinPoset*, PosetRef>& copies) {
  PosetRef& copy = copies[p.get()];
  if (!copy) {
    std::vector<std::string> names;
    for (const auto& e : p->elems()) names.push_back(e + "'");
    copy = rename(p, std::move(names));
  }
  std::vector<std::size_t> id(p->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return PairHom(kind, MonotoneMap(p, copy, id), MonotoneMap(copy, p, id));
}

json cocone_payload(const Cocone& k) {
  JsonWriter w;
  return w.cocone_document(k);
}

// Per-chain tallies merged in index order.
struct Tally {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::size_t converse_violations = 0;
  std::size_t ld_true = 0;
  json counterexample;
};

PropertyResult merge(std::string id, std::string title, const std::vector<Tally>& tallies) {
  PropertyResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  std::size_t converse = 0, ld_true = 0;
  for (const auto& t : tallies) {
    r.checked += t.checked;
    r.skipped += t.skipped;
    r.violations += t.violations;
    converse += t.converse_violations;
    ld_true += t.ld_true;
    if (r.counterexample.is_null() && !t.counterexample.is_null()) r.counterexample = t.counterexample;
  }
  r.stats["locally_determined"] = ld_true;
  r.stats["colimiting_but_not_ld"] = converse;
  r.pass = r.violations == 0;
  return r;
}

}  // namespace

json to_json(const PropertyResult& r) {
  return {{"id", r.id},           {"title", r.title},
          {"pass", r.pass},       {"checked", r.checked},
          {"skipped", r.skipped}, {"violations", r.violations},
          {"counterexample", r.counterexample}, {"stats", r.stats}};
}

std::vector<OmegaChain> random_chains(PairKind kind, const SuiteOptions& opts) {
  std::vector<PosetRef> library;
  for (const auto& p : posets_up_to_iso(opts.max_size)) {
    if (p->size() > 0) library.push_back(p);
  }
  std::mt19937_64 rng(opts.seed * 2 + (kind == PairKind::ADJ ? 1 : 0));
  std::map<const FinPoset*, PosetRef> copies;
  std::vector<OmegaChain> chains;
  for (std::size_t c = 0; c < opts.cases; ++c) {
    OmegaChain d;
    d.kind = kind;
    const std::size_t links = 1 + pick(rng, std::max<std::size_t>(opts.max_len, 1));
    const std::size_t witness = pick(rng, links + 1);
    d.objects.push_back(library[pick(rng, library.size())]);
    for (std::size_t n = 0; n < links; ++n) {
      const PosetRef& cur = d.objects.back();
      std::optional<PairHom> link;
      if (n < witness) {
        for (int attempt = 0; attempt < 64 && !link; ++attempt) {
          const PosetRef& cand = library[pick(rng, library.size())];
          if (cur->size() * cand->size() > opts.caps.hom) continue;
          auto pairs = enumerate_pairs(cur, cand, kind, opts.caps);
          if (!pairs.empty()) link = pairs[pick(rng, pairs.size())];
        }
      } else if (pick(rng, 2) == 1) {
        link = renaming_iso(cur, kind, copies);
      }
      if (!link) link = pair_identity(cur, kind);
      d.objects.push_back(link->target());
      d.links.push_back(*link);
    }
    d.stab_index = witness;
    validate_chain(d);
    chains.push_back(std::move(d));
  }
  return chains;
}

Cocone non_ld_fixture(std::size_t length) {
  PosetRef unit = one_point();
  PosetRef two = chain(2);
  Cocone k;
  k.chain.kind = PairKind::EP;
  k.chain.objects.assign(length, unit);
  k.chain.links.assign(length - 1, pair_identity(unit));
  k.chain.stab_index = 0;
  k.apex = two;
  k.legs.assign(length, bottom_inclusion(two));
  return k;
}

OmegaChain bottom_inclusion_chain() {
  PosetRef two = chain(2);
  OmegaChain d;
  d.kind = PairKind::EP;
  d.objects = {one_point(), two, two};
  d.links = {bottom_inclusion(two), pair_identity(two)};
  d.stab_index = 1;
  return d;
}

OmegaChain adjoint_top_chain() {
  PosetRef two = chain(2);
  PosetRef unit = one_point();
  OmegaChain d;
  d.kind = PairKind::ADJ;
  d.objects = {two, unit, unit};
  d.links = {PairHom(PairKind::ADJ, constant_map(two, unit, 0), constant_map(unit, two, 1)),
             pair_identity(unit, PairKind::ADJ)};
  d.stab_index = 1;
  return d;
}

FinOCategory two_object_category() { return full_subcategory({{"1", one_point()}, {"2-chain", chain(2)}}); }

std::vector<FunctorExpr> theorem_family(std::size_t height) {
  return functor_family(height, {FunctorExpr::constant(one_point(), "1"),
                                 FunctorExpr::constant(chain(2), "2-chain")});
}

PropertyResult property_ld_implies_colimiting(PairKind kind, const std::vector<OmegaChain>& chains,
                                              const SuiteOptions& opts) {
  std::vector<PosetRef> apexes;
  for (const auto& p : posets_up_to_iso(opts.apex_max)) {
    if (p->size() > 0) apexes.push_back(p);
  }
  std::vector<Tally> tallies(chains.size());
  detail::parallel_for(
      chains.size(),
      [&](std::size_t i) {
        Tally& t = tallies[i];
        const Cocone canon = colimit_finite(chains[i]);
        for (const auto& apex : apexes) {
          if (canon.apex->size() * apex->size() > opts.caps.hom) {
            ++t.skipped;
            continue;
          }
          // Cocones with this apex correspond to pairs u: Δ_N -> apex via
          // legs u . κ_n.
          for (const PairHom& u : enumerate_pairs(canon.apex, apex, kind, opts.caps)) {
            Cocone k = transport(canon, u);
            ++t.checked;
            const bool ld = check_local_determination(k).verdict;
            const bool colim = is_colimiting(k, opts.caps);
            t.ld_true += ld;
            if (ld && !colim) {
              ++t.violations;
              if (t.counterexample.is_null()) t.counterexample = cocone_payload(k);
            }
            if (colim && !ld) ++t.converse_violations;
          }
        }
      },
      opts.threads);
  return merge(kind == PairKind::EP ? "P1" : "P4.1",
               std::string("locally determined cocones are colimiting (") + kind_name(kind) + ")", tallies);
}

PropertyResult property_preservation(PairKind kind, const std::vector<OmegaChain>& chains,
                                     const SuiteOptions& opts) {
  const std::vector<FunctorExpr> family = theorem_family(opts.functor_height);
  std::vector<Cocone> colimits;
  colimits.reserve(chains.size());
  for (const auto& d : chains) colimits.push_back(colimit_finite(d));
  // Functor-major order keeps each functor's image posets warm in the
  // construction memo across all chains.
  std::vector<Tally> tallies(family.size());
  detail::parallel_for(
      family.size(),
      [&](std::size_t i) {
        Tally& t = tallies[i];
        const FunctorExpr& f = family[i];
        for (const Cocone& canon : colimits) {
          Preservation p;
          try {
            p = preserves_cocone(f, canon, opts.caps);
          } catch (const Error& e) {
            // Beyond the caps, or a sum over an unpointed image.
            if (e.code() == Errc::cap_exceeded || e.code() == Errc::invalid_input) {
              ++t.skipped;
              continue;
            }
            throw;
          }
          ++t.checked;
          t.ld_true += p.ld.verdict;
          if (!p.colimiting || !p.ld.verdict) {
            ++t.violations;
            if (t.counterexample.is_null()) {
              t.counterexample = {{"functor", f.to_string()}, {"cocone", cocone_payload(canon)}};
            }
          }
        }
      },
      opts.threads);
  PropertyResult r = merge(kind == PairKind::EP ? "P2" : "P4.2",
                           std::string("PR F preserves colimits and local determination (") +
                               kind_name(kind) + ")",
                           tallies);
  r.stats["family_size"] = family.size();
  r.stats.erase("colimiting_but_not_ld");
  return r;
}

PropertyResult property_fixture_not_ld(const SuiteOptions& opts) {
  PropertyResult r;
  r.id = "P3";
  r.title = "non-locally-determined fixture is not colimiting";
  const Cocone fx = non_ld_fixture();
  const LdReport ld = check_local_determination_ep(fx);
  const bool all_ones = ld.defects == std::vector<std::size_t>(fx.legs.size(), 1);
  const bool colim = is_colimiting(fx, opts.caps);
  const bool image_colim = preserves_cocone(FunctorExpr::id(), fx, opts.caps).colimiting;
  r.checked = 1;
  r.pass = all_ones && !ld.verdict && !colim && !image_colim;
  r.violations = r.pass ? 0 : 1;
  r.stats = {{"defects", ld.defects},
             {"verdict", ld.verdict},
             {"is_colimiting", colim},
             {"identity_image_colimiting", image_colim}};
  return r;
}

PropertyResult property_ep_second_condition(const std::vector<OmegaChain>& ep_chains) {
  std::vector<Tally> tallies(ep_chains.size());
  detail::parallel_for(ep_chains.size(), [&](std::size_t i) {
    Tally& t = tallies[i];
    const Cocone canon = colimit_finite(ep_chains[i]);
    const Cocone adj = with_kind(canon, PairKind::ADJ);
    const LdReport rep = check_local_determination_adj(adj);
    bool ok = rep.adj_condition;
    for (std::size_t n = 0; n < adj.legs.size() && ok; ++n) {
      ok = compose(adj.legs[n].r(), adj.legs[n].l()) == identity(adj.chain.objects[n]);
      for (std::size_t m = n; m <= adj.chain.last() && ok; ++m) {
        PairHom d = link_composite(adj.chain, n, m);
        ok = compose(d.r(), d.l()) == identity(adj.chain.objects[n]);
      }
    }
    ++t.checked;
    t.ld_true += rep.verdict;
    if (!ok) {
      ++t.violations;
      if (t.counterexample.is_null()) t.counterexample = cocone_payload(canon);
    }
  });
  PropertyResult r = merge("P4.3", "ep chains meet the adjoint second condition with identities", tallies);
  r.stats.erase("colimiting_but_not_ld");
  return r;
}

PropertyResult property_yoneda(const SuiteOptions&) {
  PropertyResult r;
  r.id = "P5";
  r.title = "Yoneda embedding: fully faithful, pointwise lubs, proof equation";
  const FinOCategory k = two_object_category();
  const std::size_t one = k.object_index("1"), two = k.object_index("2-chain");
  const bool ff = check_fully_faithful(k);
  const Presheaf y1 = yoneda(k, one), y2 = yoneda(k, two);
  const std::size_t n12 = enumerate_nat_trans(k, y1, y2).size();
  const std::size_t n21 = enumerate_nat_trans(k, y2, y1).size();
  const bool step_colimit = verify_proof_step(k, colimit_finite(bottom_inclusion_chain())).holds();
  const bool step_fixture = verify_proof_step(k, non_ld_fixture()).holds();
  r.checked = 1;
  r.pass = ff && n12 == 2 && n21 == 1 && step_colimit && !step_fixture;
  r.violations = r.pass ? 0 : 1;
  r.stats = {{"fully_faithful", ff},
             {"nat_y1_y2", n12},
             {"nat_y2_y1", n21},
             {"proof_step_colimit", step_colimit},
             {"proof_step_fixture", step_fixture}};
  return r;
}

PropertyResult property_solver_growth(const SuiteOptions& opts) {
  PropertyResult r;
  r.id = "P6";
  r.title = "solver growth and determinism for D = lift(D)";
  const std::string source = "D = lift(D)";
  EquationSpec spec = parse_equation(source);
  spec.depth = 4;
  spec.caps = opts.caps;
  const std::string first = solve_report(spec, opts.seed, source).dump(2);
  const std::string second = solve_report(spec, opts.seed, source).dump(2);
  const json rep = json::parse(first);
  std::vector<std::size_t> sizes;
  for (const auto& s : rep.at("stages")) sizes.push_back(s.at("size").get<std::size_t>());
  const auto defects = rep.at("ld").at("defects").get<std::vector<std::size_t>>();
  const bool ok_sizes = sizes == std::vector<std::size_t>{1, 2, 3, 4, 5};
  const bool ok_defects = defects == std::vector<std::size_t>{4, 3, 2, 1, 0};
  r.checked = 1;
  r.pass = ok_sizes && ok_defects && first == second;
  r.violations = r.pass ? 0 : 1;
  r.stats = {{"sizes", sizes}, {"defects", defects}, {"byte_identical", first == second}};
  return r;
}

json run_theorem_suite(const SuiteOptions& opts) {
  const std::vector<OmegaChain> ep = random_chains(PairKind::EP, opts);
  const std::vector<OmegaChain> adj = random_chains(PairKind::ADJ, opts);

  std::vector<PropertyResult> results;
  results.push_back(property_ld_implies_colimiting(PairKind::EP, ep, opts));
  results.push_back(property_preservation(PairKind::EP, ep, opts));
  results.push_back(property_fixture_not_ld(opts));

  PropertyResult p4;
  p4.id = "P4";
  p4.title = "adjoint pairs: local determination, preservation, ep second condition";
  p4.pass = true;
  json parts = json::array();
  for (auto sub : {property_ld_implies_colimiting(PairKind::ADJ, adj, opts),
                   property_preservation(PairKind::ADJ, adj, opts), property_ep_second_condition(ep)}) {
    p4.pass = p4.pass && sub.pass;
    p4.checked += sub.checked;
    p4.skipped += sub.skipped;
    p4.violations += sub.violations;
    if (p4.counterexample.is_null() && !sub.counterexample.is_null()) p4.counterexample = sub.counterexample;
    parts.push_back(to_json(sub));
  }
  p4.stats["parts"] = std::move(parts);
  results.push_back(std::move(p4));
  results.push_back(property_yoneda(opts));
  results.push_back(property_solver_growth(opts));

  json out;
  out["seed"] = opts.seed;
  out["parameters"] = {{"cases", opts.cases},          {"max_size", opts.max_size},
                       {"max_len", opts.max_len},      {"apex_max", opts.apex_max},
                       {"functor_height", opts.functor_height}, {"cap_elems", opts.caps.elems},
                       {"hom_cap", opts.caps.hom}};
  out["scope"] =
      "finite pointed-or-not posets and monotone maps; the functor quantifier ranges over the generated "
      "family only";
  bool all = true;
  out["properties"] = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    out["properties"].push_back(to_json(r));
  }
  out["all_pass"] = all;
  return out;
}

}  // namespace epsolve
