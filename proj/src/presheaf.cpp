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
#include "epsolve/presheaf.hpp"

#include <algorithm>

namespace epsolve {

namespace {

Error law_failure(const std::string& what, nlohmann::json detail = nullptr) {
  return Error(Errc::invariant_violation, what, std::move(detail));
}

}  // namespace

FinOCategory::FinOCategory(std::vector<std::string> objects, std::vector<std::vector<PosetRef>> hom,
                           std::vector<std::vector<std::size_t>> comp, std::vector<std::size_t> ids)
    : objects_(std::move(objects)), hom_(std::move(hom)), comp_(std::move(comp)), ids_(std::move(ids)) {
  const std::size_t k = objects_.size();
  if (hom_.size() != k || ids_.size() != k || comp_.size() != k * k * k) {
    throw law_failure("category tables do not match the object count");
  }
  for (const auto& row : hom_) {
    if (row.size() != k) throw law_failure("hom table must be square");
    for (const auto& p : row) {
      if (!p) throw law_failure("missing hom-poset");
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (ids_[a] >= hom_[a][a]->size()) throw law_failure("identity token outside hom(a,a)");
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        const auto& t = comp_[(a * k + b) * k + c];
        if (t.size() != hom_[b][c]->size() * hom_[a][b]->size()) {
          throw law_failure("composition table " + objects_[a] + "->" + objects_[b] + "->" +
                                objects_[c] + " is incomplete",
                            {{"a", objects_[a]}, {"b", objects_[b]}, {"c", objects_[c]}});
        }
        for (std::size_t v : t) {
          if (v >= hom_[a][c]->size()) throw law_failure("composite outside hom(a,c)");
        }
      }
    }
  }
  // Unit laws.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t f = 0; f < hom_[a][b]->size(); ++f) {
        if (compose(a, a, b, f, ids_[a]) != f || compose(a, b, b, ids_[b], f) != f) {
          throw law_failure("unit law fails", {{"a", objects_[a]}, {"b", objects_[b]}, {"token", f}});
        }
      }
    }
  }
  // Associativity and monotonicity of composition.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        const FinPoset& ab = *hom_[a][b];
        const FinPoset& bc = *hom_[b][c];
        const FinPoset& ac = *hom_[a][c];
        for (std::size_t g = 0; g < bc.size(); ++g) {
          for (std::size_t f = 0; f < ab.size(); ++f) {
            for (std::size_t f2 = 0; f2 < ab.size(); ++f2) {
              if (ab.leq(f, f2) && !ac.leq(compose(a, b, c, g, f), compose(a, b, c, g, f2))) {
                throw law_failure("composition is not monotone in its first argument");
              }
            }
            for (std::size_t g2 = 0; g2 < bc.size(); ++g2) {
              if (bc.leq(g, g2) && !ac.leq(compose(a, b, c, g, f), compose(a, b, c, g2, f))) {
                throw law_failure("composition is not monotone in its second argument");
              }
            }
            for (std::size_t d = 0; d < k; ++d) {
              for (std::size_t h = 0; h < hom_[c][d]->size(); ++h) {
                std::size_t left = compose(a, c, d, h, compose(a, b, c, g, f));
                std::size_t right = compose(a, b, d, compose(b, c, d, h, g), f);
                if (left != right) throw law_failure("composition is not associative");
              }
            }
          }
        }
      }
    }
  }
}

std::size_t FinOCategory::object_index(const std::string& name) const {
  for (std::size_t a = 0; a < objects_.size(); ++a) {
    if (objects_[a] == name) return a;
  }
  throw Error(Errc::not_found, "unknown object '" + name + "'");
}

const std::vector<std::size_t>& FinOCategory::comp_table(std::size_t a, std::size_t b, std::size_t c) const {
  const std::size_t k = objects_.size();
  return comp_.at((a * k + b) * k + c);
}

std::size_t FinOCategory::compose(std::size_t a, std::size_t b, std::size_t c, std::size_t g,
                                  std::size_t f) const {
  return comp_table(a, b, c).at(g * hom_[a][b]->size() + f);
}

FinOCategory full_subcategory(const std::vector<std::pair<std::string, PosetRef>>& objects,
                              const Caps& caps) {
  const std::size_t k = objects.size();
  FinOCategory::Carriers car;
  std::vector<std::string> names;
  for (const auto& [name, p] : objects) {
    names.push_back(name);
    car.posets.push_back(p);
  }
  car.homs.resize(k);
  std::vector<std::vector<PosetRef>> hom(k, std::vector<PosetRef>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      car.homs[a].push_back(function_space(car.posets[a], car.posets[b], caps));
      hom[a][b] = car.homs[a][b].poset;
    }
  }
  std::vector<std::vector<std::size_t>> comp(k * k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        auto& t = comp[(a * k + b) * k + c];
        const auto& fs = car.homs[a][b].maps;
        for (const auto& g : car.homs[b][c].maps) {
          for (const auto& f : fs) t.push_back(car.homs[a][c].index_of(epsolve::compose(g, f)));
        }
      }
    }
  }
  std::vector<std::size_t> ids;
  for (std::size_t a = 0; a < k; ++a) ids.push_back(car.homs[a][a].index_of(identity(car.posets[a])));
  FinOCategory cat(std::move(names), std::move(hom), std::move(comp), std::move(ids));
  cat.carriers_ = std::move(car);
  return cat;
}

std::optional<std::size_t> find_object(const FinOCategory& k, const PosetRef& p) {
  if (!k.carriers()) return std::nullopt;
  const auto& posets = k.carriers()->posets;
  for (std::size_t a = 0; a < posets.size(); ++a) {
    if (same_poset(posets[a], p)) return a;
  }
  return std::nullopt;
}

Arrow arrow_of(const FinOCategory& k, const MonotoneMap& f) {
  auto a = find_object(k, f.dom());
  auto b = find_object(k, f.cod());
  if (!a || !b) throw Error(Errc::invalid_input, "map endpoints are not objects of the O-category");
  return {*a, *b, k.carriers()->homs[*a][*b].index_of(f)};
}

void validate_presheaf(const FinOCategory& k, const Presheaf& p) {
  const std::size_t n = k.size();
  if (p.at.size() != n || p.act.size() != n) throw law_failure("presheaf tables do not match K");
  for (std::size_t a = 0; a < n; ++a) {
    if (p.act[a].size() != n) throw law_failure("presheaf action table must be square");
    for (std::size_t b = 0; b < n; ++b) {
      if (p.act[a][b].size() != k.hom(a, b)->size()) throw law_failure("presheaf action incomplete");
      for (const auto& m : p.act[a][b]) {
        if (!same_poset(m.dom(), p.at[b]) || !same_poset(m.cod(), p.at[a]) || !is_monotone(m)) {
          throw law_failure("presheaf action has the wrong shape or is not monotone");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!(p.act[a][a][k.id(a)] == identity(p.at[a]))) throw law_failure("presheaf does not preserve identities");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t g = 0; g < k.hom(b, c)->size(); ++g) {
          for (std::size_t f = 0; f < k.hom(a, b)->size(); ++f) {
            const auto& gf = p.act[a][c][k.compose(a, b, c, g, f)];
            if (!(gf == epsolve::compose(p.act[a][b][f], p.act[b][c][g]))) {
              throw law_failure("presheaf does not preserve composites");
            }
          }
        }
      }
      const FinPoset& h = *k.hom(a, b);
      for (std::size_t f = 0; f < h.size(); ++f) {
        for (std::size_t f2 = 0; f2 < h.size(); ++f2) {
          if (h.leq(f, f2) && !leq_map(p.act[a][b][f], p.act[a][b][f2])) {
            throw law_failure("presheaf action is not locally monotone");
          }
        }
      }
    }
  }
}

bool is_natural(const FinOCategory& k, const Presheaf& p, const Presheaf& q, const NatTrans& t) {
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = 0; b < k.size(); ++b) {
      for (std::size_t f = 0; f < k.hom(a, b)->size(); ++f) {
        if (!(compose(q.act[a][b][f], t.components[b]) == compose(t.components[a], p.act[a][b][f]))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool nat_leq(const NatTrans& s, const NatTrans& t) {
  if (s.components.size() != t.components.size()) throw Error(Errc::shape_mismatch, "nat_leq: shapes differ");
  for (std::size_t a = 0; a < s.components.size(); ++a) {
    if (!leq_map(s.components[a], t.components[a])) return false;
  }
  return true;
}

NatTrans nat_compose(const NatTrans& t, const NatTrans& s) {
  NatTrans out;
  for (std::size_t a = 0; a < s.components.size(); ++a) {
    out.components.push_back(compose(t.components.at(a), s.components[a]));
  }
  return out;
}

NatTrans nat_identity(const Presheaf& p) {
  NatTrans out;
  for (const auto& obj : p.at) out.components.push_back(identity(obj));
  return out;
}

Presheaf yoneda(const FinOCategory& k, std::size_t x) {
  if (x >= k.size()) throw Error(Errc::not_found, "yoneda: unknown object");
  const std::size_t n = k.size();
  Presheaf p;
  for (std::size_t a = 0; a < n; ++a) p.at.push_back(k.hom(a, x));
  p.act.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    p.act[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < k.hom(a, b)->size(); ++f) {
        std::vector<std::size_t> t(k.hom(b, x)->size());
        for (std::size_t g = 0; g < t.size(); ++g) t[g] = k.compose(a, b, x, g, f);
        p.act[a][b].emplace_back(p.at[b], p.at[a], std::move(t));
      }
    }
  }
  validate_presheaf(k, p);
  return p;
}

NatTrans yoneda_mor(const FinOCategory& k, const Arrow& f) {
  if (f.src >= k.size() || f.dst >= k.size() || f.token >= k.hom(f.src, f.dst)->size()) {
    throw Error(Errc::not_found, "yoneda_mor: unknown token");
  }
  NatTrans t;
  for (std::size_t a = 0; a < k.size(); ++a) {
    std::vector<std::size_t> tab(k.hom(a, f.src)->size());
    for (std::size_t g = 0; g < tab.size(); ++g) tab[g] = k.compose(a, f.src, f.dst, f.token, g);
    t.components.emplace_back(k.hom(a, f.src), k.hom(a, f.dst), std::move(tab));
  }
  return t;
}

std::vector<NatTrans> enumerate_nat_trans(const FinOCategory& k, const Presheaf& p, const Presheaf& q,
                                          std::size_t cap) {
  const std::size_t n = k.size();
  std::vector<std::vector<MonotoneMap>> candidates;
  for (std::size_t a = 0; a < n; ++a) candidates.push_back(monotone_maps(p.at[a], q.at[a], cap));

  std::vector<NatTrans> out;
  std::vector<const MonotoneMap*> chosen(n, nullptr);
  // Naturality squares between already-chosen objects.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t a = 0; a <= upto; ++a) {
      for (std::size_t b = 0; b <= upto; ++b) {
        if (a != upto && b != upto) continue;
        for (std::size_t f = 0; f < k.hom(a, b)->size(); ++f) {
          if (!(compose(q.act[a][b][f], *chosen[b]) == compose(*chosen[a], p.act[a][b][f]))) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      NatTrans t;
      for (const auto* m : chosen) t.components.push_back(*m);
      out.push_back(std::move(t));
      if (out.size() > cap) {
        throw Error(Errc::cap_exceeded, "more than " + std::to_string(cap) + " natural transformations");
      }
      return;
    }
    for (const auto& m : candidates[a]) {
      chosen[a] = &m;
      if (consistent(a)) self(self, a + 1);
    }
    chosen[a] = nullptr;
  };
  rec(rec, 0);
  return out;
}

bool check_fully_faithful(const FinOCategory& k, std::size_t cap) {
  std::vector<Presheaf> ys;
  for (std::size_t x = 0; x < k.size(); ++x) ys.push_back(yoneda(k, x));
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = 0; b < k.size(); ++b) {
      const FinPoset& h = *k.hom(a, b);
      const std::vector<NatTrans> nats = enumerate_nat_trans(k, ys[a], ys[b], cap);
      std::vector<NatTrans> images;
      for (std::size_t f = 0; f < h.size(); ++f) images.push_back(yoneda_mor(k, {a, b, f}));
      if (nats.size() != images.size()) return false;
      for (const auto& t : nats) {
        if (std::find(images.begin(), images.end(), t) == images.end()) return false;
      }
      for (std::size_t f = 0; f < h.size(); ++f) {
        for (std::size_t g = 0; g < h.size(); ++g) {
          if ((f == g) != (images[f] == images[g])) return false;
          if (h.leq(f, g) != nat_leq(images[f], images[g])) return false;
        }
      }
    }
  }
  return true;
}

NatTrans pointwise_lub(const FinOCategory& k, const Presheaf& p, const Presheaf& q, const NatChain& c) {
  if (c.terms.empty()) throw Error(Errc::invalid_input, "lub of an empty chain");
  NatTrans out;
  for (std::size_t a = 0; a < k.size(); ++a) {
    MapChain mc;
    mc.stab_index = c.stab_index;
    for (const auto& t : c.terms) mc.terms.push_back(t.components.at(a));
    out.components.push_back(lub_map_chain(mc));
  }
  if (!is_natural(k, p, q, out)) throw law_failure("pointwise lub is not natural");
  return out;
}

ProofStep verify_proof_step(const FinOCategory& k, const Cocone& cocone) {
  auto apex = find_object(k, cocone.apex);
  if (!apex) throw Error(Errc::invalid_input, "cocone apex is not an object of the O-category");
  const std::size_t witness = cocone.chain.stab_index.value_or(cocone.chain.last());
  const Presheaf y_apex = yoneda(k, *apex);
  const NatTrans target = yoneda_mor(k, {*apex, *apex, k.id(*apex)});

  // Left: lub in K, then y.
  MapChain e;
  e.stab_index = witness;
  for (const auto& c : cocone.legs) e.terms.push_back(compose(c.l(), c.r()));
  const NatTrans lhs = yoneda_mor(k, arrow_of(k, lub_map_chain(e)));

  // Right: y of each leg, then the pointwise lub in the presheaf category.
  NatChain ye;
  ye.stab_index = witness;
  for (const auto& c : cocone.legs) {
    ye.terms.push_back(nat_compose(yoneda_mor(k, arrow_of(k, c.l())), yoneda_mor(k, arrow_of(k, c.r()))));
  }
  const NatTrans rhs = pointwise_lub(k, y_apex, y_apex, ye);

  ProofStep out;
  out.lhs_is_identity = lhs == target;
  out.rhs_is_identity = rhs == target;
  out.sides_agree = lhs == rhs;
  return out;
}

}  // namespace epsolve
