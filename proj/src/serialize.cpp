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
#include "epsolve/serialize.hpp"

#include "epsolve/functors.hpp"

namespace epsolve {

namespace {

Error bad(const std::string& what) { return Error(Errc::invalid_input, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::pair<std::string, std::string> split_arrow(const std::string& key) {
  auto pos = key.find("->");
  if (pos == std::string::npos) throw bad("hom key '" + key + "' must look like a->b");
  return {key.substr(0, pos), key.substr(pos + 2)};
}

}  // namespace

json poset_to_json(const FinPoset& p) {
  json leq = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    leq.push_back(std::move(row));
  }
  return {{"elems", p.elems()},
          {"leq", std::move(leq)},
          {"bottom", p.bottom() ? json(p.name(*p.bottom())) : json(nullptr)}};
}

json ld_report_to_json(const LdReport& r) {
  return {{"kind", kind_name(r.kind)},
          {"verdict", r.verdict},
          {"defects", r.defects},
          {"adj_residuals", r.adj_residuals ? json(*r.adj_residuals) : json(nullptr)}};
}

json error_to_json(const Error& e) {
  return {{"error", {{"code", errc_name(e.code())}, {"message", e.what()}, {"detail", e.detail()}}}};
}

JsonReader::JsonReader() {
  for (const auto& [name, p] : builtin_posets()) registry_[name] = p;
}

void JsonReader::load_registry(const json& doc) {
  if (!doc.is_object() || !doc.contains("posets")) return;
  for (const auto& [name, body] : doc.at("posets").items()) {
    registry_[name] = poset(body);
  }
}

PosetRef JsonReader::poset(const json& j) const {
  if (j.is_string()) {
    auto it = registry_.find(j.get<std::string>());
    if (it == registry_.end()) throw bad("unknown poset name '" + j.get<std::string>() + "'");
    return it->second;
  }
  try {
    auto elems = field(j, "elems").get<std::vector<std::string>>();
    auto leq = field(j, "leq").get<std::vector<std::vector<bool>>>();
    std::optional<std::string> bottom;
    if (j.contains("bottom") && !j.at("bottom").is_null()) bottom = j.at("bottom").get<std::string>();
    return FinPoset::checked(std::move(elems), std::move(leq), std::move(bottom));
  } catch (const json::exception& e) {
    throw bad(std::string("malformed poset: ") + e.what());
  }
}

MonotoneMap JsonReader::map(const json& j) const {
  PosetRef dom = poset(field(j, "dom"));
  PosetRef cod = poset(field(j, "cod"));
  const json& table = field(j, "table");
  if (!table.is_object()) throw bad("map table must be an object");
  std::vector<std::size_t> t(dom->size());
  std::vector<bool> set(dom->size(), false);
  for (const auto& [x, y] : table.items()) {
    std::size_t i = dom->index_of(x);
    t[i] = cod->index_of(y.get<std::string>());
    set[i] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set[i]) throw bad("map table misses element '" + dom->name(i) + "'");
  }
  return MonotoneMap::checked(dom, cod, std::move(t));
}

PairHom JsonReader::pair(const json& j) const {
  return PairHom(parse_kind(field(j, "kind").get<std::string>()), map(field(j, "l")), map(field(j, "r")));
}

OmegaChain JsonReader::chain(const json& j) const {
  OmegaChain d;
  d.kind = parse_kind(field(j, "kind").get<std::string>());
  for (const auto& o : field(j, "objects")) d.objects.push_back(poset(o));
  for (const auto& l : field(j, "links")) d.links.push_back(pair(l));
  if (j.contains("stab_index") && !j.at("stab_index").is_null()) {
    d.stab_index = j.at("stab_index").get<std::size_t>();
  }
  validate_chain(d);
  return d;
}

Cocone JsonReader::cocone(const json& j) const {
  Cocone k;
  k.chain = chain(field(j, "chain"));
  k.apex = poset(field(j, "apex"));
  for (const auto& c : field(j, "legs")) k.legs.push_back(pair(c));
  return k;
}

FinOCategory JsonReader::category(const json& j) const {
  auto objects = field(j, "objects").get<std::vector<std::string>>();
  const std::size_t k = objects.size();
  auto index = [&](const std::string& name) {
    for (std::size_t a = 0; a < k; ++a) {
      if (objects[a] == name) return a;
    }
    throw bad("unknown object '" + name + "'");
  };
  std::vector<std::vector<PosetRef>> hom(k, std::vector<PosetRef>(k));
  for (const auto& [key, body] : field(j, "hom").items()) {
    auto [a, b] = split_arrow(key);
    hom[index(a)][index(b)] = poset(body);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!hom[a][b]) throw bad("missing hom " + objects[a] + "->" + objects[b]);
    }
  }
  // comp["a->b->c"][g][f] names the token g.f in hom(a,c).
  std::vector<std::vector<std::size_t>> comp(k * k * k);
  for (const auto& [key, rows] : field(j, "comp").items()) {
    auto [a_name, rest] = split_arrow(key);
    auto [b_name, c_name] = split_arrow(rest);
    std::size_t a = index(a_name), b = index(b_name), c = index(c_name);
    auto& t = comp[(a * k + b) * k + c];
    for (const auto& row : rows) {
      for (const auto& cell : row) t.push_back(hom[a][c]->index_of(cell.get<std::string>()));
    }
  }
  std::vector<std::size_t> ids(k);
  const json& id_tab = field(j, "ids");
  for (std::size_t a = 0; a < k; ++a) {
    ids[a] = hom[a][a]->index_of(field(id_tab, objects[a].c_str()).get<std::string>());
  }
  return FinOCategory(std::move(objects), std::move(hom), std::move(comp), std::move(ids));
}

json category_to_json(const FinOCategory& k) {
  json j;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k.size(); ++a) names.push_back(k.object_name(a));
  j["objects"] = names;
  j["hom"] = json::object();
  j["comp"] = json::object();
  j["ids"] = json::object();
  for (std::size_t a = 0; a < k.size(); ++a) {
    j["ids"][names[a]] = k.hom(a, a)->name(k.id(a));
    for (std::size_t b = 0; b < k.size(); ++b) {
      j["hom"][names[a] + "->" + names[b]] = poset_to_json(*k.hom(a, b));
      for (std::size_t c = 0; c < k.size(); ++c) {
        json rows = json::array();
        for (std::size_t g = 0; g < k.hom(b, c)->size(); ++g) {
          json row = json::array();
          for (std::size_t f = 0; f < k.hom(a, b)->size(); ++f) {
            row.push_back(k.hom(a, c)->name(k.compose(a, b, c, g, f)));
          }
          rows.push_back(std::move(row));
        }
        j["comp"][names[a] + "->" + names[b] + "->" + names[c]] = std::move(rows);
      }
    }
  }
  return j;
}

json JsonWriter::poset_ref(const PosetRef& p) {
  for (std::size_t i = 0; i < seen_.size(); ++i) {
    if (same_poset(seen_[i], p)) return "P" + std::to_string(i);
  }
  std::string name = "P" + std::to_string(seen_.size());
  seen_.push_back(p);
  registry_[name] = poset_to_json(*p);
  return name;
}

json JsonWriter::map(const MonotoneMap& f) {
  json table = json::object();
  for (std::size_t x = 0; x < f.table().size(); ++x) table[f.dom()->name(x)] = f.cod()->name(f(x));
  return {{"dom", poset_ref(f.dom())}, {"cod", poset_ref(f.cod())}, {"table", std::move(table)}};
}

json JsonWriter::pair(const PairHom& f) {
  return {{"kind", kind_name(f.kind())}, {"l", map(f.l())}, {"r", map(f.r())}};
}

json JsonWriter::chain(const OmegaChain& d) {
  json objects = json::array(), links = json::array();
  for (const auto& o : d.objects) objects.push_back(poset_ref(o));
  for (const auto& l : d.links) links.push_back(pair(l));
  return {{"kind", kind_name(d.kind)},
          {"objects", std::move(objects)},
          {"links", std::move(links)},
          {"stab_index", d.stab_index ? json(*d.stab_index) : json(nullptr)}};
}

json JsonWriter::cocone(const Cocone& k) {
  json legs = json::array();
  for (const auto& c : k.legs) legs.push_back(pair(c));
  return {{"chain", chain(k.chain)}, {"apex", poset_ref(k.apex)}, {"legs", std::move(legs)}};
}

json JsonWriter::cocone_document(const Cocone& k) {
  json doc = cocone(k);
  doc["posets"] = registry_;
  return doc;
}

}  // namespace epsolve
