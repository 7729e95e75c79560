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

#include <map>
#include <string>

#include "epsolve/chains.hpp"
#include "epsolve/presheaf.hpp"
#include "json.hpp"

namespace epsolve {

using nlohmann::json;

/// Reads the shared JSON formats. Posets may appear inline or by name; names
/// resolve against the document's "posets" section and then the builtins.
class JsonReader {
 public:
  JsonReader();
  /// Registers every entry of doc["posets"], if present.
  void load_registry(const json& doc);

  PosetRef poset(const json& j) const;
  MonotoneMap map(const json& j) const;
  PairHom pair(const json& j) const;
  OmegaChain chain(const json& j) const;
  Cocone cocone(const json& j) const;
  FinOCategory category(const json& j) const;

 private:
  std::map<std::string, PosetRef> registry_;
};

/// Writes the shared JSON formats, naming each distinct poset once in a
/// "posets" section ("P0", "P1", ...) and referring to it by name.
class JsonWriter {
 public:
  json poset_ref(const PosetRef& p);
  json map(const MonotoneMap& f);
  json pair(const PairHom& f);
  json chain(const OmegaChain& d);
  json cocone(const Cocone& k);
  /// The accumulated "posets" section.
  const json& registry() const { return registry_; }
  /// cocone(k) with the registry attached, as a standalone document.
  json cocone_document(const Cocone& k);

 private:
  std::vector<PosetRef> seen_;
  json registry_ = json::object();
};

json poset_to_json(const FinPoset& p);
json ld_report_to_json(const LdReport& r);
json category_to_json(const FinOCategory& k);
/// Error payload used by the CLI and the C API.
json error_to_json(const Error& e);

}  // namespace epsolve
