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
#include "epsolve/epsolve.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "epsolve/solver.hpp"
#include "epsolve/suite.hpp"

using namespace epsolve;

struct epsolve_poset {
  PosetRef p;
};

struct epsolve_functor {
  FunctorExpr e;
};

struct epsolve_cocone {
  Cocone k;
};

namespace {

thread_local std::string g_message;
thread_local std::string g_error_json;

epsolve_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_input: return EPSOLVE_ERR_INVALID_INPUT;
    case Errc::shape_mismatch: return EPSOLVE_ERR_SHAPE_MISMATCH;
    case Errc::cap_exceeded: return EPSOLVE_ERR_CAP_EXCEEDED;
    case Errc::invariant_violation: return EPSOLVE_ERR_INVARIANT;
    case Errc::parse_error: return EPSOLVE_ERR_PARSE;
    case Errc::not_found: return EPSOLVE_ERR_NOT_FOUND;
  }
  return EPSOLVE_ERR_INTERNAL;
}

epsolve_status fail(epsolve_status s, const std::string& message, const json& doc) {
  g_message = message;
  g_error_json = doc.dump();
  return s;
}

epsolve_status fail_plain(epsolve_status s, const std::string& message) {
  return fail(s, message,
              {{"error", {{"code", epsolve_status_name(s)}, {"message", message}, {"detail", nullptr}}}});
}

// Runs body, translating every exception into a status.
template <class Body>
epsolve_status guard(Body body) {
  try {
    body();
    return EPSOLVE_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what(), error_to_json(e));
  } catch (const json::exception& e) {
    return fail_plain(EPSOLVE_ERR_INVALID_INPUT, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail_plain(EPSOLVE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_plain(EPSOLVE_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

epsolve_options defaults() {
  epsolve_options o;
  epsolve_options_init(&o);
  return o;
}

Caps caps_of(const epsolve_options& o) {
  Caps c;
  c.elems = static_cast<std::size_t>(o.cap_elems);
  c.hom = static_cast<std::size_t>(o.hom_cap);
  c.depth = o.max_depth;
  return c;
}

SuiteOptions suite_of(const epsolve_options& o) {
  SuiteOptions s;
  s.seed = o.seed;
  s.cases = o.cases;
  s.max_size = o.max_size;
  s.max_len = o.max_len;
  s.apex_max = o.apex_max;
  s.functor_height = o.functor_height;
  s.threads = o.threads;
  s.caps = caps_of(o);
  return s;
}

#define EPSOLVE_REQUIRE(ptr)                                                \
  do {                                                                      \
    if (!(ptr)) return fail_plain(EPSOLVE_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

void epsolve_options_init(epsolve_options* opts) {
  if (!opts) return;
  const SuiteOptions s;
  opts->depth = 4;
  opts->seed = s.seed;
  opts->cases = static_cast<uint32_t>(s.cases);
  opts->max_size = static_cast<uint32_t>(s.max_size);
  opts->max_len = static_cast<uint32_t>(s.max_len);
  opts->apex_max = static_cast<uint32_t>(s.apex_max);
  opts->functor_height = static_cast<uint32_t>(s.functor_height);
  opts->threads = 0;
  opts->cap_elems = s.caps.elems;
  opts->hom_cap = s.caps.hom;
  opts->max_depth = static_cast<uint32_t>(s.caps.depth);
}

const char* epsolve_version(void) { return "0.1.0"; }

const char* epsolve_status_name(epsolve_status status) {
  switch (status) {
    case EPSOLVE_OK: return "ok";
    case EPSOLVE_ERR_INVALID_INPUT: return "invalid_input";
    case EPSOLVE_ERR_SHAPE_MISMATCH: return "shape_mismatch";
    case EPSOLVE_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case EPSOLVE_ERR_INVARIANT: return "invariant_violation";
    case EPSOLVE_ERR_PARSE: return "parse_error";
    case EPSOLVE_ERR_NOT_FOUND: return "not_found";
    case EPSOLVE_ERR_NULL_ARGUMENT: return "null_argument";
    case EPSOLVE_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* epsolve_last_error_message(void) { return g_message.c_str(); }
const char* epsolve_last_error_json(void) { return g_error_json.c_str(); }

void epsolve_string_free(char* s) { std::free(s); }

epsolve_status epsolve_poset_from_json(const char* text, epsolve_poset** out) {
  EPSOLVE_REQUIRE(text);
  EPSOLVE_REQUIRE(out);
  return guard([&] {
    JsonReader reader;
    *out = new epsolve_poset{reader.poset(json::parse(text))};
  });
}

epsolve_status epsolve_poset_builtin(const char* name, epsolve_poset** out) {
  EPSOLVE_REQUIRE(name);
  EPSOLVE_REQUIRE(out);
  return guard([&] {
    const auto& all = builtin_posets();
    auto it = all.find(name);
    if (it == all.end()) throw Error(Errc::not_found, std::string("no builtin poset '") + name + "'");
    *out = new epsolve_poset{it->second};
  });
}

void epsolve_poset_free(epsolve_poset* p) { delete p; }

size_t epsolve_poset_size(const epsolve_poset* p) { return p ? p->p->size() : 0; }

epsolve_status epsolve_poset_to_json(const epsolve_poset* p, char** out) {
  EPSOLVE_REQUIRE(p);
  EPSOLVE_REQUIRE(out);
  return guard([&] { *out = dup(poset_to_json(*p->p).dump()); });
}

epsolve_status epsolve_poset_canonical_form(const epsolve_poset* p, char** out) {
  EPSOLVE_REQUIRE(p);
  EPSOLVE_REQUIRE(out);
  return guard([&] { *out = dup(canonical_form(*p->p)); });
}

epsolve_status epsolve_poset_iso(const epsolve_poset* a, const epsolve_poset* b, int* out) {
  EPSOLVE_REQUIRE(a);
  EPSOLVE_REQUIRE(b);
  EPSOLVE_REQUIRE(out);
  return guard([&] { *out = iso_check(*a->p, *b->p).has_value() ? 1 : 0; });
}

epsolve_status epsolve_functor_parse(const char* text, epsolve_functor** out) {
  EPSOLVE_REQUIRE(text);
  EPSOLVE_REQUIRE(out);
  return guard([&] { *out = new epsolve_functor{parse_functor(text)}; });
}

void epsolve_functor_free(epsolve_functor* f) { delete f; }

epsolve_status epsolve_functor_to_string(const epsolve_functor* f, char** out) {
  EPSOLVE_REQUIRE(f);
  EPSOLVE_REQUIRE(out);
  return guard([&] { *out = dup(f->e.to_string()); });
}

epsolve_status epsolve_functor_apply(const epsolve_functor* f, const epsolve_poset* p,
                                     const epsolve_options* opts, epsolve_poset** out) {
  EPSOLVE_REQUIRE(f);
  EPSOLVE_REQUIRE(p);
  EPSOLVE_REQUIRE(out);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] { *out = new epsolve_poset{apply_obj(f->e, p->p, caps_of(o))}; });
}

epsolve_status epsolve_cocone_from_json(const char* text, epsolve_cocone** out) {
  EPSOLVE_REQUIRE(text);
  EPSOLVE_REQUIRE(out);
  return guard([&] {
    const json doc = json::parse(text);
    JsonReader reader;
    reader.load_registry(doc);
    Cocone k = reader.cocone(doc);
    if (!is_cocone(k)) throw Error(Errc::invariant_violation, "legs do not commute with the chain links");
    *out = new epsolve_cocone{std::move(k)};
  });
}

void epsolve_cocone_free(epsolve_cocone* k) { delete k; }

epsolve_status epsolve_cocone_check_ld(const epsolve_cocone* k, const epsolve_options* opts,
                                       char** report_json, int* verdict) {
  EPSOLVE_REQUIRE(k);
  EPSOLVE_REQUIRE(report_json);
  EPSOLVE_REQUIRE(verdict);
  (void)opts;
  return guard([&] {
    const LdReport r = check_local_determination(k->k);
    *report_json = dup(ld_report_to_json(r).dump(2));
    *verdict = r.verdict ? 1 : 0;
  });
}

epsolve_status epsolve_cocone_is_colimiting(const epsolve_cocone* k, const epsolve_options* opts,
                                            int* out) {
  EPSOLVE_REQUIRE(k);
  EPSOLVE_REQUIRE(out);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] { *out = is_colimiting(k->k, caps_of(o)) ? 1 : 0; });
}

epsolve_status epsolve_cocone_preserve(const epsolve_cocone* k, const epsolve_functor* f,
                                       const epsolve_options* opts, char** report_json, int* all_ok) {
  EPSOLVE_REQUIRE(k);
  EPSOLVE_REQUIRE(report_json);
  EPSOLVE_REQUIRE(all_ok);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] {
    const Caps caps = caps_of(o);
    const std::vector<FunctorExpr> family =
        f ? std::vector<FunctorExpr>{f->e} : theorem_family(o.functor_height);
    json rows = json::array();
    std::size_t checked = 0, skipped = 0, failures = 0;
    for (const auto& e : family) {
      json row = {{"functor", e.to_string()}};
      try {
        const Preservation p = preserves_cocone(e, k->k, caps);
        const bool ok = p.colimiting && p.ld.verdict;
        row["status"] = ok ? "ok" : "fail";
        row["colimiting"] = p.colimiting;
        row["ld"] = ld_report_to_json(p.ld);
        row["apex_size"] = p.image.apex->size();
        ++checked;
        if (!ok) ++failures;
      } catch (const Error& err) {
        // A single named functor must apply; family members beyond caps are skipped.
        if (f || (err.code() != Errc::cap_exceeded && err.code() != Errc::invalid_input)) throw;
        row["status"] = "skipped";
        row["reason"] = errc_name(err.code());
        ++skipped;
      }
      rows.push_back(std::move(row));
    }
    const json report = {{"functors", std::move(rows)},
                         {"checked", checked},
                         {"skipped", skipped},
                         {"failures", failures},
                         {"all_ok", failures == 0}};
    *report_json = dup(report.dump(2));
    *all_ok = failures == 0 ? 1 : 0;
  });
}

epsolve_status epsolve_solve(const char* equation, const epsolve_options* opts, char** report_json,
                             char** stages_csv_out) {
  EPSOLVE_REQUIRE(equation);
  EPSOLVE_REQUIRE(report_json);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] {
    EquationSpec spec = parse_equation(equation);
    spec.depth = o.depth;
    spec.caps = caps_of(o);
    const json report = solve_report(spec, o.seed, equation);
    std::string csv = stages_csv_out ? stages_csv(report) : std::string();
    *report_json = dup(report.dump(2));
    if (stages_csv_out) *stages_csv_out = dup(csv);
  });
}

epsolve_status epsolve_verify_theorems(const epsolve_options* opts, char** report_json, int* all_pass) {
  EPSOLVE_REQUIRE(report_json);
  EPSOLVE_REQUIRE(all_pass);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] {
    const json report = run_theorem_suite(suite_of(o));
    *report_json = dup(report.dump(2));
    *all_pass = report.at("all_pass").get<bool>() ? 1 : 0;
  });
}

epsolve_status epsolve_yoneda_demo(const epsolve_options* opts, char** report_json, int* all_pass) {
  EPSOLVE_REQUIRE(report_json);
  EPSOLVE_REQUIRE(all_pass);
  const epsolve_options o = opts ? *opts : defaults();
  return guard([&] {
    const PropertyResult r = property_yoneda(suite_of(o));
    const json report = {{"category", category_to_json(two_object_category())}, {"result", to_json(r)}};
    *report_json = dup(report.dump(2));
    *all_pass = r.pass ? 1 : 0;
  });
}

}  // extern "C"
