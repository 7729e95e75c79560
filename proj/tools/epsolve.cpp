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

// epsolve: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "epsolve/epsolve.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct CString {
  char* p = nullptr;
  ~CString() { epsolve_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Cocone = Handle<epsolve_cocone, epsolve_cocone_free>;
using Functor = Handle<epsolve_functor, epsolve_functor_free>;

// Prints the library's error document and maps the status to an exit code.
int report_error(epsolve_status s) {
  std::cerr << epsolve_last_error_json() << "\n";
  return s == EPSOLVE_ERR_PARSE || s == EPSOLVE_ERR_NULL_ARGUMENT ? kUsage : kFailed;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "epsolve: cannot write " << path << "\n";
    return false;
  }
  return true;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream s;
  s << in.rdbuf();
  text = s.str();
  return true;
}

std::string join(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += " ";
    out += v.dump();
  }
  return out;
}

void print_solve(const json& r) {
  std::printf("equation  %s\n", r.at("equation").get<std::string>().c_str());
  std::printf("functor   %s (%s)\n", r.at("functor").get<std::string>().c_str(),
              r.at("variance").get<std::string>().c_str());
  std::printf("\n%4s %6s  %s\n", "n", "size", "canonical_form");
  for (const auto& s : r.at("stages")) {
    std::printf("%4zu %6zu  %s\n", s.at("n").get<std::size_t>(), s.at("size").get<std::size_t>(),
                s.at("canonical_form").get<std::string>().c_str());
  }
  std::printf("\ndefects by depth\n");
  std::size_t depth = 0;
  for (const auto& row : r.at("defect_matrix")) std::printf("%4zu  %s\n", depth++, join(row).c_str());
  const json& st = r.at("stabilized_at");
  std::printf("\nstabilized_at  %s\n", st.is_null() ? "none" : st.dump().c_str());
  std::printf("links_ep       %s\n", r.at("links_ep").get<bool>() ? "true" : "false");
  std::printf("ld verdict     %s (%s)\n", r.at("ld").at("verdict").get<bool>() ? "true" : "false",
              r.at("ld_source").get<std::string>().c_str());
}

void print_ld(const json& r) {
  std::printf("kind      %s\n", r.at("kind").get<std::string>().c_str());
  std::printf("defects   %s\n", join(r.at("defects")).c_str());
  if (!r.at("adj_residuals").is_null()) std::printf("residuals %s\n", r.at("adj_residuals").dump().c_str());
  std::printf("verdict   %s\n", r.at("verdict").get<bool>() ? "true" : "false");
}

void print_suite(const json& r) {
  for (const auto& p : r.at("properties")) {
    std::printf("%-4s %s  checked=%-8zu skipped=%-8zu violations=%-4zu %s\n",
                p.at("id").get<std::string>().c_str(), p.at("pass").get<bool>() ? "PASS" : "FAIL",
                p.at("checked").get<std::size_t>(), p.at("skipped").get<std::size_t>(),
                p.at("violations").get<std::size_t>(), p.at("title").get<std::string>().c_str());
  }
  std::printf("all_pass %s\n", r.at("all_pass").get<bool>() ? "true" : "false");
}

struct Common {
  std::string json_path;
  std::string csv_path;
  epsolve_options opts{};
};

void add_caps(CLI::App* cmd, Common& c) {
  cmd->add_option("--cap-elems", c.opts.cap_elems, "largest poset any construction may build");
  cmd->add_option("--hom-cap", c.opts.hom_cap, "largest |A|*|B| for pair enumeration");
  cmd->add_option("--max-depth", c.opts.max_depth, "largest accepted depth");
  cmd->add_option("--threads", c.opts.threads, "worker threads, 0 for all cores");
  cmd->add_option("--json", c.json_path, "write the JSON report here");
}

}  // namespace

int main(int argc, char** argv) {
  Common c;
  epsolve_options_init(&c.opts);
  if (const char* env = std::getenv("EPSOLVE_CAP_ELEMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (!*env || *end) {
      std::cerr << "epsolve: EPSOLVE_CAP_ELEMS must be a number\n";
      return kUsage;
    }
    c.opts.cap_elems = v;
  }

  CLI::App app{"Solve recursive domain equations over finite posets and check colimit criteria"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", epsolve_version());

  std::string equation, cocone_path, functor_text;
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress the text report");

  auto* solve = app.add_subcommand("solve", "iterate D = F(D) from the one-point poset");
  solve->add_option("equation", equation, "e.g. \"D = lift(unit + D)\"")->required();
  solve->add_option("--depth", c.opts.depth, "number of iteration steps");
  solve->add_option("--seed", c.opts.seed, "recorded in the report");
  solve->add_option("--csv", c.csv_path, "write the stage table here");
  add_caps(solve, c);

  auto* check = app.add_subcommand("check-ld", "local determination verdict for a cocone");
  check->add_option("--cocone", cocone_path, "cocone JSON")->required();
  add_caps(check, c);

  auto* preserve = app.add_subcommand("preserve", "push a cocone through functors");
  preserve->add_option("--cocone", cocone_path, "cocone JSON")->required();
  preserve->add_option("--functor", functor_text, "one functor; default: the generated family");
  preserve->add_option("--functor-height", c.opts.functor_height, "height of the generated family");
  add_caps(preserve, c);

  auto* verify = app.add_subcommand("verify-theorems", "run the property suite");
  verify->add_option("--seed", c.opts.seed, "random seed");
  verify->add_option("--max-size", c.opts.max_size, "largest chain object");
  verify->add_option("--max-len", c.opts.max_len, "longest chain");
  verify->add_option("--cases", c.opts.cases, "random chains per pair kind");
  verify->add_option("--apex-max", c.opts.apex_max, "largest enumerated apex");
  verify->add_option("--functor-height", c.opts.functor_height, "height of the functor family");
  add_caps(verify, c);

  auto* yoneda = app.add_subcommand("yoneda-demo", "Yoneda embedding of the category {1, 2-chain}");
  add_caps(yoneda, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  CString report, csv;
  int ok = 0;
  epsolve_status s = EPSOLVE_OK;
  enum class Kind { Solve, Ld, Preserve, Suite, Yoneda } kind = Kind::Solve;

  if (*solve) {
    s = epsolve_solve(equation.c_str(), &c.opts, &report.p, c.csv_path.empty() ? nullptr : &csv.p);
    ok = 1;
  } else if (*check || *preserve) {
    std::string text;
    if (!read_file(cocone_path, text)) {
      std::cerr << "epsolve: cannot read " << cocone_path << "\n";
      return kUsage;
    }
    Cocone k;
    s = epsolve_cocone_from_json(text.c_str(), &k.p);
    if (s != EPSOLVE_OK) {
      std::cerr << epsolve_last_error_json() << "\n";
      return kUsage;
    }
    if (*check) {
      kind = Kind::Ld;
      s = epsolve_cocone_check_ld(k.p, &c.opts, &report.p, &ok);
    } else {
      kind = Kind::Preserve;
      Functor f;
      if (!functor_text.empty()) {
        s = epsolve_functor_parse(functor_text.c_str(), &f.p);
        if (s != EPSOLVE_OK) return report_error(s);
      }
      s = epsolve_cocone_preserve(k.p, f.p, &c.opts, &report.p, &ok);
    }
  } else if (*verify) {
    kind = Kind::Suite;
    s = epsolve_verify_theorems(&c.opts, &report.p, &ok);
  } else {
    kind = Kind::Yoneda;
    s = epsolve_yoneda_demo(&c.opts, &report.p, &ok);
  }
  if (s != EPSOLVE_OK) return report_error(s);

  const std::string text = report.str() + "\n";
  if (!c.json_path.empty() && !write_file(c.json_path, text)) return kFailed;
  if (!c.csv_path.empty() && !write_file(c.csv_path, csv.str())) return kFailed;

  if (!quiet) {
    const json r = json::parse(report.str());
    switch (kind) {
      case Kind::Solve: print_solve(r); break;
      case Kind::Ld: print_ld(r); break;
      case Kind::Suite: print_suite(r); break;
      case Kind::Preserve:
        for (const auto& row : r.at("functors")) {
          std::printf("%-8s %s\n", row.at("status").get<std::string>().c_str(),
                      row.at("functor").get<std::string>().c_str());
        }
        std::printf("checked=%zu skipped=%zu failures=%zu\n", r.at("checked").get<std::size_t>(),
                    r.at("skipped").get<std::size_t>(), r.at("failures").get<std::size_t>());
        break;
      case Kind::Yoneda: {
        const json& st = r.at("result").at("stats");
        std::printf("fully_faithful      %s\n", st.at("fully_faithful").dump().c_str());
        std::printf("|Nat(y1, y2)|       %s\n", st.at("nat_y1_y2").dump().c_str());
        std::printf("|Nat(y2, y1)|       %s\n", st.at("nat_y2_y1").dump().c_str());
        std::printf("proof step colimit  %s\n", st.at("proof_step_colimit").dump().c_str());
        std::printf("proof step fixture  %s\n", st.at("proof_step_fixture").dump().c_str());
        break;
      }
    }
  }
  return ok ? kOk : kFailed;
}
