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
#include "epsolve/solver.hpp"

#include <cctype>
#include <sstream>

namespace epsolve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EquationSpec equation() {
    EquationSpec spec;
    expect_word("D");
    expect('=');
    spec.body = expr();
    finish();
    return spec;
  }

  FunctorExpr bare_or_equation() {
    skip_ws();
    std::size_t save = pos_;
    if (peek_word() == "D") {
      read_word();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        ++pos_;
        FunctorExpr e = expr();
        finish();
        return e;
      }
    }
    pos_ = save;
    FunctorExpr e = expr();
    finish();
    return e;
  }

 private:
  FunctorExpr expr() {
    FunctorExpr e = term();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        e = FunctorExpr::sum(e, term());
      } else {
        return e;
      }
    }
  }

  FunctorExpr term() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      FunctorExpr e = expr();
      expect(')');
      return e;
    }
    std::size_t at = pos_;
    std::string w = read_word();
    if (w == "D") return FunctorExpr::id();
    if (w == "unit") return FunctorExpr::constant(one_point(), "1");
    if (w == "lift") {
      expect('(');
      FunctorExpr e = expr();
      expect(')');
      return FunctorExpr::lift(e);
    }
    if (w == "sum" || w == "prod" || w == "fun") {
      expect('(');
      FunctorExpr a = expr();
      expect(',');
      FunctorExpr b = expr();
      expect(')');
      if (w == "sum") return FunctorExpr::sum(a, b);
      if (w == "prod") return FunctorExpr::prod(a, b);
      return FunctorExpr::fun(a, b);
    }
    if (w == "const") {
      expect('(');
      skip_ws();
      std::size_t name_at = pos_;
      std::string name = read_name();
      auto it = builtin_posets().find(name);
      if (it == builtin_posets().end()) fail(name_at, "unknown poset '" + name + "'");
      expect(')');
      return FunctorExpr::constant(it->second, name);
    }
    if (w.empty()) fail(at, pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of input");
    fail(at, "unknown combinator '" + w + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string peek_word() {
    std::size_t save = pos_;
    std::string w = read_word();
    pos_ = save;
    return w;
  }

  std::string read_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_, "expected a poset name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) fail(pos_, std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c) fail(pos_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  void expect_word(const char* w) {
    skip_ws();
    std::size_t at = pos_;
    if (read_word() != w) fail(at, std::string("expected '") + w + "'");
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "trailing input");
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::parse_error,
                "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg,
                {{"line", line}, {"column", col}});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Error at_stage(const Error& e, std::size_t stage) {
  json detail = e.detail().is_object() ? e.detail() : json::object();
  detail["stage"] = stage;
  return Error(e.code(), "stage " + std::to_string(stage) + ": " + e.what(), detail);
}

}  // namespace

EquationSpec parse_equation(std::string_view text) { return Parser(text).equation(); }

FunctorExpr parse_functor(std::string_view text) { return Parser(text).bare_or_equation(); }

OmegaChain iterate(const EquationSpec& spec) {
  if (spec.depth > spec.caps.depth) {
    throw Error(Errc::invalid_input,
                "depth " + std::to_string(spec.depth) + " exceeds the depth cap " + std::to_string(spec.caps.depth),
                {{"depth", spec.depth}, {"cap", spec.caps.depth}});
  }
  OmegaChain d;
  d.kind = PairKind::EP;
  d.objects.push_back(one_point());
  if (spec.depth == 0) return d;
  try {
    PosetRef first = apply_obj(spec.body, d.objects[0], spec.caps);
    if (!first->pointed()) {
      throw Error(Errc::invalid_input, "F(1) has no bottom, so the initial chain cannot start");
    }
    d.links.push_back(bottom_inclusion(first));
    d.objects.push_back(first);
  } catch (const Error& e) {
    throw at_stage(e, 1);
  }
  for (std::size_t n = 1; n < spec.depth; ++n) {
    try {
      d.links.push_back(pr_apply_mor(spec.body, d.links.back(), spec.caps));
      d.objects.push_back(d.links.back().target());
    } catch (const Error& e) {
      throw at_stage(e, n + 1);
    }
  }
  for (std::size_t n = 0; n < d.links.size(); ++n) {
    if (is_iso(d.links[n])) {
      d.stab_index = n;
      break;
    }
  }
  validate_chain(d);
  return d;
}

json solve_report(const EquationSpec& spec, std::uint64_t seed, const std::string& source) {
  const OmegaChain d = iterate(spec);
  json report;
  report["equation"] = source;
  report["functor"] = spec.body.to_string();
  report["variance"] = variance_name(variance(spec.body));
  report["depth"] = spec.depth;
  report["seed"] = seed;

  json stages = json::array();
  for (std::size_t n = 0; n < d.objects.size(); ++n) {
    stages.push_back({{"n", n}, {"size", d.objects[n]->size()}, {"canonical_form", canonical_form(*d.objects[n])}});
  }
  report["stages"] = std::move(stages);

  bool links_ep = true;
  for (const auto& f : d.links) links_ep = links_ep && is_ep_pair(f.l(), f.r());
  report["links_ep"] = links_ep;
  report["stabilized_at"] = d.stab_index ? json(*d.stab_index) : json(nullptr);

  json matrix = json::array();
  LdReport last;
  for (std::size_t depth = 0; depth <= d.last(); ++depth) {
    last = check_local_determination_ep(thread_approximant(d, depth).cocone);
    matrix.push_back(last.defects);
  }
  report["defect_matrix"] = std::move(matrix);
  if (d.stab_index) {
    report["ld"] = ld_report_to_json(check_local_determination_ep(colimit_finite(d)));
    report["ld_source"] = "colimit";
  } else {
    report["ld"] = ld_report_to_json(last);
    report["ld_source"] = "thread_approximant";
  }
  return report;
}

std::string stages_csv(const json& report) {
  std::ostringstream out;
  out << "n,size,canonical_form,defect\n";
  const json& defects = report.at("ld").at("defects");
  for (const auto& s : report.at("stages")) {
    std::size_t n = s.at("n").get<std::size_t>();
    out << n << ',' << s.at("size").get<std::size_t>() << ',' << s.at("canonical_form").get<std::string>() << ',';
    if (n < defects.size()) out << defects[n].get<std::size_t>();
    out << '\n';
  }
  return out.str();
}

}  // namespace epsolve
