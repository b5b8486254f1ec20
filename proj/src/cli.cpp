// Copyright 2026 The Biforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "biforge/binum.hpp"
#include "biforge/error.hpp"
#include "biforge/presburger.hpp"
#include "biforge/recognizers.hpp"
#include "biforge/semantics.hpp"
#include "biforge/sexpr.hpp"
#include "biforge/theory_graph.hpp"

namespace biforge::cli {

namespace {

struct Options {
  std::string out_file;
  std::string expr;
  std::string lhs;
  std::string rhs;
  std::string name;
  std::string file;
  std::string env;
  std::string theory = "bt6";
  std::string expect;
  std::string level;
  std::string rules = "published";
  std::optional<std::uint64_t> bound;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  bool abs = false;
  bool rewrite = false;
  bool unfold = false;
};

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

Natural default_bound() {
  const char* env = std::getenv("BIFORGE_BOUND");
  if (env != nullptr && is_decimal(env)) return Natural(env);
  return 32;
}

BinNum parse_numeral(const std::string& text) {
  if (text.rfind("#b", 0) == 0) return parse_literal(text);
  if (is_decimal(text)) return of_nat(Natural(text));
  throw ParseError("expected a #b literal or a decimal numeral", 0);
}

LangLevel level_option(const std::string& text, LangLevel fallback) {
  if (text.empty()) return fallback;
  const auto level = parse_level(text);
  if (!level) throw ParseError("level must be 1, 2 or 3", 0);
  return *level;
}

TheoryGraph load_graph(const std::string& file) {
  if (file.empty()) return builtin_graph();
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read " + file);
  std::stringstream text;
  text << in.rdbuf();
  return parse_theory_graph(text.str());
}

const char* truth(bool b) { return b ? "tt" : "ff"; }

int cmd_eval(const Options& o, std::ostream& out) {
  const Construction c = parse_construction(o.expr);
  const Environment e = Environment::parse(o.env);
  switch (sort_of(c)) {
    case Sorting::kNat:
      out << eval_nat(c, e) << "\n";
      return kExitOk;
    case Sorting::kBool: {
      EvalStrategy s = QuantifierFree{};
      if (o.bound) s = Bounded{Natural(*o.bound)};
      out << truth(eval_bool(c, e, s)) << "\n";
      return kExitOk;
    }
    case Sorting::kAbsPred:
      break;
  }
  throw SortError("an abstraction has no value");
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Construction c = parse_construction(o.expr);
  const Environment e = Environment::parse(o.env);
  TruthValue v;
  if (o.theory == "bt6") {
    v = decide_bt6(c, e);
  } else if (o.theory == "bt5") {
    v = decide_bt5(c, e);
  } else {
    throw ParseError("theory must be bt5 or bt6", 0);
  }
  const bool holds = v == TruthValue::kTrue;
  out << truth(holds) << "\n";
  if (!o.expect.empty() && o.expect != truth(holds)) return kExitCheckFailed;
  return kExitOk;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const Construction c = parse_construction(o.expr);
  const LangLevel level = level_option(o.level, LangLevel::kL3);
  const bool yes = o.abs ? is_fo_abs(level, c) : is_fo(level, c);
  out << (yes ? "yes" : "no") << "\n";
  return yes ? kExitOk : kExitLanguage;
}

int cmd_bplus(const Options& o, std::ostream& out, std::ostream& err) {
  const BinNum a = parse_numeral(o.lhs);
  const BinNum b = parse_numeral(o.rhs);
  if (!o.rewrite) {
    out << to_literal(normalize(bplus(a, b))) << "\n";
    return kExitOk;
  }
  RuleSet rules;
  if (o.rules == "published") {
    rules = RuleSet::kPublished;
  } else if (o.rules == "repaired") {
    rules = RuleSet::kRepaired;
  } else {
    throw ParseError("rules must be published or repaired", 0);
  }
  const RewriteResult r = bplus_rewrite(to_construction(a), to_construction(b), rules);
  if (const auto* stuck = std::get_if<Stuck>(&r)) {
    err << "stuck after " << stuck->steps << " steps: " << stuck->term << "\n";
    return kExitStuck;
  }
  out << to_literal(normalize(from_construction(std::get<Construction>(r)))) << "\n";
  return kExitOk;
}

int cmd_btimes(const Options& o, std::ostream& out) {
  out << to_literal(normalize(btimes(parse_numeral(o.lhs), parse_numeral(o.rhs)))) << "\n";
  return kExitOk;
}

int cmd_induct(const Options& o, std::ostream& out) {
  const Construction pred = parse_construction(o.expr);
  const auto kind = static_cast<SchemaKind>(level_option(o.level, LangLevel::kL2));
  out << print(induction_instance(kind, pred)) << "\n";
  return kExitOk;
}

int cmd_check_theory(const Options& o, std::ostream& out) {
  const TheoryGraph graph = load_graph(o.file);
  const BiformTheory* t = graph.find_theory(o.name);
  if (t == nullptr) throw std::invalid_argument("unknown theory " + o.name);
  const Natural bound = o.bound ? Natural(*o.bound) : default_bound();
  const Report report = t->first_order()
                            ? check_axioms(*t, o.samples, bound, o.seed)
                            : check_definite_description(static_cast<std::size_t>(bound));
  out << report.to_text();
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_check_morphism(const Options& o, std::ostream& out) {
  const TheoryGraph graph = load_graph(o.file);
  std::optional<Morphism> m;
  if (const Morphism* found = graph.find_morphism(o.name)) {
    m = *found;
  } else if (o.name.size() > 3 && o.name.ends_with("-id")) {
    if (const BiformTheory* t = graph.find_theory(o.name.substr(0, o.name.size() - 3))) {
      m = identity_morphism(*t);
    }
  }
  if (!m) throw std::invalid_argument("unknown morphism " + o.name);
  const Report report = check_morphism(*m, graph, o.seed);
  out << report.to_text();
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  out << print(parse_construction(o.expr), PrintOptions{!o.unfold}) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Biform theories of arithmetic: evaluation, decision procedures, binary "
               "numerals and theory-graph checks.",
               "biforge"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--out", o.out_file, "Write results to FILE instead of standard output");

  auto* eval = app.add_subcommand("eval", "Evaluate a term or formula");
  eval->add_option("expr", o.expr, "S-expression")->required();
  eval->add_option("--env", o.env, "Variable values, e.g. x=3,y=4");
  eval->add_option("--bound", o.bound, "Let quantifiers range over 0..N");

  auto* decide = app.add_subcommand("decide", "Decide a sentence of L1 or L2");
  decide->add_option("expr", o.expr, "S-expression")->required();
  decide->add_option("--theory", o.theory, "bt5 or bt6")->capture_default_str();
  decide->add_option("--env", o.env, "Values of free variables");
  decide->add_option("--expect", o.expect, "Exit 1 unless the result is tt or ff as given")
      ->check(CLI::IsMember({"tt", "ff"}));

  auto* recognize = app.add_subcommand("recognize", "Language membership");
  recognize->add_option("expr", o.expr, "S-expression")->required();
  recognize->add_option("--level", o.level, "1, 2 or 3 (default 3)");
  recognize->add_flag("--abs", o.abs, "Require an abstraction with a body in the language");

  auto* plus = app.add_subcommand("bplus", "Add two binary numerals");
  plus->add_option("a", o.lhs, "#b literal or decimal")->required();
  plus->add_option("b", o.rhs, "#b literal or decimal")->required();
  plus->add_flag("--rewrite", o.rewrite, "Use the conditional rewrite engine");
  plus->add_option("--rules", o.rules, "published or repaired")->capture_default_str();

  auto* times = app.add_subcommand("btimes", "Multiply two binary numerals");
  times->add_option("a", o.lhs, "#b literal or decimal")->required();
  times->add_option("b", o.rhs, "#b literal or decimal")->required();

  auto* induct = app.add_subcommand("induct", "Instantiate the induction schema");
  induct->add_option("pred", o.expr, "(lambda v F)")->required();
  induct->add_option("--level", o.level, "Schema language 1, 2 or 3 (default 2)");

  auto* theory = app.add_subcommand("check-theory", "Check a theory's axioms in the standard model");
  theory->add_option("name", o.name, "Theory name, e.g. BT3")->required();
  theory->add_option("--file", o.file, "Theory-graph description file");
  theory->add_option("--samples", o.samples, "Environments per sampled axiom")->capture_default_str();
  theory->add_option("--bound", o.bound, "Oracle bound (default $BIFORGE_BOUND or 32)");
  theory->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* morphism = app.add_subcommand("check-morphism", "Discharge a morphism's obligations");
  morphism->add_option("name", o.name, "Morphism name, e.g. BT4-to-BT7 or BT1-id")->required();
  morphism->add_option("--file", o.file, "Theory-graph description file");
  morphism->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* normalize_cmd = app.add_subcommand("normalize", "Parse and print in canonical form");
  normalize_cmd->add_option("expr", o.expr, "S-expression")->required();
  normalize_cmd->add_flag("--unfold", o.unfold, "Print numerals as bnat nestings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream result;
  int status = kExitOk;
  try {
    if (*eval) status = cmd_eval(o, result);
    if (*decide) status = cmd_decide(o, result);
    if (*recognize) status = cmd_recognize(o, result);
    if (*plus) status = cmd_bplus(o, result, err);
    if (*times) status = cmd_btimes(o, result);
    if (*induct) status = cmd_induct(o, result);
    if (*theory) status = cmd_check_theory(o, result);
    if (*morphism) status = cmd_check_morphism(o, result);
    if (*normalize_cmd) status = cmd_normalize(o, result);
  } catch (const NotAnAbstraction& e) {
    err << "error: " << e.what() << "\n";
    return kExitLanguage;
  } catch (const LanguageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLanguage;
  } catch (const QuantifierEncountered& e) {
    err << "error: " << e.what() << " (use --bound N)\n";
    return kExitLanguage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_file.empty()) {
    out << result.str();
  } else {
    std::ofstream file(o.out_file);
    file << result.str();
    if (!file) {
      err << "error: cannot write " << o.out_file << "\n";
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace biforge::cli
