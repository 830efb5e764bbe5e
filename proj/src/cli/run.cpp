// Copyright 2026 The gbmodal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbm/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gbm/algebra/lattice.hpp"
#include "gbm/cli/codec.hpp"
#include "gbm/cli/examples.hpp"
#include "gbm/correspondence/correspondence.hpp"
#include "gbm/error.hpp"
#include "gbm/semantics/model.hpp"

namespace gbm::cli {

namespace {

struct Options {
  bool machine = false;
  bool no_check = false;
  bool reflexive_closure = false;
  std::size_t cap = semantics::kDefaultValuationCap;
};

class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void kv(const std::string& key, const std::string& value) {
    out_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void result(bool pass) { kv("result", std::string(pass ? "PASS" : "FAIL")); }
  std::ostream& raw() { return out_; }
  bool machine() const { return machine_; }

 private:
  std::ostream& out_;
  bool machine_;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), err_(err), p_(out, opt.machine) {}

  int check(const std::string& file);
  int lattice(const std::string& file, bool dot);
  int eval(const std::string& file, const std::string& formula);
  int sequent(const std::string& file, const std::string& text);
  int valid(const std::string& file, const std::string& text);
  int correspond(const std::string& file, const std::string& axiom);
  int algebra_frame(const std::string& file, bool loose);
  int algebra_canonext(const std::string& file, bool loose);
  int algebra_validate(const std::string& file, const std::string& text);
  int example(const std::string& name, bool agent_uses_delta, const std::string& table);
  int fuzz(std::uint64_t seed, std::size_t count, std::size_t max_states);

 private:
  std::string read(const std::string& file) {
    if (file == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  FrameDocument load_doc(const std::string& file) { return parse_frame(read(file), opt_.reflexive_closure); }

  frames::Check check_mode() const { return opt_.no_check ? frames::Check::Unchecked : frames::Check::Enforce; }

  semantics::AlgebraPtr load_algebra(const std::string& file, FrameDocument* doc_out = nullptr) {
    FrameDocument doc = load_doc(file);
    auto ca = semantics::make_algebra(to_frame(doc, check_mode()));
    if (doc_out) *doc_out = std::move(doc);
    return ca;
  }

  semantics::Model load_model(const std::string& file) {
    FrameDocument doc = load_doc(file);
    auto ca = semantics::make_algebra(to_frame(doc, check_mode()));
    std::vector<std::string> unstable;
    semantics::Model m = semantics::Model::from_extents(ca, doc.valuations, &unstable);
    for (const auto& name : unstable)
      err_ << "warning: V(" << name << ") = " << format_set(doc.valuations.at(name))
           << " is not Galois-stable; using " << format_set(m.value(name).extent) << '\n';
    return m;
  }

  void print_valuation(const semantics::Valuation& v) {
    for (const auto& [name, c] : v) {
      p_.kv("countermodel." + name + ".extent", format_set(c.extent));
      p_.kv("countermodel." + name + ".intent", format_set(c.intent));
    }
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& err_;
  Printer p_;
};

int Session::check(const std::string& file) {
  FrameDocument doc = load_doc(file);
  Rel rbox = doc.Rbox ? *doc.Rbox : doc.E;
  Rel rdia = doc.Rdia ? *doc.Rdia : converse(doc.E);
  frames::CompatReport report = frames::check_e_compat(doc.E, rbox, rdia);
  const auto& u = *doc.universe;
  p_.kv("states", u.size());
  p_.kv("reflexive", report.non_reflexive.empty());
  for (std::size_t z : report.non_reflexive) err_ << "error: E not reflexive at state " << u.label(z) << '\n';
  p_.kv("compatible", report.violations.empty());
  for (const auto& v : report.violations)
    p_.kv("violation", v.relation + " " + v.condition + " at " + u.label(v.state));
  p_.result(report.ok());
  return report.ok() ? kExitPass : kExitFail;
}

int Session::lattice(const std::string& file, bool dot) {
  auto ca = load_algebra(file);
  const auto& lat = ca->lattice();
  if (dot) {
    auto& os = p_.raw();
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i)
      os << "  c" << i << " [label=\"" << format_set(lat[i].extent) << "\\n" << format_set(lat[i].intent)
         << "\"];\n";
    for (auto [a, b] : lat.hasse_edges()) os << "  c" << a << " -> c" << b << ";\n";
    os << "}\n";
    return kExitPass;
  }
  p_.kv("concepts", lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    p_.kv("c" + std::to_string(i) + ".extent", format_set(lat[i].extent));
    p_.kv("c" + std::to_string(i) + ".intent", format_set(lat[i].intent));
  }
  std::string edges;
  for (auto [a, b] : lat.hasse_edges())
    edges += (edges.empty() ? "" : " ") + ("c" + std::to_string(a) + "<c" + std::to_string(b));
  p_.kv("hasse", edges);
  return kExitPass;
}

int Session::eval(const std::string& file, const std::string& formula) {
  auto f = logic::parse_formula(formula);
  semantics::Model m = load_model(file);
  fca::Concept c = m.eval(f);
  p_.kv("formula", logic::print(f));
  p_.kv("extent", format_set(c.extent));
  p_.kv("intent", format_set(c.intent));
  return kExitPass;
}

int Session::sequent(const std::string& file, const std::string& text) {
  auto s = logic::parse_sequent(text);
  semantics::Model m = load_model(file);
  auto w = semantics::sequent_counterexample(m, s);
  p_.kv("sequent", logic::print(s));
  p_.kv("true", !w.has_value());
  if (w) {
    const auto& u = *m.frame().universe();
    p_.kv("witness", u.label(w->first) + " forces lhs, " + u.label(w->second) + " refutes rhs, " +
                         u.label(w->first) + " E " + u.label(w->second));
  }
  return w ? kExitFail : kExitPass;
}

int Session::valid(const std::string& file, const std::string& text) {
  auto s = logic::parse_sequent(text);
  auto ca = load_algebra(file);
  auto r = semantics::frame_valid(ca, s, opt_.cap);
  p_.kv("sequent", logic::print(s));
  p_.kv("valid", r.valid);
  p_.kv("valuations", r.valuations);
  if (!r.valid) {
    print_valuation(*r.countermodel);
    const auto& u = *ca->frame().universe();
    p_.kv("witness", u.label(r.witness->first) + " E " + u.label(r.witness->second));
  }
  return r.valid ? kExitPass : kExitFail;
}

int Session::correspond(const std::string& file, const std::string& axiom) {
  std::vector<correspondence::AxiomId> axes;
  if (axiom == "all") {
    axes.assign(correspondence::kAllAxioms.begin(), correspondence::kAllAxioms.end());
  } else if (auto ax = correspondence::axiom_from_name(axiom)) {
    axes.push_back(*ax);
  } else {
    throw CLI::ValidationError("axiom", "unknown axiom '" + axiom + "'");
  }
  auto ca = load_algebra(file);
  bool all_agree = true;
  for (auto ax : axes) {
    auto v = correspondence::check_correspondence(ax, ca, opt_.cap);
    const std::string k(correspondence::axiom_name(ax));
    p_.kv(k + ".sequent", logic::print(correspondence::axiom_sequent(ax)));
    p_.kv(k + ".condition", std::string(correspondence::condition_text(ax)));
    p_.kv(k + ".valid", v.valid);
    p_.kv(k + ".condition_holds", v.condition);
    p_.kv(k + ".agree", v.agree());
    all_agree = all_agree && v.agree();
  }
  p_.result(all_agree);
  return all_agree ? kExitPass : kExitFail;
}

int Session::algebra_frame(const std::string& file, bool loose) {
  auto a = parse_algebra(read(file));
  auto fa = algebra::build_frame_FA(a, loose ? algebra::XLMode::Loose : algebra::XLMode::Strict, check_mode());
  std::vector<std::string> header{"frame of the algebra: states are disjoint (filter, ideal) pairs"};
  for (std::size_t z = 0; z < fa.graph.states.size(); ++z) {
    const auto& [f, j] = fa.graph.states[z];
    header.push_back(fa.graph.universe->label(z) + " = (" + to_string(f) + ", " + to_string(j) + ")");
  }
  p_.raw() << save_frame(fa.frame, {}, header);
  return kExitPass;
}

int Session::algebra_canonext(const std::string& file, bool loose) {
  auto a = parse_algebra(read(file));
  const auto mode = loose ? algebra::XLMode::Loose : algebra::XLMode::Strict;
  auto g = algebra::build_graph_XL(a.lattice(), mode);
  bool iso = algebra::check_canonical_extension(a.lattice(), mode);
  bool modal = algebra::check_complex_algebra_iso(a, mode);
  p_.kv("elements", a.size());
  p_.kv("states", g.states.size());
  p_.kv("lattice_iso", iso);
  p_.kv("modal_iso", modal);
  p_.kv("filtidl_lemma", algebra::check_filtidl_lemma(a));
  p_.result(iso && modal);
  return iso && modal ? kExitPass : kExitFail;
}

int Session::algebra_validate(const std::string& file, const std::string& text) {
  auto a = parse_algebra(read(file));
  auto s = logic::parse_sequent(text);
  auto r = algebra::algebra_validates(a, s, opt_.cap);
  p_.kv("sequent", logic::print(s));
  p_.kv("valid", r.valid);
  p_.kv("assignments", r.assignments);
  if (!r.valid)
    for (const auto& [name, e] : *r.counterexample) p_.kv("counterexample." + name, a.lattice().label(e));
  return r.valid ? kExitPass : kExitFail;
}

int Session::example(const std::string& name, bool agent_uses_delta, const std::string& table) {
  FrameDocument doc = name == "synonymy"
                          ? synonymy_example()
                          : colour_example(table.empty() ? default_colour_table() : parse_colour_table(table),
                                           agent_uses_delta);
  std::vector<std::string> header;
  if (name == "synonymy") {
    header.push_back("three food words; E relates chips to fries and crisps");
  } else {
    header.push_back("wavelengths in nm; x E y iff |x-y| < delta(x), x R y iff |x-y| < delta_a(x)");
    header.push_back("the spectrum starts at 370 so that the first table band is covered");
  }
  auto frame = to_frame(doc, frames::Check::Unchecked);
  auto report = frames::check_e_compat(frame);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    header.push_back(std::to_string(report.violations.size()) + " E-compatibility violations, first: " +
                     v.relation + " " + v.condition + " at " + frame.universe()->label(v.state));
    header.push_back("load with --no-check");
  }
  p_.raw() << save_frame(frame, doc.valuations, header);
  return kExitPass;
}

int Session::fuzz(std::uint64_t seed, std::size_t count, std::size_t max_states) {
  correspondence::FrameGenerator gen(seed);
  std::size_t mismatches = 0;
  std::map<correspondence::AxiomId, std::size_t> valid_count;
  for (std::size_t i = 0; i < count; ++i) {
    auto ca = semantics::make_algebra(gen.frame(1, max_states));
    for (auto ax : correspondence::kAllAxioms) {
      auto v = correspondence::check_correspondence(ax, ca, opt_.cap);
      if (!v.agree()) {
        ++mismatches;
        err_ << "mismatch on frame " << i << " for " << correspondence::axiom_name(ax) << ":\n"
             << save_frame(ca->frame());
      }
      if (v.valid) ++valid_count[ax];
    }
  }
  p_.kv("seed", std::to_string(seed));
  p_.kv("frames", count);
  for (auto ax : correspondence::kAllAxioms)
    p_.kv(std::string(correspondence::axiom_name(ax)) + ".valid_frames", valid_count[ax]);
  p_.kv("mismatches", mismatches);
  p_.result(mismatches == 0);
  return mismatches == 0 ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-based semantics workbench for non-distributive modal logic", "gbmodal"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--machine", opt.machine, "key=value output");
  app.add_flag("--no-check", opt.no_check, "skip the E-compatibility check when loading frames");
  app.add_flag("--reflexive-closure", opt.reflexive_closure, "add all loops to E");
  app.add_option("--cap", opt.cap, "valuation cap for validity sweeps");

  std::string file, text, name, table, delta_a;
  bool dot = false, loose = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000, max_states = 4;
  std::function<int(Session&)> action;

  auto* check = app.add_subcommand("check", "reflexivity and E-compatibility with witnesses");
  check->add_option("file", file, "frame file or -")->required();
  check->callback([&] { action = [&](Session& s) { return s.check(file); }; });

  auto* lat = app.add_subcommand("lattice", "concepts of the frame's polarity and Hasse edges");
  lat->add_option("file", file)->required();
  lat->add_flag("--dot", dot, "Graphviz output");
  lat->callback([&] { action = [&](Session& s) { return s.lattice(file, dot); }; });

  auto* ev = app.add_subcommand("eval", "extent and intent of a formula");
  ev->add_option("file", file)->required();
  ev->add_option("formula", text)->required();
  ev->callback([&] { action = [&](Session& s) { return s.eval(file, text); }; });

  auto* seq = app.add_subcommand("sequent", "truth of a sequent in the model");
  seq->add_option("file", file)->required();
  seq->add_option("sequent", text)->required();
  seq->callback([&] { action = [&](Session& s) { return s.sequent(file, text); }; });

  auto* val = app.add_subcommand("valid", "validity of a sequent on the frame");
  val->add_option("file", file)->required();
  val->add_option("sequent", text)->required();
  val->callback([&] { action = [&](Session& s) { return s.valid(file, text); }; });

  auto* cor = app.add_subcommand("correspond", "axiom validity against its first-order condition");
  cor->add_option("file", file)->required();
  cor->add_option("axiom", name, "T_box T_dia Four_box Four_dia Tc_box Tc_dia, 1..6, or all")->required();
  cor->callback([&] { action = [&](Session& s) { return s.correspond(file, name); }; });

  auto* alg = app.add_subcommand("algebra", "finite modal algebras");
  alg->require_subcommand(1);
  auto* alg_frame = alg->add_subcommand("frame", "print the graph-based frame of the algebra");
  alg_frame->add_option("file", file)->required();
  alg_frame->add_flag("--loose", loose, "allow empty filter or ideal components");
  alg_frame->callback([&] { action = [&](Session& s) { return s.algebra_frame(file, loose); }; });
  auto* alg_canon = alg->add_subcommand("canonext", "check that the frame's complex algebra is the algebra");
  alg_canon->add_option("file", file)->required();
  alg_canon->add_flag("--loose", loose, "allow empty filter or ideal components");
  alg_canon->callback([&] { action = [&](Session& s) { return s.algebra_canonext(file, loose); }; });
  auto* alg_val = alg->add_subcommand("validate", "validity of a sequent in the algebra");
  alg_val->add_option("file", file)->required();
  alg_val->add_option("sequent", text)->required();
  alg_val->callback([&] { action = [&](Session& s) { return s.algebra_validate(file, text); }; });

  auto* ex = app.add_subcommand("example", "print a built-in frame file");
  ex->add_option("name", name)->required()->check(CLI::IsMember({"synonymy", "colour"}));
  ex->add_option("--delta-a", delta_a, "'delta' makes the agent as discriminating as E")
      ->check(CLI::IsMember({"delta"}));
  ex->add_option("--table", table, "bands lo-hi:delta:delta_a, comma separated");
  ex->callback([&] {
    action = [&](Session& s) { return s.example(name, delta_a == "delta", table); };
  });

  auto* fz = app.add_subcommand("fuzz-correspond", "random frames, all six correspondences");
  fz->add_option("--seed", seed);
  fz->add_option("--count", count);
  fz->add_option("--max-states", max_states)->check(CLI::Range(1, 8));
  fz->callback([&] { action = [&](Session& s) { return s.fuzz(seed, count, max_states); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Session session(opt, in, out, err);
  try {
    return action(session);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidStructure& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gbm::cli
