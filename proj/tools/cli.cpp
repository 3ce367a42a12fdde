#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "rmlogic/algebra.hpp"
#include "rmlogic/clone.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/faces.hpp"
#include "rmlogic/json_io.hpp"
#include "rmlogic/lindenbaum.hpp"
#include "rmlogic/selftest.hpp"
#include "rmlogic/semantics.hpp"
#include "rmlogic/translate.hpp"

namespace rmlogic::cli {

namespace {

struct Options {
  bool json = false;
  std::optional<int> arity;
};

struct Output {
  std::ostream& out;
  const Options& opt;
  void emit(const Json& j, const std::string& text) const {
    if (opt.json) {
      out << j.dump() << "\n";
    } else {
      out << text;
      if (!text.empty() && text.back() != '\n') out << "\n";
    }
  }
};

std::string assignment(const Valuation& v, const VarMap& map) {
  std::string s;
  for (int i = 1; i <= v.arity(); ++i) {
    if (i > 1) s += " ";
    s += map.name_of(i) + "=" + to_char(v.at(i));
  }
  return s.empty() ? "(empty valuation)" : s;
}

Json valuation_json(const Valuation& v) {
  Json a = Json::array();
  for (Trit t : v.digits()) a.push_back(std::string(1, to_char(t)));
  return a;
}

Valuation parse_valuation(const std::string& text, int needed) {
  std::vector<Trit> d;
  if (text.find_first_of(", ") != std::string::npos) {
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, text.find(',') != std::string::npos ? ',' : ' ')) {
      tok.erase(0, tok.find_first_not_of(' '));
      tok.erase(tok.find_last_not_of(' ') + 1);
      if (!tok.empty()) d.push_back(parse_trit(tok));
    }
  } else {
    for (char c : text) {
      auto t = trit_from_char(c);
      if (!t) throw InputError(std::string("bad trit '") + c + "' in valuation");
      d.push_back(*t);
    }
  }
  if (static_cast<int>(d.size()) < needed) {
    throw ArityError("valuation has " + std::to_string(d.size()) + " values but the formula uses X" +
                     std::to_string(needed));
  }
  return Valuation(std::move(d));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FiniteAlgebra load_algebra(const std::string& spec) {
  if (spec == "z-post") return z_post();
  if (spec == "z-rm") return z_rm();
  if (spec.rfind("faces:", 0) == 0) return faces_algebra(std::stoi(spec.substr(6)));
  if (spec.rfind("faces-post:", 0) == 0) return faces_post_algebra(std::stoi(spec.substr(11)));
  return parse_algebra(read_file(spec));
}

AxiomSet axiom_set(const std::string& name) {
  if (name == "kleene") return kleene_axioms();
  if (name == "post") return post_axioms();
  if (name == "rm") return rm_axioms();
  throw InputError("unknown axiom set '" + name + "'; expected kleene, post or rm");
}

/// Premises followed by the goal, parsed with one shared variable map.
struct Parsed {
  Theory theory;
  std::vector<Formula> premises;
  std::optional<Formula> goal;
  VarMap map;
};

Parsed parse_inputs(const std::vector<std::string>& premises, const std::optional<std::string>& goal) {
  std::vector<std::string> texts = premises;
  if (goal) texts.push_back(*goal);
  Parsed p;
  auto fs = parse_all(texts, &p.map);
  if (goal) {
    p.goal = fs.back();
    fs.pop_back();
  }
  p.premises = fs;
  for (const auto& f : fs) p.theory.add(f);
  return p;
}

int bool_exit(bool b) { return b ? kTrue : kFalse; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string verdict_text(const Verdict& v, const VarMap& map) {
  std::string s = "holds: " + yes_no(v.holds);
  if (v.mode == Mode::Incompatible) s += " (premises incompatible)";
  if (v.witness && !v.holds) s += "\nwitness: " + assignment(v.witness->valuation, map);
  if (v.witness && v.mode == Mode::Incompatible) {
    s += "\nclash: " + assignment(v.witness->valuation, map) + " premises";
    for (auto i : v.witness->premises) s += " " + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Rota-Metropolis cubic logic toolkit", "rmlogic"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--arity", opt.arity, "Evaluate at this many variables")->check(CLI::Range(0, kMaxArity));
  const Output o{out, opt};
  int code = kTrue;

  std::string formula, other, valuation, table_text, method = "direct", target, set_name, algebra_path, generators,
                                                     query;
  std::vector<std::string> premises, words;
  std::optional<int> m_opt;
  bool strict = false;
  int which = 0;

  auto* eval_cmd = app.add_subcommand("eval", "Value of a formula at a valuation");
  eval_cmd->add_option("-f,--formula", formula)->required();
  eval_cmd->add_option("-v,--valuation", valuation, "Trits, e.g. 0h1 or 0,1/2,1")->required();
  eval_cmd->callback([&] {
    VarMap map;
    const Formula f = parse_all({formula}, &map).front();
    const Valuation v = parse_valuation(valuation, f.max_var());
    const Trit t = eval(f, v);
    o.emit(Json{{"value", std::string(1, to_char(t))}, {"variables", to_json(map)}}, std::string(1, to_char(t)));
  });

  auto* table_cmd = app.add_subcommand("table", "Truth table");
  table_cmd->add_option("-f,--formula", formula)->required();
  table_cmd->add_option("-m", m_opt, "Arity");
  table_cmd->callback([&] {
    VarMap map;
    const Formula f = parse_all({formula}, &map).front();
    const int m = m_opt ? *m_opt : arity_for(Theory{}, f, opt.arity);
    if (m < f.max_var()) throw ArityError("formula uses X" + std::to_string(f.max_var()) + " but m = " + std::to_string(m));
    const TruthTable t = table(f, m);
    Json j = to_json(t);
    j["variables"] = to_json(map);
    o.emit(j, t.to_text());
  });

  auto* taut_cmd = app.add_subcommand("taut", "Is the formula constantly 1/2");
  taut_cmd->add_option("-f,--formula", formula)->required();
  taut_cmd->callback([&] {
    VarMap map;
    const Formula f = parse_all({formula}, &map).front();
    const int m = arity_for(Theory{}, f, opt.arity);
    const TruthTable t = table(f, m);
    const auto bad = t.first_not(Trit::Half);
    std::string text = "tautology: " + yes_no(!bad);
    Json w = nullptr;
    if (bad) {
      const Valuation v(m, *bad);
      text += "\nwitness: " + assignment(v, map) + " (value " + to_char(t.get(*bad)) + ")";
      w = valuation_json(v);
    }
    o.emit(Json{{"tautology", !bad}, {"witness", w}, {"variables", to_json(map)}}, text);
    code = bool_exit(!bad);
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Do two formulas have the same table");
  equiv_cmd->add_option("-f", formula)->required();
  equiv_cmd->add_option("-g", other)->required();
  equiv_cmd->callback([&] {
    VarMap map;
    const auto fs = parse_all({formula, other}, &map);
    const int m = arity_for(Theory{fs[0]}, fs[1], opt.arity);
    const TruthTable a = table(fs[0], m), b = table(fs[1], m);
    std::optional<std::uint64_t> diff;
    for (std::uint64_t i = 0; i < a.size() && !diff; ++i) {
      if (a.get(i) != b.get(i)) diff = i;
    }
    std::string text = "equivalent: " + yes_no(!diff);
    Json w = nullptr;
    if (diff) {
      const Valuation v(m, *diff);
      text += "\nwitness: " + assignment(v, map) + " (" + to_char(a.get(*diff)) + " vs " + to_char(b.get(*diff)) + ")";
      w = valuation_json(v);
    }
    o.emit(Json{{"equivalent", !diff}, {"witness", w}, {"variables", to_json(map)}}, text);
    code = bool_exit(!diff);
  });

  auto* compat_cmd = app.add_subcommand("compat", "Compatibility of a premise set");
  compat_cmd->add_option("-t,--theory", premises)->required();
  compat_cmd->add_flag("--strict-incompat", strict, "A premise valued 1/2 clashes with itself");
  compat_cmd->callback([&] {
    const Parsed p = parse_inputs(premises, std::nullopt);
    const auto reading = strict ? IncompatibilityReading::Literal : IncompatibilityReading::Clash;
    const auto c = compatibility(p.theory, arity_for(p.theory, Formula::half(), opt.arity), reading);
    std::string text = c.compatible() ? "compatible" : "incompatible";
    if (c.witness) {
      text += " at " + assignment(c.witness->valuation, p.map) + ": premises";
      for (auto i : c.witness->premises) text += " " + std::to_string(i + 1);
    }
    Json j = to_json(c);
    j["variables"] = to_json(p.map);
    o.emit(j, text);
    code = bool_exit(c.compatible());
  });

  auto* entails_cmd = app.add_subcommand("entails", "Consequence relation");
  entails_cmd->add_option("-t,--theory", premises);
  entails_cmd->add_option("-f,--formula", formula)->required();
  entails_cmd->add_option("--method", method)->check(CLI::IsMember({"direct", "meet", "reduction"}));
  entails_cmd->add_flag("--strict-incompat", strict, "A premise valued 1/2 clashes with itself");
  entails_cmd->callback([&] {
    const Parsed p = parse_inputs(premises, formula);
    const auto reading = strict ? IncompatibilityReading::Literal : IncompatibilityReading::Clash;
    const int m = arity_for(p.theory, *p.goal, opt.arity);
    Verdict v;
    if (method == "direct") {
      v = entails(p.theory, *p.goal, m, reading);
    } else {
      if (!compatibility(p.theory, m, reading).compatible()) {
        throw PreconditionError("method '" + method + "' needs compatible premises; use --method direct");
      }
      if (method == "meet") {
        v = entails_via_meet(p.theory, *p.goal, m);
      } else {
        if (p.theory.size() != 1) throw InputError("method 'reduction' takes exactly one premise");
        v.holds = entails_via_reduction(p.theory[0], *p.goal);
        if (!v.holds) v.witness = entails(p.theory, *p.goal, m).witness;
      }
    }
    Json j = to_json(v);
    j["variables"] = to_json(p.map);
    o.emit(j, verdict_text(v, p.map));
    code = bool_exit(v.holds);
  });

  auto* translate_cmd = app.add_subcommand("translate", "Translate between the RM and Post signatures");
  translate_cmd->add_option("--to", target)->required()->check(CLI::IsMember({"post", "rm"}));
  translate_cmd->add_option("-f,--formula", formula)->required();
  translate_cmd->callback([&] {
    if (target == "post") {
      const PostFormula p = to_post(parse(formula));
      o.emit(Json{{"formula", render(p)}, {"ast", to_json(p)}}, render(p));
    } else {
      const Formula f = to_rm(parse_post(formula));
      o.emit(Json{{"formula", render(f)}, {"ast", to_json(f)}}, render(f));
    }
  });

  auto* synth_cmd = app.add_subcommand("synth", "Formula realizing a truth table");
  synth_cmd->add_option("--table", table_text, "Row such as 0h1, or m=<k> then the row")->required();
  synth_cmd->callback([&] {
    const TruthTable t =
        table_text.find('=') != std::string::npos ? TruthTable::parse_text(table_text) : TruthTable::from_row(table_text);
    const Formula f = synthesize(t);
    o.emit(Json{{"formula", render(f)}, {"ast", to_json(f)}}, render(f));
  });

  auto* reduce_cmd = app.add_subcommand("reduce-post", "Post tautology problem as an RM tautology problem");
  reduce_cmd->add_option("-f,--formula", formula)->required();
  reduce_cmd->callback([&] {
    const PostFormula b = parse_post(formula);
    const Formula r = reduce_post_to_rm(b);
    const bool post = post_tautology(b);
    const bool rm = is_tautology(r);
    if (post != rm) throw InvariantError("reduction disagrees on " + formula);
    o.emit(Json{{"formula", render(r)}, {"post_tautology", post}, {"rm_tautology", rm}},
           render(r) + "\npost tautology: " + yes_no(post) + "\nrm tautology: " + yes_no(rm));
    code = bool_exit(post);
  });

  auto* faces_cmd = app.add_subcommand("faces", "Faces of the n-cube, written as words over 0, h, 1");
  faces_cmd->require_subcommand(1, 1);
  auto face_args = [&](CLI::App* c, int count) {
    c->add_option("faces", words)->required()->expected(count);
  };
  auto emit_face = [&](const Face& f) { o.emit(to_json(f), f.text()); };
  auto emit_bool = [&](const char* key, bool b) {
    o.emit(Json{{key, b}}, yes_no(b));
    code = bool_exit(b);
  };
  auto fw = [&](std::size_t i) { return face_from_word(words.at(i)); };
  auto* fj = faces_cmd->add_subcommand("join", "Smallest face containing both");
  face_args(fj, 2);
  fj->callback([&] { emit_face(join_faces(fw(0), fw(1))); });
  auto* fm = faces_cmd->add_subcommand("meet", "Intersection, if nonempty");
  face_args(fm, 2);
  fm->callback([&] {
    const auto r = intersect_faces(fw(0), fw(1));
    if (r) {
      emit_face(*r);
    } else {
      o.emit(Json{{"defined", false}}, "undefined");
      code = kFalse;
    }
  });
  auto* fa = faces_cmd->add_subcommand("antipodal", "Face antipodal to A inside B (arguments B A)");
  face_args(fa, 2);
  fa->callback([&] { emit_face(antipodal(fw(0), fw(1))); });
  auto* fd = faces_cmd->add_subcommand("dpar", "d(x, y)");
  face_args(fd, 2);
  fd->callback([&] { emit_face(dpar_faces(fw(0), fw(1))); });
  auto* fwg = faces_cmd->add_subcommand("wedge", "Conjunction through three intersections");
  face_args(fwg, 2);
  fwg->callback([&] { emit_face(wedge_faces(fw(0), fw(1))); });
  auto* fc = faces_cmd->add_subcommand("cap-curly", "Intersection through its formula");
  face_args(fc, 2);
  fc->callback([&] { emit_face(cap_curly(fw(0), fw(1))); });
  auto* fs = faces_cmd->add_subcommand("subface", "Is A a subface of B");
  face_args(fs, 2);
  fs->callback([&] { emit_bool("subface", is_subface(fw(0), fw(1))); });
  auto* fsh = faces_cmd->add_subcommand("sharper", "Is A sharper than B");
  face_args(fsh, 2);
  fsh->callback([&] { emit_bool("sharper", sharper_face(fw(0), fw(1))); });
  auto* fco = faces_cmd->add_subcommand("compatible", "Do A and B share a vertex");
  face_args(fco, 2);
  fco->callback([&] { emit_bool("compatible", compatible_faces(fw(0), fw(1))); });
  auto* ff = faces_cmd->add_subcommand("farthest", "Vertex farthest from the origin");
  face_args(ff, 1);
  ff->callback([&] { emit_face(farthest_vertex(fw(0))); });

  auto* axioms_cmd = app.add_subcommand("axioms", "Check an axiom set on a finite algebra");
  axioms_cmd->add_option("--set", set_name)->required();
  axioms_cmd->add_option("--algebra", algebra_path, "File, or z-post, z-rm, faces:<n>, faces-post:<n>")->required();
  axioms_cmd->callback([&] {
    const AxiomSet s = axiom_set(set_name);
    const FiniteAlgebra a = load_algebra(algebra_path);
    const auto r = check_axioms(a, s);
    if (r.pass) {
      o.emit(Json{{"pass", true}, {"equations", s.equations.size()}},
             "pass (" + std::to_string(s.equations.size()) + " equations)");
    } else {
      const auto& f = *r.failure;
      o.emit(Json{{"pass", false}, {"equation", f.label}, {"assignment", f.assignment}}, describe(s, f, a));
      code = kFalse;
    }
  });

  auto* clone_cmd = app.add_subcommand("clone", "Membership in a clone of operations of arity <= 2");
  clone_cmd->add_option("--generators", generators, "Comma separated names or table rows")->required();
  clone_cmd->add_option("--query", query)->required();
  clone_cmd->callback([&] {
    std::vector<std::string> names;
    std::istringstream in(generators);
    for (std::string g; std::getline(in, g, ',');) {
      if (!g.empty()) names.push_back(g);
    }
    const Clone c(names);
    const BinaryOp q = named_op(query);
    const auto term = c.term_for(q);
    std::string text = query + ": " + (term ? "member, " + *term : std::string("not a member")) + " (closure size " +
                       std::to_string(c.size()) + ")";
    o.emit(Json{{"member", term.has_value()}, {"term", term ? Json(*term) : Json(nullptr)}, {"closure_size", c.size()}},
           text);
    code = bool_exit(term.has_value());
  });

  auto* lind_cmd = app.add_subcommand("lind", "Mod set and Lindenbaum algebra of a premise set");
  lind_cmd->add_option("-t,--theory", premises);
  lind_cmd->add_option("-m", m_opt, "Arity");
  lind_cmd->callback([&] {
    const Parsed p = parse_inputs(premises, std::nullopt);
    const int m = m_opt ? *m_opt : arity_for(p.theory, Formula::half(), opt.arity);
    const Lindenbaum l = lind(p.theory, m);
    std::string text = "Mod: " + std::to_string(l.mod.size()) + " valuations";
    Json mods = Json::array();
    for (auto v : l.mod.valuations) {
      text += (v == l.mod.valuations.front() ? " " : ", ") + Valuation(m, v).word();
      mods.push_back(Valuation(m, v).word());
    }
    text += "\ncardinality: " + std::to_string(l.cardinality) + "\ncertificate: " + l.certificate;
    Json j{{"m", m}, {"mod", mods}, {"cardinality", l.cardinality}, {"certificate", l.certificate}};
    if (l.algebra && l.mod.size() >= 1) {
      const auto iso = iso_check(*l.algebra, faces_algebra(static_cast<int>(l.mod.size())));
      text += "\nisomorphic to faces of the " + std::to_string(l.mod.size()) + "-cube: " + yes_no(iso.has_value());
      j["iso_faces"] = iso.has_value();
      if (!iso) throw InvariantError("Lindenbaum algebra is not isomorphic to the face algebra");
    }
    o.emit(j, text);
  });

  auto* tables_cmd = app.add_subcommand("tables", "Check the simplex (1) or cube (2) correspondence table");
  tables_cmd->add_option("--check", which)->required()->check(CLI::IsMember({1, 2}));
  tables_cmd->add_option("-m", m_opt, "Arity, 1 or 2");
  tables_cmd->callback([&] {
    const auto r = table_correspondence_check(which, m_opt ? *m_opt : 1);
    o.emit(to_json(r), format_report(r));
    code = bool_exit(r.pass());
  });

  auto* selftest_cmd = app.add_subcommand("selftest", "Run every exhaustive invariant sweep");
  selftest_cmd->callback([&] {
    const auto r = run_selftest();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    }
    o.emit(Json{{"ok", r.ok()}, {"checks", checks}}, format_selftest(r));
    code = r.ok() ? kTrue : kInternal;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace rmlogic::cli
