#include "rmlogic/json_io.hpp"

#include "rmlogic/errors.hpp"

namespace rmlogic {

namespace {

std::string trit_text(Trit t) { return std::string(1, to_char(t)); }

Json valuation_json(const Valuation& v) {
  Json a = Json::array();
  for (Trit t : v.digits()) a.push_back(trit_text(t));
  return a;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"valuation", valuation_json(w->valuation)}, {"premises", w->premises}};
}

std::optional<Witness> witness_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  std::vector<Trit> d;
  for (const auto& s : j.at("valuation")) d.push_back(parse_trit(s.get<std::string>()));
  return Witness{Valuation(std::move(d)), j.at("premises").get<std::vector<std::size_t>>()};
}

}  // namespace

Json to_json(const Formula& f) {
  switch (f.op()) {
    case Op::Const0: return Json{{"const", "0"}};
    case Op::ConstHalf: return Json{{"const", "h"}};
    case Op::Const1: return Json{{"const", "1"}};
    case Op::Var: return Json{{"var", f.name()}};
    default: break;
  }
  Json args = Json::array();
  args.push_back(to_json(f.lhs()));
  if (f.arity() == 2) args.push_back(to_json(f.rhs()));
  return Json{{"op", std::string(op_name(f.op()))}, {"args", args}};
}

Formula formula_from_json(const Json& j, const VarMap& map) {
  try {
    if (!j.is_object()) throw InputError("formula JSON must be an object");
    if (j.contains("const")) {
      const auto c = j.at("const").get<std::string>();
      if (c == "0") return Formula::zero();
      if (c == "h") return Formula::half();
      if (c == "1") return Formula::one();
      throw InputError("unknown constant '" + c + "'");
    }
    if (j.contains("var")) {
      const auto name = j.at("var").get<std::string>();
      if (auto idx = map.find(name)) return Formula::var(name, *idx);
      const bool x_name = name.size() > 1 && name[0] == 'X' && name[1] != '0' &&
                          name.find_first_not_of("0123456789", 1) == std::string::npos;
      if (x_name) return Formula::var(name, std::stoi(name.substr(1)));
      throw InputError("unknown variable '" + name + "'");
    }
    const auto name = j.at("op").get<std::string>();
    const auto op = op_from_name(name);
    if (!op) throw InputError("unknown operation '" + name + "'");
    std::vector<Formula> args;
    for (const auto& a : j.at("args")) args.push_back(formula_from_json(a, map));
    if (static_cast<int>(args.size()) != op_arity(*op)) {
      throw InputError("operation '" + name + "' takes " + std::to_string(op_arity(*op)) + " arguments");
    }
    return Formula::make(*op, std::move(args));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed formula JSON: ") + e.what());
  }
}

Json to_json(const PostFormula& f) {
  switch (f.op()) {
    case PostOp::Const0: return Json{{"const", "0"}};
    case PostOp::ConstHalf: return Json{{"const", "h"}};
    case PostOp::Const1: return Json{{"const", "1"}};
    case PostOp::Var: return Json{{"var", f.name()}};
    case PostOp::Neg: return Json{{"op", "neg"}, {"args", {to_json(f.operand())}}};
    case PostOp::Nabla: return Json{{"op", "nabla"}, {"args", {to_json(f.operand())}}};
    case PostOp::Vee: return Json{{"op", "vee"}, {"args", {to_json(f.lhs()), to_json(f.rhs())}}};
    case PostOp::Meet: return Json{{"op", "meet"}, {"args", {to_json(f.lhs()), to_json(f.rhs())}}};
  }
  return nullptr;
}

Json to_json(const Verdict& v) {
  return Json{{"holds", v.holds},
              {"mode", v.mode == Mode::Compatible ? "compatible" : "incompatible"},
              {"witness", witness_json(v.witness)}};
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.holds = j.at("holds").get<bool>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "compatible" && mode != "incompatible") throw InputError("bad mode '" + mode + "'");
    v.mode = mode == "compatible" ? Mode::Compatible : Mode::Incompatible;
    v.witness = witness_from_json(j.at("witness"));
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed verdict JSON: ") + e.what());
  }
}

Json to_json(const CompatibilityResult& c) {
  return Json{{"mode", c.compatible() ? "compatible" : "incompatible"}, {"witness", witness_json(c.witness)}};
}

Json to_json(const Face& f) {
  return Json{{"n", f.n()}, {"A0", f.a0()}, {"A1", f.a1()}, {"word", f.text()}};
}

Face face_from_json(const Json& j) {
  try {
    const Face f = Face::from_sets(j.at("n").get<int>(), j.at("A0").get<std::vector<int>>(),
                                   j.at("A1").get<std::vector<int>>());
    if (j.contains("word") && j.at("word").get<std::string>() != f.text()) {
      throw InputError("face JSON: word does not match A0/A1");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed face JSON: ") + e.what());
  }
}

Json to_json(const TruthTable& t) { return Json{{"m", t.arity()}, {"row", t.row()}}; }

Json to_json(const VarMap& m) {
  Json j = Json::object();
  for (const auto& [name, idx] : m.entries()) j[name] = idx;
  return j;
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"row", row.row}, {"description", row.description}, {"pass", row.pass}, {"counts", row.counts}});
  }
  return Json{{"table", r.table}, {"m", r.m}, {"pass", r.pass()}, {"rows", rows}};
}

Json to_json(const FiniteAlgebra& a) {
  Json j{{"carrier", a.size}, {"constants", a.constants}, {"unops", a.unops}, {"binops", a.binops}};
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

}  // namespace rmlogic
