#pragma once

#include <nlohmann/json.hpp>

#include "rmlogic/algebra.hpp"
#include "rmlogic/faces.hpp"
#include "rmlogic/formula.hpp"
#include "rmlogic/lindenbaum.hpp"
#include "rmlogic/semantics.hpp"

namespace rmlogic {

using Json = nlohmann::json;

/// {"op": name, "args": [...]} with {"var": "X1"} and {"const": "0"|"h"|"1"}
/// leaves.
Json to_json(const Formula& f);
/// Variables named X<k> get index k; other names are looked up in `map`
/// (InputError if absent).
Formula formula_from_json(const Json& j, const VarMap& map = {});

Json to_json(const PostFormula& f);

/// {"holds", "mode", "witness": {"valuation": [...], "premises": [...]} | null}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json to_json(const CompatibilityResult& c);

/// {"n", "A0", "A1", "word"}
Json to_json(const Face& f);
Face face_from_json(const Json& j);

/// {"m", "row"}
Json to_json(const TruthTable& t);
/// {"X1": 1, "p": 2, ...}
Json to_json(const VarMap& m);
Json to_json(const TableReport& r);
Json to_json(const FiniteAlgebra& a);

}  // namespace rmlogic
