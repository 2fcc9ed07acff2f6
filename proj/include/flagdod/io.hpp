#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "flagdod/dims.hpp"
#include "flagdod/flags.hpp"
#include "flagdod/ideals.hpp"
#include "flagdod/twg.hpp"

namespace flagdod {

using Json = nlohmann::json;

/// Sign pairs "(+,-)" for cosets of W/W_{n} in type C, compact permutation
/// strings otherwise.
std::string position_label(const PositionPoset& P, std::size_t index);

Json to_json(const PositionPoset& P);
std::string to_dot(const PositionPoset& P, const std::string& name = "hasse");

/// Balanced ideals of P with generators and minimal Anosov types (the
/// latter only for one-sided posets W/W_eta).
Json ideals_report(const PositionPoset& P);

/// Entries are [re, im] pairs of integers or rational strings, or a single
/// real value.
GQ entry_from_json(const Json& j);
Json entry_to_json(const GQ& x);
ExactMatrix matrix_from_json(const Json& rows);  // list of rows
Json matrix_to_json(const ExactMatrix& m);

/// {"ambient": n, "signature": [...], "columns": [...]} where "columns" spans
/// the top subspace (completed greedily), or "basis" gives all n columns.
ExactFlag flag_from_json(const Json& j);
Json flag_to_json(const ExactFlag& F);
/// {"gram": rows}
SymplecticForm form_from_json(const Json& j);

Json to_json(const WeightGraph& g);
WeightGraph graph_from_json(const Json& j);
std::string to_dot(const WeightGraph& g, const std::string& name = "twg");

Json to_json(const Classification& c);
Json to_json(const CaseResult& r);

Json census_json(const std::vector<FlagVarietyDescriptor>& census);
std::string census_text(const std::vector<FlagVarietyDescriptor>& census);
Json fullcases_json(const std::vector<CaseTableRow>& rows);
std::string fullcases_text(const std::vector<CaseTableRow>& rows);

/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace flagdod
