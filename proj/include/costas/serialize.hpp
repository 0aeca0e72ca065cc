#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "costas/bounds.hpp"
#include "costas/counting.hpp"
#include "costas/ff.hpp"
#include "costas/golomb.hpp"
#include "costas/xcorr.hpp"

namespace costas {

inline constexpr const char* kCsvVersionLine = "# costas-lab v1";

nlohmann::json field_to_json(const Field& field);
nlohmann::json permutation_to_json(const Field& field, const CostasPermutation& perm);
nlohmann::json report_to_json(const FamilyMaxReport& report);
nlohmann::json report_to_json(const BoundReport& report);
nlohmann::json report_to_json(const CountResult& result);

/// Accepts either a permutation document ({"perm": [...], ...}) or a bare array.
CostasPermutation permutation_from_json(const nlohmann::json& doc);

/// Columns q,g1_enc,g2_enc,g3_enc,g4_enc,u,v,count, one row per shift.
void write_table_csv(std::ostream& os, const Field& field, GolombPair first, GolombPair second,
                     const CorrelationTable& table, bool header = true);

}  // namespace costas
