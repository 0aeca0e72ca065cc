#include "costas/serialize.hpp"

#include <ostream>
#include <stdexcept>

namespace costas {

using nlohmann::json;

json field_to_json(const Field& field) {
  return {{"p", field.p()}, {"w", field.w()}, {"modulus_coeffs", field.modulus()},
          {"generator_enc", field.generator().enc}};
}

json permutation_to_json(const Field& field, const CostasPermutation& perm) {
  json doc = {{"q", field.q()}, {"p", field.p()}, {"w", field.w()}, {"modulus_coeffs", field.modulus()}};
  if (perm.origin) {
    doc["g1_enc"] = perm.origin->g1.enc;
    doc["g2_enc"] = perm.origin->g2.enc;
  }
  doc["perm"] = perm.values;
  return doc;
}

json report_to_json(const FamilyMaxReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"i", w.first}, {"j", w.second}, {"u", w.u}, {"v", w.v}});
  return {{"family", report.family},
          {"family_size", report.family_size},
          {"value", report.value},
          {"occurrences", report.occurrences},
          {"witnesses", witnesses},
          {"restricted", report.restricted},
          {"pairs_scanned", report.pairs_scanned},
          {"symmetry_order", report.symmetry_order}};
}

json report_to_json(const BoundReport& report) {
  json cands = json::array();
  for (const auto& c : report.candidates)
    cands.push_back({{"label", c.label}, {"value", c.value}, {"certified", c.certified}});
  json doc = {{"q", report.q}, {"r", report.ep.r}, {"s", report.ep.s}, {"candidates", cands}, {"best", report.best}};
  doc["exact"] = report.exact ? json(*report.exact) : json(nullptr);
  return doc;
}

json report_to_json(const CountResult& result) {
  json refs = json::array();
  for (const auto& r : result.reference_bounds) refs.push_back({{"label", r.label}, {"value", r.value}});
  json chain = json::array();
  for (const auto& l : result.chain) chain.push_back({{"label", l.label}, {"value", l.value}});
  json doc = {{"q", result.q}, {"B", result.B}, {"query", result.query}, {"exact", result.exact}};
  doc["certified_bound"] = result.certified_bound ? json(*result.certified_bound) : json(nullptr);
  doc["reference_bounds"] = refs;
  doc["chain"] = chain;
  doc["chain_holds"] = result.chain_holds;
  return doc;
}

CostasPermutation permutation_from_json(const json& doc) {
  const json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("perm")) throw std::invalid_argument("permutation document has no \"perm\" field");
    arr = &doc.at("perm");
  }
  if (!arr->is_array()) throw std::invalid_argument("permutation must be a JSON array of integers");
  CostasPermutation perm;
  for (const auto& v : *arr) {
    if (!v.is_number_integer()) throw std::invalid_argument("permutation entries must be integers");
    perm.values.push_back(v.get<std::int32_t>());
  }
  return perm;
}

void write_table_csv(std::ostream& os, const Field& field, GolombPair first, GolombPair second,
                     const CorrelationTable& table, bool header) {
  if (header) os << kCsvVersionLine << "\nq,g1_enc,g2_enc,g3_enc,g4_enc,u,v,count\n";
  const int n = table.n();
  for (int u = 1 - n; u <= n - 1; ++u)
    for (int v = 1 - n; v <= n - 1; ++v)
      os << field.q() << ',' << first.g1.enc << ',' << first.g2.enc << ',' << second.g1.enc << ','
         << second.g2.enc << ',' << u << ',' << v << ',' << table.at(u, v) << '\n';
}

}  // namespace costas
