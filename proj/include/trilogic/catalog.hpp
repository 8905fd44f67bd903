#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trilogic/analysis.hpp"
#include "trilogic/family.hpp"
#include "trilogic/laws.hpp"

namespace trilogic {

/// One family member as persisted: its id, the four tables as cell strings
/// (rows and columns ordered t, f, b) and its 23-character law profile.
struct CatalogRecord {
  LogicId id = 0;
  std::string neg;
  std::string conj;
  std::string disj;
  std::string imp;
  std::string profile;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

class catalog_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline CatalogRecord make_record(LogicId id) {
  const LogicSpec logic = decode(id);
  return {id, logic.neg.str(), logic.conj.str(), logic.disj.str(), logic.imp.str(), family_profiles()[id].str()};
}

inline std::vector<CatalogRecord> build_catalog() {
  std::vector<CatalogRecord> out;
  out.reserve(family_size);
  for (std::size_t id = 0; id < family_size; ++id) out.push_back(make_record(static_cast<LogicId>(id)));
  return out;
}

/// Throws catalog_error unless the tables form a family member whose id is
/// `r.id` and the stored profile matches the recomputed one.
inline void validate_record(const CatalogRecord& r) {
  const std::string where = "record " + std::to_string(r.id) + ": ";
  LogicSpec logic;
  try {
    logic = logic_from_tables(r.neg, r.conj, r.disj, r.imp);
  } catch (const std::exception& e) {
    throw catalog_error(where + e.what());
  }
  if (auto c = satisfies_family_constraints(logic); !c) throw catalog_error(where + c.describe());
  if (encode(logic) != r.id) throw catalog_error(where + "tables encode to " + std::to_string(encode(logic)));
  if (law_profile(logic).str() != r.profile)
    throw catalog_error(where + "stored profile " + r.profile + " differs from " + law_profile(logic).str());
}

inline nlohmann::json to_json(const CatalogRecord& r) {
  return {{"id", r.id}, {"neg", r.neg}, {"and", r.conj}, {"or", r.disj}, {"imp", r.imp}, {"profile", r.profile}};
}

inline CatalogRecord record_from_json(const nlohmann::json& j) {
  try {
    const auto id = j.at("id").get<long long>();
    if (id < 0 || id >= static_cast<long long>(family_size)) throw catalog_error("id out of range");
    return {static_cast<LogicId>(id),          j.at("neg").get<std::string>(), j.at("and").get<std::string>(),
            j.at("or").get<std::string>(),     j.at("imp").get<std::string>(), j.at("profile").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw catalog_error(e.what());
  }
}

/// JSON lines, one record per line.
inline void write_jsonl(std::ostream& os, const std::vector<CatalogRecord>& records) {
  for (const auto& r : records) os << to_json(r).dump() << '\n';
}

inline std::vector<CatalogRecord> read_jsonl(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw catalog_error("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

inline constexpr const char* csv_header = "id,neg,and,or,imp,profile";

inline void write_csv(std::ostream& os, const std::vector<CatalogRecord>& records) {
  os << csv_header << '\n';
  for (const auto& r : records)
    os << r.id << ',' << r.neg << ',' << r.conj << ',' << r.disj << ',' << r.imp << ',' << r.profile << '\n';
}

inline std::vector<CatalogRecord> read_csv(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1) {
      if (line != csv_header) throw catalog_error("line 1: expected header '" + std::string(csv_header) + "'");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw catalog_error("line " + std::to_string(number) + ": expected 6 fields");
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(fields[0], &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != fields[0].size() || id >= family_size)
      throw catalog_error("line " + std::to_string(number) + ": bad id '" + fields[0] + "'");
    out.push_back({static_cast<LogicId>(id), fields[1], fields[2], fields[3], fields[4], fields[5]});
  }
  return out;
}

}  // namespace trilogic
