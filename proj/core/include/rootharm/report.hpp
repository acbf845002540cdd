#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace rootharm {

using Json = nlohmann::ordered_json;

// Outcome of a verification: status plus the first witness of failure.
struct Report {
  std::string relation;
  bool pass = true;
  Json witness;
  Json details = Json::object();

  explicit Report(std::string rel = {}) : relation(std::move(rel)) {}
  // Records a failure; only the first witness is kept.
  void fail(Json w);
  // Folds a sub-check into this report.
  void absorb(const Report& sub);
  Json to_json() const;
};

}  // namespace rootharm
