#include "rootharm/report.hpp"

namespace rootharm {

void Report::fail(Json w) {
  if (pass) witness = std::move(w);
  pass = false;
}

void Report::absorb(const Report& sub) {
  if (!details.contains("checks")) details["checks"] = Json::array();
  details["checks"].push_back(sub.to_json());
  if (!sub.pass) fail(Json{{"relation", sub.relation}, {"witness", sub.witness}});
}

Json Report::to_json() const {
  Json j;
  j["relation"] = relation;
  j["status"] = pass ? "pass" : "fail";
  j["witness"] = witness;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace rootharm
