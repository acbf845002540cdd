#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rootharm/report.hpp"

namespace rootharm::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Empty fields fall back to the per-suite defaults.
struct RunConfig {
  std::string type;  // "A2", or "A" together with rank
  int rank = 0;
  std::string k;  // "symbolic", one value, or a comma list per orbit
  std::string q;
  int height = -1;
  std::string lambda;  // "a..b" or a comma list, rank one only
  std::string format = "json";
  std::string out;
  unsigned seed = 1;

  // Root datum label after combining type and rank; empty when unset.
  std::string label() const;
  void validate() const;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& table_kinds();

Report run_suite(const std::string& name, const RunConfig& cfg);
// Rows of {column: value}, ordered deterministically.
Json make_table(const std::string& kind, const RunConfig& cfg);

std::string render_report(const Report& r, const std::string& format);
std::string render_table(const Json& rows, const std::string& format);

}  // namespace rootharm::cli
