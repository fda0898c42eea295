#ifndef UNIFINT_REPORT_HPP
#define UNIFINT_REPORT_HPP

#include <string>

#include "json.hpp"

#include "unifint/congr.hpp"
#include "unifint/lgroup.hpp"

namespace unifint {

struct RunConfig {
  long long element_budget = kDefaultElementBudget;
  int congruence_limit = 20000;
  unsigned long long seed = 1;
  bool json = false;
  int verbosity = 0;
};

/// Reads UNIFINT_BUDGET into element_budget; throws std::invalid_argument on
/// a non-positive or unparsable value.
void apply_env_budget(RunConfig& cfg);

/// Report skeleton: {"schema": "unifint/1", "command": ..., "seed": ...}.
/// Field insertion order is preserved on output (ordered_json).
nlohmann::ordered_json make_report(const std::string& command,
                                   const RunConfig& cfg);

nlohmann::ordered_json json_blocks(const Congruence& c);
nlohmann::ordered_json json_equations(const EquationSet& es);
nlohmann::ordered_json json_system(const InequationSystem& S);

/// Serialization used everywhere a report is printed: 2-space indent plus a
/// trailing newline, so identical inputs give byte-identical output.
std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace unifint

#endif
