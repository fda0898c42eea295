#include "unifint/report.hpp"

#include <cstdlib>
#include <stdexcept>

namespace unifint {

void apply_env_budget(RunConfig& cfg) {
  const char* env = std::getenv("UNIFINT_BUDGET");
  if (!env) return;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw std::invalid_argument("UNIFINT_BUDGET must be a positive integer");
  cfg.element_budget = v;
}

nlohmann::ordered_json make_report(const std::string& command,
                                   const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = "unifint/1";
  j["command"] = command;
  j["seed"] = cfg.seed;
  return j;
}

nlohmann::ordered_json json_blocks(const Congruence& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& block : c.blocks()) arr.push_back(block);
  return arr;
}

nlohmann::ordered_json json_equations(const EquationSet& es) {
  nlohmann::ordered_json j;
  j["vars"] = es.vars;
  nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
  for (const auto& e : es.equations) eqs.push_back(to_string(e));
  j["equations"] = eqs;
  return j;
}

nlohmann::ordered_json json_system(const InequationSystem& S) {
  nlohmann::ordered_json j;
  j["variables"] = S.variables;
  nlohmann::ordered_json ineqs = nlohmann::ordered_json::array();
  for (const auto& i : S.inequations) ineqs.push_back(i.to_string());
  j["inequations"] = ineqs;
  return j;
}

std::string dump_report(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace unifint
