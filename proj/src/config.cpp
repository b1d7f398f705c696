#include "ured/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "ured/errors.hpp"

namespace ured {

void RunConfig::validate() const {
  if (threads < 1) throw ContractViolation("threads must be >= 1");
  if (segment_size < 2) throw ContractViolation("segment_size must be >= 2");
  if (!(tolerances.root_tol > 0) || !(tolerances.power_tol > 0)) {
    throw ContractViolation("tolerances must be positive");
  }
  if (tolerances.power_max_iter < 1 || tolerances.root_max_iter < 1) {
    throw ContractViolation("iteration limits must be positive");
  }
  if (guards.dense_max < 2 || guards.oracle_max < 2) throw ContractViolation("guards must be >= 2");
}

RunConfig load_run_config(const std::string& path, RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("segment_size")) cfg.segment_size = j.at("segment_size").get<std::uint64_t>();
    if (j.contains("root_tol")) cfg.tolerances.root_tol = j.at("root_tol").get<double>();
    if (j.contains("power_tol")) cfg.tolerances.power_tol = j.at("power_tol").get<double>();
    if (j.contains("power_max_iter")) cfg.tolerances.power_max_iter = j.at("power_max_iter").get<int>();
    if (j.contains("dense_max")) cfg.guards.dense_max = j.at("dense_max").get<std::uint64_t>();
    if (j.contains("oracle_max")) cfg.guards.oracle_max = j.at("oracle_max").get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation("bad config file " + path + ": " + e.what());
  }
  cfg.validate();
  return cfg;
}

void apply_environment(RunConfig& cfg) {
  if (const char* env = std::getenv("URED_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw ContractViolation("URED_THREADS must be a positive integer");
    }
    cfg.threads = static_cast<int>(v);
  }
}

}  // namespace ured
