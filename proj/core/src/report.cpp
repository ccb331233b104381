#include "sl21/report.hpp"

#include <json.hpp>

#include "sl21/version.hpp"

namespace sl21 {

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  nlohmann::ordered_json cfg;
  cfg["suite"] = r.config.suite;
  cfg["samples"] = r.config.samples;
  cfg["seed"] = r.config.seed;
  nlohmann::ordered_json tols = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config.tol_overrides) tols[k] = v;
  cfg["tol_overrides"] = tols;
  cfg["jet_order_cap"] = r.config.jet_order_cap;
  cfg["out"] = r.config.out_path;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["samples"] = c.samples;
    e["max_residual"] = c.max_residual;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

}  // namespace sl21
