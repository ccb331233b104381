#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl21/jet.hpp"

namespace sl21 {

struct RunConfig {
  std::string suite = "all";
  int samples = 100;
  std::uint64_t seed = 42;
  std::map<std::string, double> tol_overrides;  // keyed by check id
  int jet_order_cap = 4;
  std::string out_path;

  double tol(const std::string& key, double dflt) const {
    auto it = tol_overrides.find(key);
    return it == tol_overrides.end() ? dflt : it->second;
  }
};

struct CheckRecord {
  std::string id;
  std::string anchor;  // the identity being checked, greppable
  int samples = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct Report {
  std::string version;
  RunConfig config;
  std::vector<CheckRecord> checks;
  bool pass = false;
};

// Single JSON document, UTF-8, stable key order, shortest round-trip numbers.
std::string report_to_json(const Report& r);

// Deterministic given (suite, samples, seed): every suite draws from its own
// named stream.  Throws std::invalid_argument on configuration errors.
Report run_suite(const RunConfig& cfg);

std::vector<std::string> suite_names();

// MJ predicate runner for a candidate eigenfunction on H x C.
struct MJOptions {
  double bound = 10.0;  // reported growth bound (diagnostic only)
  int samples = 60;
  std::uint64_t seed = 42;
};
Report check_mj_conditions(const SmoothMap& candidate, std::complex<double> lambda,
                           const MJOptions& opt);

}  // namespace sl21
