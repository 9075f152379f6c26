#pragma once

// Experiment configuration: one JSON document, with command-line flags layered on top.

#include <optional>
#include <string>
#include <vector>

#include "hyperorth/cfuncs.hpp"
#include "hyperorth/orthosys.hpp"
#include "json.hpp"

namespace hyperorth {

enum class Experiment { Ortho, Asym, Exact, DecayRay, OrthoScan, Gram, Stability };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& text);

struct ExperimentConfig {
  Experiment kind = Experiment::Ortho;
  CSpec spec = CSpec::trivial();
  int dim = 1;
  std::optional<int> order;  ///< K; defaults to 30 for N <= 2 and 12 above
  Ordering ordering = Ordering::Dominance;
  std::vector<Weight> lambdas;
  std::optional<int> lambda_max;  ///< box bound on lambda_1 when no explicit list is given
  int ell_max = 6;
  std::optional<int> m;
  std::optional<int> m_ref;
  int m_ref_offset = 10;  ///< decay-ray: m_ref = m + offset for Koornwinder
  int order_step = 10;
  std::string output;
  std::string summary;
  int precision = 15;
  int threads = 0;  ///< 0 keeps the OpenMP default
  double tolerance = 1e-8;

  int resolved_order() const { return order.value_or(dim <= 2 ? 30 : 12); }
  /// Explicit list if given, else the dominant box up to lambda_max.
  std::vector<Weight> resolved_lambdas() const;

  /// Checks ranges and weight dimensions; throws DomainError / ParseError.
  void validate() const;

  /// Fields not present keep their current values. Weights are parsed with `dim`
  /// as set after reading "N".
  void merge_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

ExperimentConfig load_config_file(const std::string& path);

}  // namespace hyperorth
