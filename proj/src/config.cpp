#include "hyperorth/config.hpp"

#include <fstream>

#include "hyperorth/errors.hpp"

namespace hyperorth {

namespace {

const std::pair<Experiment, const char*> kNames[] = {
    {Experiment::Ortho, "ortho"},         {Experiment::Asym, "asym"},
    {Experiment::Exact, "exact"},         {Experiment::DecayRay, "decay-ray"},
    {Experiment::OrthoScan, "ortho-scan"}, {Experiment::Gram, "gram"},
    {Experiment::Stability, "stability"},
};

template <typename T>
T get_field(const nlohmann::json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("config field '") + name + "' has the wrong type");
  }
}

Weight weight_from_json(const nlohmann::json& v, int dim) {
  if (v.is_string()) return parse_weight(v.get<std::string>(), dim);
  if (!v.is_array()) throw ParseError("config field 'lambda' must hold integer arrays");
  std::string text;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError("config field 'lambda' must hold integer arrays");
    if (!text.empty()) text += ",";
    text += std::to_string(x.get<int>());
  }
  return parse_weight(text, dim);
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [k, name] : kNames)
    if (k == e) return name;
  return "?";
}

Experiment parse_experiment(const std::string& text) {
  for (const auto& [k, name] : kNames)
    if (text == name) return k;
  throw ParseError("unknown experiment '" + text + "'");
}

std::vector<Weight> ExperimentConfig::resolved_lambdas() const {
  if (!lambdas.empty()) return lambdas;
  return dominant_box(dim, lambda_max.value_or(kind == Experiment::OrthoScan || kind == Experiment::Exact ? 4 : 2));
}

void ExperimentConfig::validate() const {
  if (dim < 1 || dim > 8) throw DomainError("N must lie in [1, 8]");
  if (order && *order < 1) throw DomainError("K must be at least 1");
  if (lambda_max && *lambda_max < 0) throw DomainError("lambda_max must be nonnegative");
  if (ell_max < 1) throw DomainError("ell_max must be at least 1");
  if (m && *m < 0) throw DomainError("m must be nonnegative");
  if (m_ref && *m_ref < 0) throw DomainError("m_ref must be nonnegative");
  if (m_ref_offset < 0) throw DomainError("m_ref_offset must be nonnegative");
  if (order_step < 0) throw DomainError("k_step must be nonnegative");
  if (precision < 1 || precision > 200) throw DomainError("precision must lie in [1, 200]");
  if (threads < 0) throw DomainError("threads must be nonnegative");
  if (!(tolerance >= 0)) throw DomainError("tolerance must be nonnegative");
  for (const Weight& w : lambdas)
    if (w.dim() != dim) throw DomainError("weight " + hyperorth::to_string(w.span()) + " does not have N parts");
}

void ExperimentConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  if (j.contains("experiment")) kind = parse_experiment(get_field<std::string>(j, "experiment"));
  if (j.contains("spec")) spec = CSpec::from_json(j.at("spec"));
  if (j.contains("N")) dim = get_field<int>(j, "N");
  if (j.contains("K")) order = get_field<int>(j, "K");
  if (j.contains("ordering")) ordering = parse_ordering(get_field<std::string>(j, "ordering"));
  if (j.contains("lambda")) {
    const auto& v = j.at("lambda");
    lambdas.clear();
    const bool single = v.is_string() || (v.is_array() && !v.empty() && v.front().is_number_integer());
    if (single) {
      lambdas.push_back(weight_from_json(v, dim));
    } else if (v.is_array()) {
      for (const auto& w : v) lambdas.push_back(weight_from_json(w, dim));
    } else {
      throw ParseError("config field 'lambda' must be a weight or a list of weights");
    }
  }
  if (j.contains("lambda_max")) lambda_max = get_field<int>(j, "lambda_max");
  if (j.contains("ell_max")) ell_max = get_field<int>(j, "ell_max");
  if (j.contains("m")) m = get_field<int>(j, "m");
  if (j.contains("m_ref")) m_ref = get_field<int>(j, "m_ref");
  if (j.contains("m_ref_offset")) m_ref_offset = get_field<int>(j, "m_ref_offset");
  if (j.contains("k_step")) order_step = get_field<int>(j, "k_step");
  if (j.contains("output")) output = get_field<std::string>(j, "output");
  if (j.contains("summary")) summary = get_field<std::string>(j, "summary");
  if (j.contains("precision")) precision = get_field<int>(j, "precision");
  if (j.contains("threads")) threads = get_field<int>(j, "threads");
  if (j.contains("tolerance")) tolerance = get_field<double>(j, "tolerance");
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["experiment"] = to_string(kind);
  j["spec"] = spec.to_json();
  j["N"] = dim;
  j["K"] = resolved_order();
  j["ordering"] = to_string(ordering);
  nlohmann::json ls = nlohmann::json::array();
  for (const Weight& w : resolved_lambdas()) ls.push_back(w.parts());
  j["lambda"] = ls;
  j["ell_max"] = ell_max;
  if (m) j["m"] = *m;
  if (m_ref) j["m_ref"] = *m_ref;
  j["m_ref_offset"] = m_ref_offset;
  j["k_step"] = order_step;
  j["precision"] = precision;
  j["tolerance"] = tolerance;
  // output paths and the thread count do not affect results and are left out so
  // reruns elsewhere produce identical files.
  return j;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  ExperimentConfig c;
  c.merge_json(j);
  return c;
}

}  // namespace hyperorth
