#include "hyperorth/cli.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperorth/config.hpp"
#include "hyperorth/errors.hpp"

#ifndef HYPERORTH_VERSION
#define HYPERORTH_VERSION "0.0.0"
#endif

namespace hyperorth::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double x, int precision) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", std::max(precision - 1, 0), x);
  return buf;
}

json rational_json(const Rational& r, int precision) {
  return {{"value", to_string(r)}, {"decimal", to_decimal(r, precision)}};
}

json coords_json(const MonomialCoords& coords, int precision) {
  json a = json::array();
  for (const auto& [w, c] : coords) {
    json e = rational_json(c, precision);
    e["mu"] = w.parts();
    a.push_back(std::move(e));
  }
  return a;
}

std::string weight_csv(const Weight& w) {
  std::string s;
  for (std::size_t j = 0; j < w.parts().size(); ++j) {
    if (j) s += " ";
    s += std::to_string(w[j]);
  }
  return s;
}

std::string csv_header(const ExperimentConfig& c) {
  return std::string("# hyperorth ") + HYPERORTH_VERSION + "\n# config: " + c.to_json().dump() + "\n";
}

json document(const ExperimentConfig& c) {
  return {{"hyperorth", HYPERORTH_VERSION}, {"config", c.to_json()}};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ParseError("cannot write output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

int run_ortho(const ExperimentConfig& c, std::ostream& out) {
  const DeltaApprox delta = build_delta(c.spec, c.dim, c.resolved_order());
  json doc = document(c);
  doc["results"] = json::array();
  for (const Weight& w : c.resolved_lambdas()) {
    const MonicOrthoPoly p = monic_orthogonal(w, c.ordering, delta);
    doc["results"].push_back({{"lambda", w.parts()},
                              {"coords", coords_json(p.coords, c.precision)},
                              {"norm_sq", rational_json(p.norm_sq, c.precision)}});
  }
  Sink(c.output, out).stream() << doc.dump(2) << "\n";
  return kExitOk;
}

int run_asym(const ExperimentConfig& c, std::ostream& out) {
  json doc = document(c);
  doc["results"] = json::array();
  for (const Weight& w : c.resolved_lambdas()) {
    const int m = c.m.value_or(min_gap(w));
    const AsymptoticPoly a = truncated_asymptotic(w, m, c.spec);
    doc["results"].push_back({{"lambda", w.parts()}, {"m", m}, {"coords", coords_json(a.coords, c.precision)}});
  }
  Sink(c.output, out).stream() << doc.dump(2) << "\n";
  return kExitOk;
}

int run_exact(const ExperimentConfig& c, std::ostream& out) {
  const DeltaApprox delta = build_delta(c.spec, c.dim, c.resolved_order());
  const int degree = c.spec.degree();
  std::ostringstream csv;
  csv << csv_header(c) << "lambda,min_gap,M,max_coord_deviation,max_coord_deviation_decimal,norm_deviation,exact,status\n";
  bool ok = true;
  for (const Weight& w : c.resolved_lambdas()) {
    const int gap = min_gap(w);
    csv << weight_csv(w) << "," << gap << "," << degree << ",";
    if (gap < degree - 1) {
      csv << ",,,,skipped\n";
      continue;
    }
    const ExactReport r = verify_exact(w, delta, c.ordering);
    const bool pass = r.passed(c.tolerance);
    ok = ok && pass;
    csv << to_string(r.max_coord_deviation) << "," << to_decimal(r.max_coord_deviation, c.precision) << ","
        << (r.norm_deviation ? fmt_double(*r.norm_deviation, c.precision) : "") << "," << (r.exact ? "yes" : "no")
        << "," << (pass ? "pass" : "fail") << "\n";
  }
  Sink(c.output, out).stream() << csv.str();
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_decay_ray(const ExperimentConfig& c, std::ostream& out) {
  const auto lambdas = c.resolved_lambdas();
  if (lambdas.size() != 1) throw DomainError("decay-ray needs exactly one base weight");
  const Weight& base = lambdas.front();
  if (min_gap(base) <= 0) throw DomainError("decay-ray needs a strongly dominant base weight (min_gap > 0)");
  const DeltaApprox delta = build_delta(c.spec, c.dim, c.resolved_order());

  std::ostringstream csv;
  csv << csv_header(c) << "ell,lambda,min_gap,m,m_ref,K,err_norm,n_lambda,asym_norm,tail_hint\n";
  std::vector<std::pair<double, double>> ray, theorem, lead, norm;
  int exact_zero = 0;
  for (int ell = 1; ell <= c.ell_max; ++ell) {
    const Weight w = base.scaled(ell);
    const int m = c.m.value_or(min_gap(w));
    const int m_ref = c.m_ref ? *c.m_ref : (c.spec.is_polynomial() ? default_m_ref(c.spec, m) : m + c.m_ref_offset);
    const ErrorReport r = asymptotic_error(w, delta, m, m_ref);
    csv << ell << "," << weight_csv(w) << "," << r.min_gap << "," << m << "," << m_ref << "," << r.order << ","
        << fmt_double(r.err_norm, c.precision) << "," << fmt_double(r.n_lambda, c.precision) << ","
        << fmt_double(r.asym_norm, c.precision) << "," << fmt_double(r.tail_hint, c.precision) << "\n";
    if (r.err_norm > 0) {
      ray.emplace_back(ell, r.err_norm / std::pow(ell, c.dim));
      theorem.emplace_back(r.min_gap, r.err_norm);
    } else {
      ++exact_zero;
    }
    if (r.n_lambda != 1) lead.emplace_back(ell, std::abs(r.n_lambda - 1));
    if (r.asym_norm != 1) norm.emplace_back(ell, std::abs(r.asym_norm - 1));
  }

  json summary = document(c);
  summary["exact_zero_errors"] = exact_zero;
  auto fit = [&](const char* name, const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 3) {
      summary[name] = nullptr;
      return;
    }
    const DecayFit f = decay_fit(pts);
    summary[name] = {{"slope", fmt_double(f.slope, c.precision)},
                     {"intercept", fmt_double(f.intercept, c.precision)},
                     {"residual", fmt_double(f.residual, c.precision)}};
  };
  fit("ray_fit", ray);
  fit("theorem_a_fit", theorem);
  fit("leading_coefficient_fit", lead);
  fit("norm_fit", norm);

  bool ok = true;
  const DecayBudget budget = decay_budget(c.spec);
  if (!budget.exact_beyond_degree) {
    const double threshold = -0.8 * budget.epsilon * min_gap(base);
    summary["epsilon"] = fmt_double(budget.epsilon, c.precision);
    summary["ray_threshold"] = fmt_double(threshold, c.precision);
    if (ray.size() >= 3) {
      ok = decay_fit(ray).slope <= threshold;
      summary["ray_pass"] = ok;
    }
  }
  if (c.summary.empty()) {
    Sink(c.output, out).stream() << csv.str();
    out << summary.dump(2) << "\n";
  } else {
    Sink(c.output, out).stream() << csv.str();
    Sink(c.summary, out).stream() << summary.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_ortho_scan(const ExperimentConfig& c, std::ostream& out) {
  const DeltaApprox delta = build_delta(c.spec, c.dim, c.resolved_order());
  const OrthoScan s = orthogonality_scan(c.resolved_lambdas(), delta, c.ordering);
  std::ostringstream csv;
  csv << csv_header(c) << "lambda,mu,comparable,value\n";
  const std::size_t n = s.box.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool comparable = compare_dominance(s.box[i], s.box[j]) != Order::Incomparable;
      csv << weight_csv(s.box[i]) << "," << weight_csv(s.box[j]) << "," << (comparable ? "yes" : "no") << ","
          << fmt_double(s.values[i * n + j], c.precision) << "\n";
    }
  }
  csv << "# max_deviation," << fmt_double(s.max_deviation, c.precision) << "\n";
  Sink(c.output, out).stream() << csv.str();
  return s.max_deviation <= c.tolerance ? kExitOk : kExitVerificationFailed;
}

int run_gram(const ExperimentConfig& c, std::ostream& out) {
  const auto lambdas = c.resolved_lambdas();
  if (lambdas.size() != 1) throw DomainError("gram needs exactly one weight");
  const DeltaApprox delta = build_delta(c.spec, c.dim, c.resolved_order());
  const GramMatrix g = gram_matrix(lambdas.front(), delta);
  std::ostringstream csv;
  csv << csv_header(c) << "mu";
  for (const Weight& w : g.basis) csv << "," << weight_csv(w);
  csv << "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    csv << weight_csv(g.basis[i]);
    for (std::size_t j = 0; j < g.size(); ++j) csv << "," << to_string(g.at(i, j));
    csv << "\n";
  }
  Sink(c.output, out).stream() << csv.str();
  return kExitOk;
}

int run_stability(const ExperimentConfig& c, std::ostream& out) {
  json doc = document(c);
  doc["results"] = json::array();
  for (const Weight& w : c.resolved_lambdas()) {
    const StabilityReport r = stability_probe(w, c.spec, c.resolved_order(), c.order_step);
    doc["results"].push_back({{"lambda", w.parts()},
                              {"K", r.order},
                              {"k_step", r.step},
                              {"diff_first", fmt_double(r.diff_first, c.precision)},
                              {"diff_second", fmt_double(r.diff_second, c.precision)},
                              {"ratio", fmt_double(r.ratio, c.precision)},
                              {"expected_ratio", fmt_double(r.expected_ratio, c.precision)}});
  }
  Sink(c.output, out).stream() << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal polynomials with hyperoctahedral symmetry: exact experiments", "hyperorth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HYPERORTH_VERSION);

  std::string config_path, spec_text, ordering, output, summary;
  std::vector<std::string> lambda_text;
  int dim = 0, order = 0, lambda_max = 0, ell_max = 0, m = 0, m_ref = 0, m_ref_offset = 0, k_step = 0, precision = 0,
      threads = 0;
  double tolerance = 0;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"ortho", "monic orthogonal polynomials and their norms (JSON)"},
      {"asym", "truncated asymptotic functions P^(m) (JSON)"},
      {"exact", "exactness check over a weight box (CSV)"},
      {"decay-ray", "error norms along a ray l*lambda with fitted slopes (CSV + JSON)"},
      {"ortho-scan", "pairwise inner products of unit-norm polynomials (CSV)"},
      {"gram", "Gram matrix over the weights below lambda (CSV)"},
      {"stability", "Gram matrix change under K -> K+s -> K+2s (JSON)"},
  };
  std::vector<CLI::App*> commands;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("--config", config_path, "JSON config file");
    sc->add_option("--spec", spec_text, "c-function spec as inline JSON");
    sc->add_option("--N", dim, "number of variables");
    sc->add_option("--K", order, "truncation order of the weight");
    sc->add_option("--lambda", lambda_text, "weight, e.g. 2,1 (repeatable)");
    sc->add_option("--lambda-max", lambda_max, "bound on lambda_1 for weight boxes");
    sc->add_option("--ell-max", ell_max, "largest ray multiple");
    sc->add_option("--m", m, "truncation level of P^(m)");
    sc->add_option("--m-ref", m_ref, "reference truncation level");
    sc->add_option("--m-ref-offset", m_ref_offset, "decay-ray: m_ref = m + offset");
    sc->add_option("--k-step", k_step, "stability: step in K");
    sc->add_option("--ordering", ordering, "dominance or lexicographic");
    sc->add_option("--output", output, "output file (default stdout)");
    sc->add_option("--summary", summary, "decay-ray summary file");
    sc->add_option("--precision", precision, "significant digits in decimal output");
    sc->add_option("--threads", threads, "OpenMP threads (0 = default)");
    sc->add_option("--tolerance", tolerance, "verification tolerance");
    commands.push_back(sc);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << HYPERORTH_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hyperorth: " << e.what() << "\n";
    return kExitConfigError;
  }

  CLI::App* active = nullptr;
  for (CLI::App* sc : commands)
    if (sc->parsed()) active = sc;
  auto given = [&](const char* name) { return active->get_option(name)->count() > 0; };

  ExperimentConfig config;
  try {
    if (given("--config")) config = load_config_file(config_path);
    config.kind = parse_experiment(active->get_name());
    json overlay = json::object();
    if (given("--spec")) {
      try {
        overlay["spec"] = json::parse(spec_text);
      } catch (const json::parse_error&) {
        throw ParseError("--spec is not valid JSON");
      }
    }
    if (given("--N")) overlay["N"] = dim;
    if (given("--K")) overlay["K"] = order;
    if (given("--lambda")) overlay["lambda"] = lambda_text.size() == 1 ? json(lambda_text.front()) : json(lambda_text);
    if (given("--lambda-max")) overlay["lambda_max"] = lambda_max;
    if (given("--ell-max")) overlay["ell_max"] = ell_max;
    if (given("--m")) overlay["m"] = m;
    if (given("--m-ref")) overlay["m_ref"] = m_ref;
    if (given("--m-ref-offset")) overlay["m_ref_offset"] = m_ref_offset;
    if (given("--k-step")) overlay["k_step"] = k_step;
    if (given("--ordering")) overlay["ordering"] = ordering;
    if (given("--output")) overlay["output"] = output;
    if (given("--summary")) overlay["summary"] = summary;
    if (given("--precision")) overlay["precision"] = precision;
    if (given("--threads")) overlay["threads"] = threads;
    if (given("--tolerance")) overlay["tolerance"] = tolerance;
    // Weights given in the config were parsed against its N; reparse if N changes.
    if (overlay.contains("N") && !overlay.contains("lambda") && !config.lambdas.empty()) {
      json ls = json::array();
      for (const Weight& w : config.lambdas) ls.push_back(w.parts());
      overlay["lambda"] = ls;
    }
    config.merge_json(overlay);
    config.validate();
  } catch (const std::invalid_argument& e) {
    err << "hyperorth: configuration error: " << e.what() << "\n";
    return kExitConfigError;
  }

  if (config.threads > 0) omp_set_num_threads(config.threads);
  for (const std::string& w : zero_free_warnings(config.spec)) err << "hyperorth: warning: " << w << "\n";

  try {
    switch (config.kind) {
      case Experiment::Ortho: return run_ortho(config, out);
      case Experiment::Asym: return run_asym(config, out);
      case Experiment::Exact: return run_exact(config, out);
      case Experiment::DecayRay: return run_decay_ray(config, out);
      case Experiment::OrthoScan: return run_ortho_scan(config, out);
      case Experiment::Gram: return run_gram(config, out);
      case Experiment::Stability: return run_stability(config, out);
    }
  } catch (const DegeneracyError& e) {
    err << "hyperorth: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "hyperorth: configuration error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

}  // namespace hyperorth::cli
