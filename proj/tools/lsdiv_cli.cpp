// lsdiv command-line frontend. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 input/parse error, 2 numeric failure (non-convergence,
// NaN integrand, or a failed verification battery).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsdiv/lsdiv.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

struct DensityDeleter {
  void operator()(lsdiv_density* d) const { lsdiv_density_destroy(d); }
};
struct GeneratorDeleter {
  void operator()(lsdiv_generator* g) const { lsdiv_generator_destroy(g); }
};
struct ConfigDeleter {
  void operator()(lsdiv_config* c) const { lsdiv_config_destroy(c); }
};
struct ReportDeleter {
  void operator()(lsdiv_check_report* r) const { lsdiv_check_report_destroy(r); }
};
using DensityPtr = std::unique_ptr<lsdiv_density, DensityDeleter>;
using GeneratorPtr = std::unique_ptr<lsdiv_generator, GeneratorDeleter>;
using ConfigPtr = std::unique_ptr<lsdiv_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<lsdiv_check_report, ReportDeleter>;

// Carries a C API failure up to main.
struct ApiError {
  lsdiv_status status;
  std::string message;
};

void check(lsdiv_status status) {
  if (status != LSDIV_OK) throw ApiError{status, lsdiv_last_error()};
}

int exit_code_for(lsdiv_status status) {
  return status == LSDIV_E_NUMERIC || status == LSDIV_E_INTERNAL ? kExitNumeric : kExitInput;
}

// Nine significant digits; non-finite values become string tokens.
ordered_json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::stod(buf);
}

std::string text_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void print(const ordered_json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": ";
    if (value.is_number_float()) {
      std::cout << text_number(value.get<double>());
    } else if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else {
      std::cout << value.dump();
    }
    std::cout << '\n';
  }
}

DensityPtr parse_density(const std::string& spec) {
  lsdiv_density* d = nullptr;
  check(lsdiv_density_parse(spec.c_str(), &d));
  return DensityPtr(d);
}

GeneratorPtr make_generator(const std::string& name) {
  lsdiv_generator* g = nullptr;
  check(lsdiv_generator_create(name.c_str(), &g));
  return GeneratorPtr(g);
}

ordered_json result_json(const lsdiv_result& r) {
  ordered_json j;
  j["value"] = number(r.value);
  j["method"] = r.method == LSDIV_METHOD_CLOSED_FORM ? "closed_form" : "quadrature";
  j["error_estimate"] = number(r.error_estimate);
  j["converged"] = r.converged != 0;
  if (r.clamped) j["raw_value"] = number(r.raw_value);
  if (r.verified) {
    j["verification"] = {{"quadrature_value", number(r.verify_value)},
                         {"quadrature_error", number(r.verify_error)},
                         {"abs_difference", number(r.verify_difference)},
                         {"agrees", r.verify_agrees != 0}};
  }
  return j;
}

ordered_json reduced_json(const lsdiv_density* p, const lsdiv_density* q) {
  double right[2];
  double left[2];
  check(lsdiv_reduce(p, q, right, left));
  return {number(right[0]), number(right[1])};
}

struct Options {
  bool json = false;
  bool verify = false;
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_depth = 50;
  std::string gen = "kl";
  std::string side = "right";
  std::string query;
  std::string target;
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> specs;
};

ConfigPtr make_config(const Options& o) {
  lsdiv_config* c = nullptr;
  check(lsdiv_config_create(&c));
  ConfigPtr cfg(c);
  check(lsdiv_config_set_abs_tol(cfg.get(), o.abs_tol));
  check(lsdiv_config_set_rel_tol(cfg.get(), o.rel_tol));
  check(lsdiv_config_set_max_depth(cfg.get(), o.max_depth));
  return cfg;
}

int finish_result(const lsdiv_result& r, ordered_json j, const Options& o) {
  print(j, o.json);
  return r.converged ? kExitOk : kExitNumeric;
}

int run_entropy(const Options& o) {
  const ConfigPtr cfg = make_config(o);
  const DensityPtr p = parse_density(o.specs.at(0));
  lsdiv_result r;
  check(lsdiv_entropy(p.get(), cfg.get(), o.verify ? LSDIV_VERIFY : 0u, &r));
  return finish_result(r, result_json(r), o);
}

int run_pair(const Options& o, const std::string& command) {
  const ConfigPtr cfg = make_config(o);
  const DensityPtr p = parse_density(o.specs.at(0));
  const DensityPtr q = parse_density(o.specs.at(1));
  const unsigned flags = o.verify ? LSDIV_VERIFY : 0u;
  lsdiv_result r;
  GeneratorPtr gen;
  if (command == "cross-entropy") {
    check(lsdiv_cross_entropy(p.get(), q.get(), cfg.get(), flags, &r));
  } else if (command == "kl") {
    check(lsdiv_kl(p.get(), q.get(), cfg.get(), flags, &r));
  } else {
    gen = make_generator(o.gen);
    check(lsdiv_fdiv(gen.get(), p.get(), q.get(), cfg.get(), flags, &r));
  }
  ordered_json j = result_json(r);
  if (gen) j["generator"] = lsdiv_generator_name(gen.get());
  j["reduced"] = reduced_json(p.get(), q.get());
  return finish_result(r, std::move(j), o);
}

int run_reduce(const Options& o) {
  const DensityPtr p = parse_density(o.specs.at(0));
  const DensityPtr q = parse_density(o.specs.at(1));
  double right[2];
  double left[2];
  check(lsdiv_reduce(p.get(), q.get(), right, left));
  ordered_json j;
  j["reduced"] = {number(right[0]), number(right[1])};
  j["right"] = {{"l", number(right[0])}, {"s", number(right[1])}};
  j["left"] = {{"l", number(left[0])}, {"s", number(left[1])}};
  print(j, o.json);
  return kExitOk;
}

int run_project(const Options& o) {
  const ConfigPtr cfg = make_config(o);
  const DensityPtr query = parse_density(o.query);
  const GeneratorPtr gen = make_generator(o.gen);
  const lsdiv_side side = o.side == "left" ? LSDIV_SIDE_LEFT : LSDIV_SIDE_RIGHT;
  lsdiv_projection r;
  check(lsdiv_project(query.get(), o.target.c_str(), gen.get(), side, cfg.get(), &r));

  ordered_json j;
  j["value"] = number(r.min_value);
  j["method"] = "nelder_mead";
  j["error_estimate"] = number(0.0);
  j["converged"] = r.converged != 0;
  j["generator"] = lsdiv_generator_name(gen.get());
  j["side"] = o.side;
  j["optimum"] = {{"l", number(r.optimum_l)}, {"s", number(r.optimum_s)}};
  j["reduced"] = {number(r.reduced_l), number(r.reduced_s)};
  j["location_pinned"] = r.location_pinned != 0;
  j["starts_used"] = r.starts_used;
  j["evaluations"] = r.evaluations;
  print(j, o.json);
  return r.converged ? kExitOk : kExitNumeric;
}

int run_check(const Options& o) {
  const ConfigPtr cfg = make_config(o);
  lsdiv_check_report* raw = nullptr;
  check(lsdiv_check_run(o.suite.c_str(), o.trials, o.seed, cfg.get(), &raw));
  const ReportPtr report(raw);
  const bool passed = lsdiv_check_report_passed(report.get()) != 0;

  ordered_json items = ordered_json::array();
  std::size_t failing = 0;
  for (std::size_t i = 0; i < lsdiv_check_report_size(report.get()); ++i) {
    lsdiv_check_item item;
    check(lsdiv_check_report_item(report.get(), i, &item));
    if (!item.passed) ++failing;
    items.push_back({{"suite", item.suite},
                     {"name", item.name},
                     {"trials", item.trials},
                     {"failures", item.failures},
                     {"infinite", item.infinite},
                     {"max_defect", number(item.max_defect)},
                     {"tolerance", number(item.tolerance)},
                     {"passed", item.passed != 0}});
  }

  if (o.json) {
    ordered_json j;
    j["suite"] = o.suite;
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    j["passed"] = passed;
    j["failing_checks"] = failing;
    j["checks"] = std::move(items);
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& item : items) {
      std::printf("[%s] %-14s %-50s trials=%-4zu max_defect=%-12s tol=%s\n",
                  item["passed"].get<bool>() ? "PASS" : "FAIL",
                  item["suite"].get<std::string>().c_str(),
                  item["name"].get<std::string>().c_str(), item["trials"].get<std::size_t>(),
                  text_number(item["max_defect"].is_string()
                                  ? INFINITY
                                  : item["max_defect"].get<double>())
                      .c_str(),
                  text_number(item["tolerance"].get<double>()).c_str());
    }
    std::printf("%zu checks, %zu failing\n", items.size(), failing);
  }
  return passed ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropies and f-divergences between location-scale densities"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit a single JSON object");
  app.add_flag("--verify", o.verify, "Also integrate numerically when a closed form is used");
  app.add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--max-depth", o.max_depth, "Quadrature bisection depth")->check(CLI::PositiveNumber);

  const std::string spec_help = "Density <family>:<loc>,<scale>, e.g. cauchy:0,1";

  auto* entropy = app.add_subcommand("entropy", "Differential entropy h(p)");
  entropy->add_option("p", o.specs, spec_help)->required()->expected(1);

  auto* cross = app.add_subcommand("cross-entropy", "Cross-entropy h^x(p:q)");
  cross->add_option("densities", o.specs, spec_help)->required()->expected(2);

  auto* kl = app.add_subcommand("kl", "Kullback-Leibler divergence KL(p:q)");
  kl->add_option("densities", o.specs, spec_help)->required()->expected(2);

  auto* fdiv = app.add_subcommand("fdiv", "f-divergence I_f(p:q)");
  fdiv->add_option("densities", o.specs, spec_help)->required()->expected(2);
  fdiv->add_option("--gen", o.gen, "Generator: kl, reverse-kl, hellinger2, tv, chi2")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduced parameters of a density pair");
  reduce->add_option("densities", o.specs, spec_help)->required()->expected(2);

  auto* project = app.add_subcommand("project", "Project a density onto a location-scale family");
  project->add_option("--query", o.query, spec_help)->required();
  project->add_option("--target", o.target, "Family to search")->required();
  project->add_option("--gen", o.gen, "Generator (default kl)");
  project->add_option("--side", o.side, "right: min over the second argument; left: the first")
      ->check(CLI::IsMember({"left", "right"}));

  auto* check_cmd = app.add_subcommand("check", "Run the verification batteries");
  check_cmd->add_option("--suite", o.suite, "identities, symmetry, closed-forms, projection, all");
  check_cmd->add_option("--trials", o.trials, "Random trials per check");
  check_cmd->add_option("--seed", o.seed, "Seed for the parameter draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (entropy->parsed()) return run_entropy(o);
    if (cross->parsed()) return run_pair(o, "cross-entropy");
    if (kl->parsed()) return run_pair(o, "kl");
    if (fdiv->parsed()) return run_pair(o, "fdiv");
    if (reduce->parsed()) return run_reduce(o);
    if (project->parsed()) return run_project(o);
    if (check_cmd->parsed()) return run_check(o);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return exit_code_for(e.status);
  }
  return kExitInput;
}
