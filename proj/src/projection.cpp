#include "lsdiv/projection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <vector>

#include "lsdiv/divergence.hpp"
#include "lsdiv/nelder_mead.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStartLocations[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
constexpr double kStartLogScales[] = {-1.0, 0.0, 1.0};

struct StartOutcome {
  double l;
  double s;
  double value;  // true objective, +inf when infeasible
  std::size_t evaluations;
  bool converged;
};

// Minimizes I_f(p : q_{l,s}) over (l, log s), or over log s alone when pinned.
ProjectionResult minimize_reduced(const StandardDensity& p, const StandardDensity& q,
                                  const FDivGenerator& gen, const QuadratureConfig& cfg) {
  const bool pinned = !p.on_real_line() || !q.on_real_line();
  const LocationScaleDensity p_std(p, identity());

  auto objective = [&, pinned](std::span<const double> x) {
    const double l = pinned ? 0.0 : x[0];
    const double log_s = pinned ? x[0] : x[1];
    const double s = std::exp(log_s);
    if (!std::isfinite(l) || !std::isfinite(s) || !(s > 0.0)) return kInfeasiblePenalty;
    const LocationScaleDensity q_ls(q, GroupElement(l, s));
    const double v = fdiv(gen, p_std, q_ls, cfg).value;
    return std::isfinite(v) ? v : kInfeasiblePenalty;
  };

  std::vector<std::vector<double>> starts;
  for (double log_s : kStartLogScales) {
    if (pinned) {
      starts.push_back({log_s});
    } else {
      for (double l : kStartLocations) starts.push_back({l, log_s});
    }
  }

  std::vector<std::future<StartOutcome>> jobs;
  jobs.reserve(starts.size());
  for (const auto& start : starts) {
    jobs.push_back(std::async(std::launch::async, [&, start] {
      const NelderMeadResult nm = nelder_mead(objective, start);
      StartOutcome o;
      o.l = pinned ? 0.0 : nm.x[0];
      o.s = std::exp(pinned ? nm.x[0] : nm.x[1]);
      o.value = nm.value >= kInfeasiblePenalty ? kInf : nm.value;
      o.evaluations = nm.evaluations;
      o.converged = nm.converged && std::isfinite(o.value);
      return o;
    }));
  }
  std::vector<StartOutcome> outcomes;
  outcomes.reserve(jobs.size());
  for (auto& job : jobs) outcomes.push_back(job.get());

  // Best converged start; ties go to the smaller l*, then the smaller s*.
  auto better = [](const StartOutcome& a, const StartOutcome& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.l != b.l) return a.l < b.l;
    return a.s < b.s;
  };
  const StartOutcome* best = nullptr;
  bool any_converged = false;
  for (const auto& o : outcomes) {
    if (o.converged && !any_converged) {
      any_converged = true;
      best = &o;
      continue;
    }
    if (any_converged && !o.converged) continue;
    if (best == nullptr || better(o, *best)) best = &o;
  }

  ProjectionResult r;
  r.location_pinned = pinned;
  r.starts_used = outcomes.size();
  for (const auto& o : outcomes) r.evaluations += o.evaluations;
  r.converged = any_converged;
  r.min_value = best->value;
  if (std::isfinite(best->s) && best->s > 0.0) r.reduced_optimum = GroupElement(best->l, best->s);
  if (r.min_value < 0.0 && r.min_value >= -kClampBand) r.min_value = 0.0;
  return r;
}

}  // namespace

ProjectionResult project_right(const LocationScaleDensity& query, const StandardDensity& target,
                               const FDivGenerator& gen, const QuadratureConfig& cfg) {
  ProjectionResult r = minimize_reduced(query.standard(), target, gen, cfg);
  const double l_star = r.reduced_optimum.location();
  const double s_star = r.reduced_optimum.scale();
  r.target_optimum = GroupElement(query.scale() * l_star + query.location(), s_star * query.scale());
  return r;
}

ProjectionResult project_left(const LocationScaleDensity& query, const StandardDensity& source,
                              const FDivGenerator& gen, const QuadratureConfig& cfg) {
  ProjectionResult r = minimize_reduced(source, query.standard(), gen, cfg);
  const double s1 = query.scale() / r.reduced_optimum.scale();
  const double l1 = query.location() - r.reduced_optimum.location() * s1;
  r.target_optimum = GroupElement(l1, s1);
  return r;
}

FamilyMinResult family_min(const StandardDensity& p, const StandardDensity& q,
                           const FDivGenerator& gen, const QuadratureConfig& cfg) {
  FamilyMinResult out;
  out.right = project_right(LocationScaleDensity(p, identity()), q, gen, cfg);
  out.left = project_left(LocationScaleDensity(q, identity()), p, gen, cfg);
  out.right_infinite = std::isinf(out.right.min_value);
  out.left_infinite = std::isinf(out.left.min_value);
  out.value = std::min(out.right.min_value, out.left.min_value);
  return out;
}

}  // namespace lsdiv
