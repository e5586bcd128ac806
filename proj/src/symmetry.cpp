#include "lsdiv/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> mirrored(std::initializer_list<double> points, bool real_line) {
  std::vector<double> out;
  for (double x : points) {
    out.push_back(x);
    if (real_line) out.push_back(-x);
  }
  return out;
}

}  // namespace

IntegralResult location_symmetry_defect(const StandardDensity& p, double l,
                                        const QuadratureConfig& cfg) {
  if (!p.on_real_line()) {
    throw InvalidArgument("location symmetry condition requires a density supported on R, got " +
                          std::string(p.name()));
  }
  if (!std::isfinite(l)) throw InvalidArgument("location shift must be finite");
  if (l == 0.0) return {0.0, 0.0, true, 0};

  auto integrand = [&](double x) {
    const double px = p.pdf(x);
    if (px == 0.0) return 0.0;
    return px * (p.log_pdf(x + l) - p.log_pdf(x - l));
  };
  const std::vector<double> cuts = mirrored({0.0, 1.0, 3.0, 10.0, l}, true);
  return integrate(integrand, {-kInf, kInf}, cfg, cuts);
}

IntegralResult scale_symmetry_defect(const StandardDensity& p, double s,
                                     const QuadratureConfig& cfg) {
  if (!std::isfinite(s) || !(s > 0.0)) throw InvalidArgument("scale must be finite and > 0");
  if (s == 1.0) return {0.0, 0.0, true, 0};

  auto integrand = [&](double x) {
    const double px = p.pdf(x);
    if (px == 0.0) return 0.0;
    return px * (p.log_pdf(x / s) - p.log_pdf(s * x));
  };
  const std::vector<double> cuts = mirrored({0.0, 1.0, 3.0, 10.0, s, 1.0 / s}, p.on_real_line());
  IntegralResult r = integrate(integrand, {p.support_lower(), kInf}, cfg, cuts);
  r.value -= 2.0 * std::log(s);
  return r;
}

SymmetryDefect fdiv_symmetry_defect(const FDivGenerator& gen, const LocationScaleDensity& p,
                                    const LocationScaleDensity& q, const QuadratureConfig& cfg) {
  SymmetryDefect out;
  const IntegralResult forward = fdiv_num(gen, p, q, cfg);
  const IntegralResult backward = fdiv_num(gen, q, p, cfg);
  out.forward = forward.value;
  out.backward = backward.value;
  if (std::isinf(forward.value) || std::isinf(backward.value)) {
    out.comparable = false;
    out.value = std::numeric_limits<double>::quiet_NaN();
    out.converged = forward.converged && backward.converged;
    return out;
  }

  auto integrand = [&](double x) {
    const double lp = p.log_pdf(x);
    const double lq = q.log_pdf(x);
    return gen.weighted(lp, lq) - gen.weighted(lq, lp);
  };
  std::vector<double> cuts = density_breakpoints(p);
  const std::vector<double> more = density_breakpoints(q);
  cuts.insert(cuts.end(), more.begin(), more.end());
  const double lower = std::min(p.support_lower(), q.support_lower());
  const IntegralResult diff = integrate(integrand, {lower, kInf}, cfg, cuts);
  out.value = diff.value;
  out.err_estimate = diff.err_estimate;
  out.converged = diff.converged && forward.converged && backward.converged;
  return out;
}

}  // namespace lsdiv
