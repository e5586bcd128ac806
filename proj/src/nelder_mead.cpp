#include "lsdiv/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw InvalidArgument("Nelder-Mead needs at least one dimension");

  NelderMeadResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({start, eval(start)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = start;
    x[i] += opts.initial_step;
    simplex.push_back({x, eval(x)});
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        d = std::max(d, std::fabs(simplex[j].x[i] - simplex[0].x[i]));
      }
    }
    return d;
  };
  auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = from[i] + t * (to[i] - from[i]);
    return x;
  };

  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const double diam = diameter();
    const double spread = std::fabs(simplex[n].f - simplex[0].f);
    if (diam < opts.diameter_tol ||
        (spread < opts.spread_tol && diam < opts.spread_diameter_guard)) {
      out.converged = true;
      break;
    }
    if (out.evaluations >= opts.max_evaluations) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[j].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    Vertex& worst = simplex[n];
    const std::vector<double> xr = along(centroid, worst.x, -1.0);
    const double fr = eval(xr);
    if (fr < simplex[0].f) {
      const std::vector<double> xe = along(centroid, worst.x, -2.0);
      const double fe = eval(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {xr, fr};
      continue;
    }
    // Outside contraction if the reflected point beats the worst, inside otherwise.
    const bool outside = fr < worst.f;
    const std::vector<double> xc =
        outside ? along(centroid, xr, 0.5) : along(centroid, worst.x, 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t j = 1; j <= n; ++j) {
      simplex[j].x = along(simplex[0].x, simplex[j].x, 0.5);
      simplex[j].f = eval(simplex[j].x);
    }
  }

  out.x = simplex[0].x;
  out.value = simplex[0].f;
  return out;
}

}  // namespace lsdiv
