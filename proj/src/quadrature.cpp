#include "lsdiv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

enum class Map { finite, upper_tail, lower_tail, tangent };

// One piece of the integration range, expressed in its own parameter t.
struct Piece {
  Map map;
  double anchor;  // finite: unused; tails: finite endpoint; tangent: centre
  double width;   // tail / tangent scale
  double t_lo;
  double t_hi;

  bool infinite() const noexcept { return map != Map::finite; }

  // Returns f(x(t)) * dx/dt, or 0 when the map has left the representable range.
  double eval(const Integrand& f, double t) const {
    double x = t;
    double jac = 1.0;
    switch (map) {
      case Map::finite: break;
      case Map::upper_tail:
      case Map::lower_tail: {
        const double one_minus = 1.0 - t;
        if (one_minus <= 0.0) return 0.0;
        const double offset = width * t / one_minus;
        x = map == Map::upper_tail ? anchor + offset : anchor - offset;
        jac = width / (one_minus * one_minus);
        break;
      }
      case Map::tangent: {
        const double c = std::cos(t);
        if (c <= 0.0) return 0.0;
        x = anchor + width * std::tan(t);
        jac = width / (c * c);
        break;
      }
    }
    if (!std::isfinite(x) || !std::isfinite(jac)) return 0.0;
    const double fx = f(x);
    if (std::isnan(fx)) {
      std::ostringstream msg;
      msg << "integrand returned NaN at x = " << x;
      throw NumericFailure(msg.str());
    }
    if (fx == 0.0) return 0.0;
    return fx * jac;
  }

  // Truncates an infinite piece at distance `offset` from its anchor.
  Piece truncated(double offset) const {
    Piece out = *this;
    switch (map) {
      case Map::finite: break;
      case Map::upper_tail:
      case Map::lower_tail: out.t_hi = offset / (width + offset); break;
      case Map::tangent:
        out.t_hi = std::atan(offset / width);
        out.t_lo = -out.t_hi;
        break;
    }
    return out;
  }
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
  std::size_t piece;
  bool infinite;  // some node returned +-inf

  bool operator<(const Segment& other) const noexcept { return error < other.error; }
};

Segment gauss_kronrod15(const Integrand& f, const Piece& piece, std::size_t piece_index, double a,
                        double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  const double fc = piece.eval(f, centre);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::fabs(res_k);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double f1 = piece.eval(f, centre - dx);
    const double f2 = piece.eval(f, centre + dx);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    res_g += kWg[j] * (f1 + f2);
    res_k += kWgk[jtw] * (f1 + f2);
    res_abs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const double f1 = piece.eval(f, centre - dx);
    const double f2 = piece.eval(f, centre + dx);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    res_k += kWgk[jtwm1] * (f1 + f2);
    res_abs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }

  Segment seg{a, b, res_k * half, 0.0, depth, piece_index, false};
  if (!std::isfinite(res_k)) {
    if (std::isnan(res_k)) throw NumericFailure("integrand has infinities of both signs");
    seg.infinite = true;
    seg.error = kInf;
    return seg;
  }

  const double res_kh = 0.5 * res_k;
  double res_asc = kWgk[7] * std::fabs(fc - res_kh);
  for (int j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::fabs(fv1[j] - res_kh) + std::fabs(fv2[j] - res_kh));
  }
  res_asc *= std::fabs(half);
  res_abs *= std::fabs(half);
  double err = std::fabs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * res_abs, err);
  seg.error = err;
  return seg;
}

struct AdaptiveOutcome {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  bool over_cap = false;
  bool infinite = false;
  std::size_t evaluations = 0;
};

AdaptiveOutcome adaptive(const Integrand& f, std::span<const Piece> pieces,
                         const QuadratureConfig& cfg) {
  AdaptiveOutcome out;
  std::priority_queue<Segment> live;
  std::vector<Segment> frozen;
  double total = 0.0;
  double total_err = 0.0;

  auto record = [&](const Segment& seg) -> bool {
    out.evaluations += 15;
    if (seg.infinite) {
      out.infinite = true;
      out.value = seg.value;
      return false;
    }
    total += seg.value;
    total_err += seg.error;
    live.push(seg);
    return true;
  };

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!record(gauss_kronrod15(f, pieces[i], i, pieces[i].t_lo, pieces[i].t_hi, 0))) return out;
  }

  auto resum = [&] {
    total = 0.0;
    total_err = 0.0;
    auto copy = live;
    while (!copy.empty()) {
      total += copy.top().value;
      total_err += copy.top().error;
      copy.pop();
    }
    for (const auto& seg : frozen) {
      total += seg.value;
      total_err += seg.error;
    }
  };

  bool resummed = false;
  while (true) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    if (total_err <= tol) {
      // Running sums drift; confirm against an exact re-summation once.
      if (!resummed) {
        resum();
        resummed = true;
        continue;
      }
      out.converged = true;
      break;
    }
    resummed = false;
    if (std::fabs(total) > cfg.divergence_cap) {
      out.over_cap = true;
      break;
    }
    if (live.empty() || live.size() + frozen.size() >= cfg.max_segments) break;

    const Segment worst = live.top();
    live.pop();
    if (worst.depth >= cfg.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece& piece = pieces[worst.piece];
    if (!record(gauss_kronrod15(f, piece, worst.piece, worst.a, mid, worst.depth + 1))) return out;
    if (!record(gauss_kronrod15(f, piece, worst.piece, mid, worst.b, worst.depth + 1))) return out;
  }
  resum();
  out.value = total;
  out.error = total_err;
  return out;
}

// Integrates each infinite piece over a growing truncation and decides
// whether the increments decay. Returns +-1 for a divergent tail, 0 otherwise.
int probe_divergence(const Integrand& f, std::span<const Piece> pieces,
                     const QuadratureConfig& cfg, std::size_t& evaluations) {
  QuadratureConfig sub = cfg;
  sub.max_segments = std::max<std::size_t>(cfg.max_segments / 4, 200);
  for (const Piece& piece : pieces) {
    if (!piece.infinite()) continue;
    std::vector<double> estimates;
    for (double offset : cfg.truncation_schedule) {
      const Piece cut = piece.truncated(offset);
      const AdaptiveOutcome part = adaptive(f, std::span(&cut, 1), sub);
      evaluations += part.evaluations;
      if (part.infinite) return part.value > 0 ? 1 : -1;
      estimates.push_back(part.value);
      if (std::fabs(part.value) > cfg.divergence_cap) return part.value > 0 ? 1 : -1;
    }
    if (estimates.size() < 3) continue;
    const std::size_t n = estimates.size();
    const double last = estimates[n - 1] - estimates[n - 2];
    const double prev = estimates[n - 2] - estimates[n - 3];
    const double floor = 1e-6 * std::max(1.0, std::fabs(estimates[n - 1]));
    if (std::fabs(last) > floor && std::fabs(last) >= 0.5 * std::fabs(prev)) {
      return last > 0 ? 1 : -1;
    }
  }
  return 0;
}

std::vector<Piece> make_pieces(Interval iv, std::span<const double> breakpoints) {
  std::vector<double> cuts;
  for (double b : breakpoints) {
    if (std::isfinite(b) && b > iv.lower && b < iv.upper) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> pieces;
  const bool lower_inf = std::isinf(iv.lower);
  const bool upper_inf = std::isinf(iv.upper);
  if (lower_inf && upper_inf && cuts.empty()) {
    const double half_pi = 0.5 * std::numbers::pi;
    pieces.push_back({Map::tangent, 0.0, 1.0, -half_pi, half_pi});
    return pieces;
  }

  std::vector<double> nodes;
  if (!lower_inf) nodes.push_back(iv.lower);
  nodes.insert(nodes.end(), cuts.begin(), cuts.end());
  if (!upper_inf) nodes.push_back(iv.upper);
  if (nodes.empty()) nodes.push_back(0.0);  // (-inf, inf) handled above; unreachable

  double width = 1.0;
  if (cuts.size() >= 2) width = std::max(1.0, (cuts.back() - cuts.front()) / 8.0);

  if (lower_inf) pieces.push_back({Map::lower_tail, nodes.front(), width, 0.0, 1.0});
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    pieces.push_back({Map::finite, 0.0, 1.0, nodes[i], nodes[i + 1]});
  }
  if (upper_inf) pieces.push_back({Map::upper_tail, nodes.back(), width, 0.0, 1.0});
  return pieces;
}

std::vector<double> merged_breakpoints(const LocationScaleDensity& p,
                                       const LocationScaleDensity& q) {
  std::vector<double> out = density_breakpoints(p);
  const std::vector<double> more = density_breakpoints(q);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw InvalidArgument("quadrature tolerances must be nonnegative");
  }
  if (abs_tol == 0.0 && rel_tol == 0.0) {
    throw InvalidArgument("at least one quadrature tolerance must be positive");
  }
  if (max_depth <= 0) throw InvalidArgument("max_depth must be positive");
  if (!(divergence_cap > 0.0)) throw InvalidArgument("divergence_cap must be positive");
  if (max_segments < 2) throw InvalidArgument("max_segments must be at least 2");
  for (std::size_t i = 0; i < truncation_schedule.size(); ++i) {
    if (!(truncation_schedule[i] > 0.0) ||
        (i > 0 && !(truncation_schedule[i] > truncation_schedule[i - 1]))) {
      throw InvalidArgument("truncation_schedule must be positive and strictly increasing");
    }
  }
}

IntegralResult integrate(const Integrand& f, Interval interval, const QuadratureConfig& cfg,
                         std::span<const double> breakpoints) {
  cfg.validate();
  if (std::isnan(interval.lower) || std::isnan(interval.upper) ||
      !(interval.lower < interval.upper)) {
    throw InvalidArgument("integration interval must satisfy lower < upper");
  }
  const std::vector<Piece> pieces = make_pieces(interval, breakpoints);
  const AdaptiveOutcome run = adaptive(f, pieces, cfg);

  IntegralResult result;
  result.evaluations = run.evaluations;
  if (run.infinite) {
    result.value = run.value > 0 ? kInf : -kInf;
    result.converged = true;
    return result;
  }
  if (run.converged) {
    result.value = run.value;
    result.err_estimate = run.error;
    result.converged = true;
    return result;
  }
  if (run.over_cap) {
    result.value = run.value > 0 ? kInf : -kInf;
    result.converged = true;
    return result;
  }
  if (const int sign = probe_divergence(f, pieces, cfg, result.evaluations); sign != 0) {
    result.value = sign > 0 ? kInf : -kInf;
    result.converged = true;
    return result;
  }
  result.value = run.value;
  result.err_estimate = run.error;
  result.converged = false;
  return result;
}

std::vector<double> density_breakpoints(const LocationScaleDensity& d) {
  static constexpr double kTwoSided[] = {-10.0, -3.0, -1.0, 0.0, 1.0, 3.0, 10.0};
  static constexpr double kOneSided[] = {0.0, 1.0, 3.0, 10.0};
  std::vector<double> out;
  const std::span<const double> multiples =
      d.standard().on_real_line() ? std::span<const double>(kTwoSided)
                                  : std::span<const double>(kOneSided);
  for (double k : multiples) out.push_back(act(d.element(), k));
  return out;
}

IntegralResult cross_entropy_num(const LocationScaleDensity& p, const LocationScaleDensity& q,
                                 const QuadratureConfig& cfg) {
  auto integrand = [&](double x) {
    const double lp = p.log_pdf(x);
    if (lp == -kInf) return 0.0;
    const double pv = std::exp(lp);
    if (pv == 0.0) return 0.0;
    const double lq = q.log_pdf(x);
    if (lq == -kInf) return kInf;
    return -pv * lq;
  };
  std::vector<double> cuts = merged_breakpoints(p, q);
  cuts.push_back(q.support_lower());
  return integrate(integrand, {p.support_lower(), kInf}, cfg, cuts);
}

IntegralResult entropy_num(const LocationScaleDensity& p, const QuadratureConfig& cfg) {
  return cross_entropy_num(p, p, cfg);
}

IntegralResult fdiv_num(const FDivGenerator& gen, const LocationScaleDensity& p,
                        const LocationScaleDensity& q, const QuadratureConfig& cfg) {
  auto integrand = [&](double x) { return gen.weighted(p.log_pdf(x), q.log_pdf(x)); };
  std::vector<double> cuts = merged_breakpoints(p, q);
  cuts.push_back(p.support_lower());
  cuts.push_back(q.support_lower());
  const double lower = std::min(p.support_lower(), q.support_lower());
  return integrate(integrand, {lower, kInf}, cfg, cuts);
}

}  // namespace lsdiv
