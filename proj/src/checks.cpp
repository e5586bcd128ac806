#include "lsdiv/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "lsdiv/closed_forms.hpp"
#include "lsdiv/divergence.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/projection.hpp"
#include "lsdiv/symmetry.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIdentityTol = 1e-6;
constexpr double kSymmetryTol = 1e-8;

using Pair = std::pair<LocationScaleDensity, LocationScaleDensity>;

// Seeded per check so that adding or reordering checks does not shift the
// parameters drawn by the others.
class Draw {
 public:
  Draw(std::uint64_t seed, std::string_view check) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : check) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    rng_.seed(seed ^ h);
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  double location() { return uniform(-3.0, 3.0); }
  double scale() { return std::exp(uniform(-1.5, 1.5)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

class Tally {
 public:
  Tally(std::string suite, std::string name, double tolerance) {
    item_.suite = std::move(suite);
    item_.name = std::move(name);
    item_.tolerance = tolerance;
  }

  // |a - b|, optionally relative to max(1, |a|). Equal infinities agree.
  void compare(double a, double b, bool relative = false) {
    ++item_.trials;
    if (std::isinf(a) || std::isinf(b)) {
      if (a == b) {
        ++item_.infinite;
      } else {
        fail(kInf);
      }
      return;
    }
    double d = std::fabs(a - b);
    if (relative) d /= std::max(1.0, std::fabs(a));
    note(d);
  }

  void defect(double d) {
    ++item_.trials;
    note(std::fabs(d));
  }

  // Records a property that has no numeric defect.
  void require(bool ok) {
    ++item_.trials;
    if (!ok) fail(kInf);
  }

  CheckItem finish() { return std::move(item_); }

 private:
  void note(double d) {
    if (std::isnan(d) || d > item_.tolerance) {
      fail(std::isnan(d) ? kInf : d);
      return;
    }
    item_.max_defect = std::max(item_.max_defect, d);
  }
  void fail(double d) {
    ++item_.failures;
    item_.max_defect = std::max(item_.max_defect, d);
  }

  CheckItem item_;
};

LocationScaleDensity make(Family f, double l, double s) {
  return LocationScaleDensity(StandardDensity(f), GroupElement(l, s));
}

// Family pairs (p, q) whose cross-entropy is finite for suitably ordered
// locations: q's support covers p's and q's tails are no lighter than p's.
constexpr std::pair<Family, Family> kFinitePairs[] = {
    {Family::normal, Family::normal},           {Family::normal, Family::cauchy},
    {Family::normal, Family::laplace},          {Family::laplace, Family::laplace},
    {Family::laplace, Family::normal},          {Family::laplace, Family::cauchy},
    {Family::cauchy, Family::cauchy},           {Family::halfnormal, Family::exponential},
    {Family::exponential, Family::halfnormal},  {Family::halfnormal, Family::halfnormal},
    {Family::exponential, Family::exponential}, {Family::halfnormal, Family::normal},
    {Family::exponential, Family::cauchy},      {Family::exponential, Family::laplace},
};

struct Params {
  Family fp;
  Family fq;
  double l1, s1, l2, s2;
  double lambda;
  double alpha;
  double beta;
};

// Draws parameters; `lhs` maps them to the left-hand pair, which must have
// supp(p) inside supp(q) so that both sides stay finite.
Params draw_params(Draw& d, const std::function<Pair(const Params&)>& lhs) {
  const auto [fp, fq] = kFinitePairs[d.index(std::size(kFinitePairs))];
  for (int attempt = 0;; ++attempt) {
    Params p{fp, fq, d.location(), d.scale(), d.location(), d.scale(), d.scale(),
             d.location(), d.location()};
    const Pair pair = lhs(p);
    if (pair.first.support_lower() >= pair.second.support_lower() || attempt > 50) return p;
  }
}

using CrossRule = std::function<double(const Params&, const QuadratureConfig&)>;

CheckItem identity_battery(std::string name, std::size_t trials, std::uint64_t seed,
                           const QuadratureConfig& cfg,
                           const std::function<Pair(const Params&)>& lhs,
                           const std::function<double(const Pair&, const QuadratureConfig&)>& eval,
                           const CrossRule& rhs) {
  Tally tally("identities", name, kIdentityTol);
  Draw d(seed, name);
  for (std::size_t i = 0; i < trials; ++i) {
    const Params p = draw_params(d, lhs);
    tally.compare(eval(lhs(p), cfg), rhs(p, cfg));
  }
  return tally.finish();
}

double ce(const Pair& pq, const QuadratureConfig& cfg) {
  return cross_entropy_num(pq.first, pq.second, cfg).value;
}

double kl_num(const Pair& pq, const QuadratureConfig& cfg) {
  return fdiv_num(builtin_generator(GeneratorKind::kl), pq.first, pq.second, cfg).value;
}

void run_identities(std::vector<CheckItem>& out, std::size_t trials, std::uint64_t seed,
                    const QuadratureConfig& cfg) {
  auto pair = [](Family fp, double l1, double s1, Family fq, double l2, double s2) {
    return Pair{make(fp, l1, s1), make(fq, l2, s2)};
  };

  // Cross-entropy rewrite rules; each side integrated directly.
  out.push_back(identity_battery(
      "cross_entropy.left_scale", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.lambda * p.s1, p.fq, p.l2, p.s2); }, ce,
      [&](const Params& p, const QuadratureConfig& c) {
        const double lam = p.lambda;
        return ce(pair(p.fp, p.l1 / lam, p.s1, p.fq, p.l2 / lam, p.s2 / lam), c) + std::log(lam);
      }));
  out.push_back(identity_battery(
      "cross_entropy.left_translation", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1 + p.alpha, p.s1, p.fq, p.l2, p.s2); }, ce,
      [&](const Params& p, const QuadratureConfig& c) {
        return ce(pair(p.fp, p.l1, p.s1, p.fq, p.l2 - p.alpha, p.s2), c);
      }));
  out.push_back(identity_battery(
      "cross_entropy.right_scale", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2, p.lambda * p.s2); }, ce,
      [&](const Params& p, const QuadratureConfig& c) {
        const double lam = p.lambda;
        return ce(pair(p.fp, p.l1 / lam, p.s1 / lam, p.fq, p.l2 / lam, p.s2), c) + std::log(lam);
      }));
  out.push_back(identity_battery(
      "cross_entropy.right_translation", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2 + p.alpha, p.s2); }, ce,
      [&](const Params& p, const QuadratureConfig& c) {
        return ce(pair(p.fp, p.l1 - p.alpha, p.s1, p.fq, p.l2, p.s2), c);
      }));
  out.push_back(identity_battery(
      "cross_entropy.double_scale", trials, seed, cfg,
      [&](const Params& p) {
        return pair(p.fp, p.l1, p.lambda * p.s1, p.fq, p.l2, p.lambda * p.s2);
      },
      ce,
      [&](const Params& p, const QuadratureConfig& c) {
        const double lam = p.lambda;
        return ce(pair(p.fp, p.l1 / lam, p.s1, p.fq, p.l2 / lam, p.s2), c) + std::log(lam);
      }));
  {
    // Both right-hand forms of the two-translation rule; the worse one counts.
    const std::string name = "cross_entropy.two_translations";
    Tally tally("identities", name, kIdentityTol);
    Draw d(seed, name);
    auto lhs = [&](const Params& p) {
      return pair(p.fp, p.l1 + p.alpha, p.s1, p.fq, p.l2 + p.beta, p.s2);
    };
    for (std::size_t i = 0; i < trials; ++i) {
      const Params p = draw_params(d, lhs);
      const double left = ce(lhs(p), cfg);
      const double r1 = ce(pair(p.fp, p.l1, p.s1, p.fq, p.l2 + p.beta - p.alpha, p.s2), cfg);
      const double r2 = ce(pair(p.fp, p.l1 + p.alpha - p.beta, p.s1, p.fq, p.l2, p.s2), cfg);
      const bool r1_worse = std::isinf(r1) != std::isinf(left) ||
                            (std::isfinite(r1) && std::isfinite(r2) &&
                             std::fabs(r1 - left) > std::fabs(r2 - left));
      tally.compare(left, r1_worse ? r1 : r2);
    }
    out.push_back(tally.finish());
  }

  // KL identities.
  out.push_back(identity_battery(
      "kl.left_translation", trials, seed, cfg,
      [&](const Params& p) {
        return pair(p.fp, p.l1 + p.alpha, p.s1, p.fq, p.l2, p.lambda * p.s2);
      },
      kl_num,
      [&](const Params& p, const QuadratureConfig& c) {
        return kl_num(pair(p.fp, p.l1, p.s1, p.fq, p.l2 - p.alpha, p.lambda * p.s2), c);
      }));
  out.push_back(identity_battery(
      "kl.left_scale", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.lambda * p.s1, p.fq, p.l2, p.s2); },
      kl_num,
      [&](const Params& p, const QuadratureConfig& c) {
        const double lam = p.lambda;
        return kl_num(pair(p.fp, p.l1 / lam, p.s1, p.fq, p.l2 / lam, p.s2 / lam), c);
      }));
  out.push_back(identity_battery(
      "kl.right_translation", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2 + p.alpha, p.s2); },
      kl_num,
      [&](const Params& p, const QuadratureConfig& c) {
        return kl_num(pair(p.fp, p.l1 - p.alpha, p.s1, p.fq, p.l2, p.s2), c);
      }));
  out.push_back(identity_battery(
      "kl.right_scale", trials, seed, cfg,
      [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2, p.lambda * p.s2); },
      kl_num,
      [&](const Params& p, const QuadratureConfig& c) {
        const double lam = p.lambda;
        return kl_num(pair(p.fp, p.l1 / lam, p.s1 / lam, p.fq, p.l2 / lam, p.s2), c);
      }));

  // Entropy depends on the scale only.
  {
    Tally tally("identities", "entropy.location_scale", kIdentityTol);
    Draw d(seed, "entropy.location_scale");
    for (std::size_t i = 0; i < trials; ++i) {
      const Family f = kAllFamilies[d.index(kAllFamilies.size())];
      const double l = d.location();
      const double s = d.scale();
      const double lhs = entropy_num(make(f, l, s), cfg).value;
      const double rhs = entropy_num(make(f, 0.0, 1.0), cfg).value + std::log(s);
      tally.compare(lhs, rhs);
    }
    out.push_back(tally.finish());
  }

  // Cross-entropy reduced to a standard density on either side.
  {
    Tally tally("identities", "cross_entropy.reduction", kIdentityTol);
    Draw d(seed, "cross_entropy.reduction");
    auto lhs = [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2, p.s2); };
    for (std::size_t i = 0; i < trials; ++i) {
      const Params p = draw_params(d, lhs);
      const double direct = ce(lhs(p), cfg);
      const double via_q = ce(pair(p.fp, (p.l1 - p.l2) / p.s2, p.s1 / p.s2, p.fq, 0.0, 1.0), cfg) +
                           std::log(p.s2);
      const double via_p = ce(pair(p.fp, 0.0, 1.0, p.fq, (p.l2 - p.l1) / p.s1, p.s2 / p.s1), cfg) +
                           std::log(p.s1);
      tally.compare(direct, via_q);
      tally.compare(direct, via_p);
    }
    out.push_back(tally.finish());
  }

  // Three evaluation routes for the f-divergence: direct, right- and left-reduced.
  {
    const GeneratorKind kinds[] = {GeneratorKind::kl, GeneratorKind::squared_hellinger,
                                   GeneratorKind::total_variation};
    for (GeneratorKind kind : kinds) {
      const FDivGenerator gen = builtin_generator(kind);
      const std::string name = "fdiv.reduction." + gen.name();
      Tally tally("identities", name, kIdentityTol);
      Draw d(seed, name);
      auto lhs = [&](const Params& p) { return pair(p.fp, p.l1, p.s1, p.fq, p.l2, p.s2); };
      for (std::size_t i = 0; i < trials; ++i) {
        const Params p = draw_params(d, lhs);
        const Pair pq = lhs(p);
        const GroupElement right = reduce_right(pq.first.element(), pq.second.element());
        const GroupElement left = reduce_left(pq.first.element(), pq.second.element());
        const double direct = fdiv_num(gen, pq.first, pq.second, cfg).value;
        const double via_right =
            fdiv_num(gen, pq.first.with(identity()), pq.second.with(right), cfg).value;
        const double via_left =
            fdiv_num(gen, pq.first.with(left), pq.second.with(identity()), cfg).value;
        tally.compare(direct, via_right);
        tally.compare(direct, via_left);
      }
      out.push_back(tally.finish());
    }
  }

  // KL within a scale family depends on the scale ratio only.
  {
    Tally tally("identities", "kl.scale_invariance", kIdentityTol);
    Draw d(seed, "kl.scale_invariance");
    for (std::size_t i = 0; i < trials; ++i) {
      const Family f = kAllFamilies[d.index(kAllFamilies.size())];
      const double s1 = d.scale();
      const double s2 = d.scale();
      const double lam = d.scale();
      const double base = kl_num({make(f, 0.0, s1), make(f, 0.0, s2)}, cfg);
      const double scaled = kl_num({make(f, 0.0, lam * s1), make(f, 0.0, lam * s2)}, cfg);
      tally.compare(base, scaled);
    }
    out.push_back(tally.finish());
  }

  // D_f(s1:s2) = D_f(1 : s2/s1) = D_f(s1/s2 : 1) for scale densities.
  {
    Tally tally("identities", "fdiv.scale_ratio", kIdentityTol);
    Draw d(seed, "fdiv.scale_ratio");
    const GeneratorKind kinds[] = {GeneratorKind::kl, GeneratorKind::squared_hellinger,
                                   GeneratorKind::total_variation};
    for (std::size_t i = 0; i < trials; ++i) {
      const auto [fp, fq] = kFinitePairs[d.index(std::size(kFinitePairs))];
      const FDivGenerator gen = builtin_generator(kinds[d.index(std::size(kinds))]);
      const double s1 = d.scale();
      const double s2 = d.scale();
      const double base = fdiv_num(gen, make(fp, 0.0, s1), make(fq, 0.0, s2), cfg).value;
      tally.compare(base, fdiv_num(gen, make(fp, 0.0, 1.0), make(fq, 0.0, s2 / s1), cfg).value);
      tally.compare(base, fdiv_num(gen, make(fp, 0.0, s1 / s2), make(fq, 0.0, 1.0), cfg).value);
    }
    out.push_back(tally.finish());
  }
}

void run_symmetry(std::vector<CheckItem>& out, std::size_t trials, std::uint64_t seed,
                  const QuadratureConfig& cfg) {
  for (Family f : {Family::normal, Family::cauchy, Family::laplace}) {
    const std::string name = "location_condition." + std::string(family_name(f));
    Tally tally("symmetry", name, kSymmetryTol);
    Draw d(seed, name);
    for (std::size_t i = 0; i < trials; ++i) {
      tally.defect(location_symmetry_defect(StandardDensity(f), d.location(), cfg).value);
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("symmetry", "scale_condition.cauchy", kSymmetryTol);
    Draw d(seed, "scale_condition.cauchy");
    for (std::size_t i = 0; i < trials; ++i) {
      tally.defect(scale_symmetry_defect(StandardDensity(Family::cauchy), d.scale(), cfg).value);
    }
    out.push_back(tally.finish());
  }
  {
    // The exponential scale family is not KL-symmetric: the condition must fail.
    Tally tally("symmetry", "scale_condition.exponential_violated", 0.0);
    Draw d(seed, "scale_condition.exponential_violated");
    for (std::size_t i = 0; i < trials; ++i) {
      double s = d.scale();
      if (std::fabs(std::log(s)) < 0.1) s = 2.0;
      const double defect =
          scale_symmetry_defect(StandardDensity(Family::exponential), s, cfg).value;
      tally.require(std::fabs(defect) > 1e-6);
    }
    out.push_back(tally.finish());
  }
  {
    const GeneratorKind kinds[] = {GeneratorKind::kl, GeneratorKind::squared_hellinger,
                                   GeneratorKind::chi_squared};
    for (Family f : {Family::cauchy, Family::normal, Family::laplace}) {
      for (GeneratorKind kind : kinds) {
        const FDivGenerator gen = builtin_generator(kind);
        const std::string name =
            "even_location_family." + std::string(family_name(f)) + "." + gen.name();
        Tally tally("symmetry", name, kIdentityTol);
        Draw d(seed, name);
        for (std::size_t i = 0; i < trials; ++i) {
          const double l1 = d.location();
          const double l2 = d.location();
          const double forward = fdiv(gen, make(f, l1, 1.0), make(f, l2, 1.0), cfg).value;
          const double backward = fdiv(gen, make(f, l2, 1.0), make(f, l1, 1.0), cfg).value;
          tally.compare(forward, backward, true);
        }
        out.push_back(tally.finish());
      }
    }
  }
  {
    Tally tally("symmetry", "cauchy_scale_kl", kSymmetryTol);
    Draw d(seed, "cauchy_scale_kl");
    const FDivGenerator gen = builtin_generator(GeneratorKind::kl);
    for (std::size_t i = 0; i < trials; ++i) {
      const double l = d.location();
      const SymmetryDefect sd = fdiv_symmetry_defect(gen, make(Family::cauchy, l, d.scale()),
                                                     make(Family::cauchy, l, d.scale()), cfg);
      if (sd.comparable) {
        tally.defect(sd.value);
      } else {
        tally.require(false);
      }
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("symmetry", "tv_self_adjoint", kSymmetryTol);
    Draw d(seed, "tv_self_adjoint");
    const FDivGenerator gen = builtin_generator(GeneratorKind::total_variation);
    for (std::size_t i = 0; i < trials; ++i) {
      const Family fp = kAllFamilies[d.index(kAllFamilies.size())];
      const Family fq = kAllFamilies[d.index(kAllFamilies.size())];
      const SymmetryDefect sd = fdiv_symmetry_defect(
          gen, make(fp, d.location(), d.scale()), make(fq, d.location(), d.scale()), cfg);
      tally.defect(sd.value);
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("symmetry", "adjoint_swaps_arguments", kIdentityTol);
    Draw d(seed, "adjoint_swaps_arguments");
    const GeneratorKind kinds[] = {GeneratorKind::kl, GeneratorKind::reverse_kl,
                                   GeneratorKind::squared_hellinger,
                                   GeneratorKind::total_variation, GeneratorKind::chi_squared};
    for (std::size_t i = 0; i < trials; ++i) {
      const FDivGenerator gen = builtin_generator(kinds[d.index(std::size(kinds))]);
      const auto [fp, fq] = kFinitePairs[d.index(std::size(kFinitePairs))];
      const double l1 = d.location();
      const double l2 = d.location();
      // Half-line pairs need supp(p) inside supp(q).
      const LocationScaleDensity p = make(fp, std::max(l1, l2), d.scale());
      const LocationScaleDensity q = make(fq, std::min(l1, l2), d.scale());
      const double lhs = fdiv(adjoint(gen), p, q, cfg).value;
      const double rhs = fdiv(gen, q, p, cfg).value;
      tally.compare(lhs, rhs, true);
    }
    out.push_back(tally.finish());
  }
}

void run_closed_forms(std::vector<CheckItem>& out, std::size_t trials, std::uint64_t seed,
                      const QuadratureConfig& cfg) {
  const FDivGenerator kl_gen = builtin_generator(GeneratorKind::kl);
  constexpr double kScales[] = {0.5, 1.0, 2.0, 4.0};
  {
    Tally tally("closed-forms", "cauchy_scale_kl.grid", kIdentityTol);
    for (double s1 : kScales) {
      for (double s2 : kScales) {
        tally.compare(cauchy_scale_kl(s1, s2),
                      fdiv_num(kl_gen, make(Family::cauchy, 0, s1), make(Family::cauchy, 0, s2),
                               cfg)
                          .value);
      }
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("closed-forms", "cauchy_scale_cross_entropy.grid", kIdentityTol);
    for (double s1 : kScales) {
      for (double s2 : kScales) {
        tally.compare(cauchy_scale_cross_entropy(s1, s2),
                      cross_entropy_num(make(Family::cauchy, 0, s1), make(Family::cauchy, 0, s2),
                                        cfg)
                          .value);
      }
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("closed-forms", "cauchy_kl.generic", kIdentityTol);
    Tally symmetric("closed-forms", "cauchy_kl.symmetric", 1e-12);
    Draw d(seed, "cauchy_kl.generic");
    for (std::size_t i = 0; i < trials; ++i) {
      const GroupElement e1(d.location(), d.scale());
      const GroupElement e2(d.location(), d.scale());
      const double closed = cauchy_kl(e1, e2);
      tally.compare(closed, fdiv_num(kl_gen, LocationScaleDensity(StandardDensity(Family::cauchy), e1),
                                     LocationScaleDensity(StandardDensity(Family::cauchy), e2), cfg)
                                .value);
      symmetric.compare(closed, cauchy_kl(e2, e1));
    }
    out.push_back(tally.finish());
    out.push_back(symmetric.finish());
  }
  {
    Tally tally("closed-forms", "cauchy_entropy", kIdentityTol);
    Draw d(seed, "cauchy_entropy");
    for (std::size_t i = 0; i < trials; ++i) {
      const double s = d.scale();
      tally.compare(std::log(4.0 * std::numbers::pi * s),
                    entropy_num(make(Family::cauchy, d.location(), s), cfg).value);
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("closed-forms", "halfnormal_exponential_kl.grid", kIdentityTol);
    for (double s1 : {0.5, 1.0, 2.0}) {
      for (double s2 : {0.5, 1.0, 2.0}) {
        tally.compare(halfnormal_exp_kl(s1, s2),
                      fdiv_num(kl_gen, make(Family::halfnormal, 0, s1),
                               make(Family::exponential, 0, s2), cfg)
                          .value);
      }
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("closed-forms", "log_integral_A", kIdentityTol);
    Draw d(seed, "log_integral_A");
    for (std::size_t i = 0; i < trials; ++i) {
      const double a = d.scale();
      const double b = d.scale();
      auto integrand = [a, b](double x) { return std::log(a * a + x * x) / (b * b + x * x); };
      const double cuts[] = {-a, -b, 0.0, a, b};
      tally.compare(log_integral_A(a, b), integrate(integrand, {-kInf, kInf}, cfg, cuts).value);
    }
    out.push_back(tally.finish());
  }
  {
    Tally tally("closed-forms", "cauchy_scale_kl.am_gm", 1e-12);
    Draw d(seed, "cauchy_scale_kl.am_gm");
    for (std::size_t i = 0; i < trials; ++i) {
      const double s1 = d.scale();
      const double s2 = d.scale();
      const double v = cauchy_scale_kl(s1, s2);
      tally.compare(v, cauchy_kl(GroupElement(0, s1), GroupElement(0, s2)));
      tally.require(v > 0.0 || s1 == s2);
      tally.require(cauchy_scale_kl(s1, s1) == 0.0);
    }
    out.push_back(tally.finish());
  }
}

void run_projection(std::vector<CheckItem>& out, const QuadratureConfig& cfg) {
  const FDivGenerator kl_gen = builtin_generator(GeneratorKind::kl);
  const StandardDensity halfnormal(Family::halfnormal);
  const StandardDensity exponential(Family::exponential);
  const double expected_min = 0.5 + std::log(2.0 / std::numbers::pi);
  const double expected_ratio = std::sqrt(std::numbers::pi / 2.0);

  {
    Tally value("projection", "halfnormal_to_exponential.min_value", kIdentityTol);
    Tally ratio("projection", "halfnormal_to_exponential.optimal_ratio", 1e-4);
    Tally rebuilt("projection", "halfnormal_to_exponential.reconstruction", 1e-7);
    for (double s1 : {0.5, 1.0, 3.0}) {
      const LocationScaleDensity query = make(Family::halfnormal, 0.0, s1);
      const ProjectionResult r = project_right(query, exponential, kl_gen, cfg);
      value.compare(r.min_value, expected_min);
      ratio.compare(s1 / r.target_optimum.scale(), expected_ratio);
      const LocationScaleDensity at_opt(exponential, r.target_optimum);
      rebuilt.compare(fdiv_num(kl_gen, query, at_opt, cfg).value, r.min_value);
    }
    out.push_back(value.finish());
    out.push_back(ratio.finish());
    out.push_back(rebuilt.finish());
  }
  {
    Tally tally("projection", "left.query_independence", kIdentityTol);
    Tally rebuilt("projection", "left.reconstruction", 1e-7);
    for (double s2 : {0.5, 2.0, 5.0}) {
      const LocationScaleDensity query = make(Family::exponential, 0.0, s2);
      const ProjectionResult r = project_left(query, halfnormal, kl_gen, cfg);
      tally.compare(r.min_value, expected_min);
      const LocationScaleDensity at_opt(halfnormal, r.target_optimum);
      rebuilt.compare(fdiv_num(kl_gen, at_opt, query, cfg).value, r.min_value);
    }
    out.push_back(tally.finish());
    out.push_back(rebuilt.finish());
  }
  {
    // Two-parameter search with a quadrature objective.
    const StandardDensity cauchy(Family::cauchy);
    Tally tally("projection", "normal_to_cauchy.query_independence", kIdentityTol);
    Tally rebuilt("projection", "normal_to_cauchy.reconstruction", 1e-7);
    double reference = 0.0;
    bool first = true;
    for (auto [l1, s1] : {std::pair{0.0, 0.5}, {0.0, 1.0}, {3.0, 2.0}}) {
      const LocationScaleDensity query = make(Family::normal, l1, s1);
      const ProjectionResult r = project_right(query, cauchy, kl_gen, cfg);
      if (first) {
        reference = r.min_value;
        first = false;
      }
      tally.compare(r.min_value, reference);
      const LocationScaleDensity at_opt(cauchy, r.target_optimum);
      rebuilt.compare(fdiv_num(kl_gen, query, at_opt, cfg).value, r.min_value);
    }
    out.push_back(tally.finish());
    out.push_back(rebuilt.finish());
  }
  {
    Tally tally("projection", "family_min.single_sided_agree", kIdentityTol);
    const FamilyMinResult m = family_min(halfnormal, exponential, kl_gen, cfg);
    tally.compare(m.right.min_value, m.left.min_value);
    tally.compare(m.value, expected_min);
    out.push_back(tally.finish());
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "symmetry") return Suite::symmetry;
  if (name == "closed-forms") return Suite::closed_forms;
  if (name == "projection") return Suite::projection;
  if (name == "all") return Suite::all;
  throw CatalogError("unknown suite '" + std::string(name) +
                     "' (valid: identities, symmetry, closed-forms, projection, all)");
}

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::identities: return "identities";
    case Suite::symmetry: return "symmetry";
    case Suite::closed_forms: return "closed-forms";
    case Suite::projection: return "projection";
    case Suite::all: return "all";
  }
  return "?";
}

bool CheckReport::passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed(); });
}

CheckReport run_checks(Suite suite, std::size_t trials, std::uint64_t seed,
                       const QuadratureConfig& cfg) {
  cfg.validate();
  if (trials == 0) throw InvalidArgument("trials must be positive");
  CheckReport report;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::identities) run_identities(report.items, trials, seed, cfg);
  if (all || suite == Suite::symmetry) run_symmetry(report.items, trials, seed, cfg);
  if (all || suite == Suite::closed_forms) run_closed_forms(report.items, trials, seed, cfg);
  if (all || suite == Suite::projection) run_projection(report.items, cfg);
  return report;
}

}  // namespace lsdiv
