#include "lsdiv/divergence.hpp"

#include <cmath>
#include <limits>

#include "lsdiv/closed_forms.hpp"

namespace lsdiv {
namespace {

DivergenceResult from_closed_form(double value) {
  DivergenceResult r;
  r.value = value;
  r.raw_value = value;
  r.method = Method::closed_form;
  r.err_estimate = 0.0;
  r.converged = true;
  return r;
}

DivergenceResult from_quadrature(const IntegralResult& q, double offset = 0.0) {
  DivergenceResult r;
  r.value = q.value + offset;
  r.raw_value = r.value;
  r.method = Method::quadrature;
  r.err_estimate = q.err_estimate;
  r.converged = q.converged;
  return r;
}

void clamp_noise(DivergenceResult& r) {
  if (r.value < 0.0 && r.value >= -kClampBand) {
    r.value = 0.0;
    r.clamped = true;
  }
}

void attach_verification(DivergenceResult& r, const IntegralResult& q, double offset = 0.0) {
  const double qv = q.value + offset;
  Verification v{qv, q.err_estimate, 0.0, false};
  if (std::isinf(qv) || std::isinf(r.value)) {
    v.abs_difference = qv == r.value ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    v.abs_difference = std::fabs(qv - r.value);
  }
  v.agrees = v.abs_difference <= kVerifyTolerance;
  r.verification = v;
}

IntegralResult reduced_fdiv_num(const FDivGenerator& gen, const LocationScaleDensity& p,
                                const LocationScaleDensity& q, const QuadratureConfig& cfg) {
  const LocationScaleDensity p_std = p.with(identity());
  const LocationScaleDensity q_red = q.with(reduce_right(p.element(), q.element()));
  return fdiv_num(gen, p_std, q_red, cfg);
}

IntegralResult reduced_cross_entropy_num(const LocationScaleDensity& p,
                                         const LocationScaleDensity& q,
                                         const QuadratureConfig& cfg) {
  const LocationScaleDensity p_std = p.with(identity());
  const LocationScaleDensity q_red = q.with(reduce_right(p.element(), q.element()));
  return cross_entropy_num(p_std, q_red, cfg);
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  return m == Method::closed_form ? "closed_form" : "quadrature";
}

GroupElement reduce_right(const GroupElement& e1, const GroupElement& e2) {
  return GroupElement((e2.location() - e1.location()) / e1.scale(), e2.scale() / e1.scale());
}

GroupElement reduce_left(const GroupElement& e1, const GroupElement& e2) {
  return GroupElement((e1.location() - e2.location()) / e2.scale(), e1.scale() / e2.scale());
}

std::optional<double> closed_form_fdiv(const FDivGenerator& gen, const LocationScaleDensity& p,
                                       const LocationScaleDensity& q) {
  if (gen.kind() != GeneratorKind::kl) return std::nullopt;
  const Family fp = p.standard().family();
  const Family fq = q.standard().family();
  if (fp == Family::cauchy && fq == Family::cauchy) return cauchy_kl(p.element(), q.element());
  if (fp == Family::halfnormal && fq == Family::exponential && p.location() == q.location()) {
    return halfnormal_exp_kl(p.scale(), q.scale());
  }
  return std::nullopt;
}

std::optional<double> closed_form_cross_entropy(const LocationScaleDensity& p,
                                                const LocationScaleDensity& q) {
  if (p.standard().family() == Family::cauchy && q.standard().family() == Family::cauchy &&
      p.location() == q.location()) {
    return cauchy_scale_cross_entropy(p.scale(), q.scale());
  }
  return std::nullopt;
}

DivergenceResult fdiv(const FDivGenerator& gen, const LocationScaleDensity& p,
                      const LocationScaleDensity& q, const QuadratureConfig& cfg, bool verify) {
  DivergenceResult r;
  if (auto closed = closed_form_fdiv(gen, p, q)) {
    r = from_closed_form(*closed);
    if (verify) attach_verification(r, reduced_fdiv_num(gen, p, q, cfg));
  } else {
    r = from_quadrature(reduced_fdiv_num(gen, p, q, cfg));
  }
  clamp_noise(r);
  return r;
}

DivergenceResult kl(const LocationScaleDensity& p, const LocationScaleDensity& q,
                    const QuadratureConfig& cfg, bool verify) {
  return fdiv(builtin_generator(GeneratorKind::kl), p, q, cfg, verify);
}

DivergenceResult cross_entropy(const LocationScaleDensity& p, const LocationScaleDensity& q,
                               const QuadratureConfig& cfg, bool verify) {
  const double log_s1 = std::log(p.scale());
  if (auto closed = closed_form_cross_entropy(p, q)) {
    DivergenceResult r = from_closed_form(*closed);
    if (verify) attach_verification(r, reduced_cross_entropy_num(p, q, cfg), log_s1);
    return r;
  }
  return from_quadrature(reduced_cross_entropy_num(p, q, cfg), log_s1);
}

DivergenceResult entropy(const LocationScaleDensity& p, const QuadratureConfig& cfg, bool verify) {
  const double log_s = std::log(p.scale());
  const LocationScaleDensity p_std = p.with(identity());
  if (auto closed = entropy_closed(p)) {
    DivergenceResult r = from_closed_form(*closed);
    if (verify) attach_verification(r, entropy_num(p_std, cfg), log_s);
    return r;
  }
  return from_quadrature(entropy_num(p_std, cfg), log_s);
}

}  // namespace lsdiv
