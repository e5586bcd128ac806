#include "lsdiv/lsdiv.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "lsdiv/checks.hpp"
#include "lsdiv/closed_forms.hpp"
#include "lsdiv/densities.hpp"
#include "lsdiv/divergence.hpp"
#include "lsdiv/errors.hpp"
#include "lsdiv/generator.hpp"
#include "lsdiv/projection.hpp"
#include "lsdiv/quadrature.hpp"
#include "lsdiv/symmetry.hpp"

struct lsdiv_density {
  lsdiv::LocationScaleDensity value;
};

struct lsdiv_generator {
  lsdiv::FDivGenerator value;
};

struct lsdiv_config {
  lsdiv::QuadratureConfig value;
};

struct lsdiv_check_report {
  lsdiv::CheckReport value;
};

namespace {

thread_local std::string g_last_error;

lsdiv_status fail(lsdiv_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
lsdiv_status guarded(Body&& body) noexcept {
  try {
    body();
    return LSDIV_OK;
  } catch (const lsdiv::CatalogError& e) {
    return fail(LSDIV_E_UNKNOWN_NAME, e.what());
  } catch (const lsdiv::InvalidArgument& e) {
    return fail(LSDIV_E_INVALID_ARGUMENT, e.what());
  } catch (const lsdiv::NumericFailure& e) {
    return fail(LSDIV_E_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LSDIV_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LSDIV_E_INTERNAL, e.what());
  } catch (...) {
    return fail(LSDIV_E_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw lsdiv::InvalidArgument(std::string(what) + " must not be null");
}

const lsdiv::QuadratureConfig& config_or_default(const lsdiv_config* cfg) {
  static const lsdiv::QuadratureConfig defaults;
  return cfg != nullptr ? cfg->value : defaults;
}

void fill(const lsdiv::DivergenceResult& r, lsdiv_result* out) {
  *out = lsdiv_result{};
  out->value = r.value;
  out->method =
      r.method == lsdiv::Method::closed_form ? LSDIV_METHOD_CLOSED_FORM : LSDIV_METHOD_QUADRATURE;
  out->error_estimate = r.err_estimate;
  out->converged = r.converged ? 1 : 0;
  out->raw_value = r.raw_value;
  out->clamped = r.clamped ? 1 : 0;
  if (r.verification) {
    out->verified = 1;
    out->verify_value = r.verification->quadrature_value;
    out->verify_error = r.verification->quadrature_error;
    out->verify_difference = r.verification->abs_difference;
    out->verify_agrees = r.verification->agrees ? 1 : 0;
  }
}

void fill(const lsdiv::ProjectionResult& r, lsdiv_projection* out) {
  *out = lsdiv_projection{};
  out->reduced_l = r.reduced_optimum.location();
  out->reduced_s = r.reduced_optimum.scale();
  out->optimum_l = r.target_optimum.location();
  out->optimum_s = r.target_optimum.scale();
  out->min_value = r.min_value;
  out->evaluations = r.evaluations;
  out->converged = r.converged ? 1 : 0;
  out->starts_used = r.starts_used;
  out->location_pinned = r.location_pinned ? 1 : 0;
}

}  // namespace

extern "C" {

const char* lsdiv_version(void) { return "0.1.0"; }

const char* lsdiv_last_error(void) { return g_last_error.c_str(); }

lsdiv_status lsdiv_density_create(const char* family, double location, double scale,
                                  lsdiv_density** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = new lsdiv_density{
        lsdiv::LocationScaleDensity(lsdiv::catalog(family), lsdiv::GroupElement(location, scale))};
  });
}

lsdiv_status lsdiv_density_parse(const char* spec, lsdiv_density** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new lsdiv_density{lsdiv::parse_density_spec(spec)};
  });
}

void lsdiv_density_destroy(lsdiv_density* d) { delete d; }

const char* lsdiv_density_family(const lsdiv_density* d) {
  if (d == nullptr) return nullptr;
  // family_name returns views of string literals.
  return d->value.standard().name().data();
}

lsdiv_status lsdiv_density_params(const lsdiv_density* d, double* location, double* scale) {
  return guarded([&] {
    require(d, "density");
    if (location != nullptr) *location = d->value.location();
    if (scale != nullptr) *scale = d->value.scale();
  });
}

lsdiv_status lsdiv_density_pdf(const lsdiv_density* d, double x, double* out) {
  return guarded([&] {
    require(d, "density");
    require(out, "out");
    *out = d->value.pdf(x);
  });
}

lsdiv_status lsdiv_generator_create(const char* name, lsdiv_generator** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new lsdiv_generator{lsdiv::generator_by_name(name)};
  });
}

lsdiv_status lsdiv_generator_adjoint(const lsdiv_generator* gen, lsdiv_generator** out) {
  return guarded([&] {
    require(gen, "generator");
    require(out, "out");
    *out = new lsdiv_generator{lsdiv::adjoint(gen->value)};
  });
}

void lsdiv_generator_destroy(lsdiv_generator* gen) { delete gen; }

const char* lsdiv_generator_name(const lsdiv_generator* gen) {
  return gen == nullptr ? nullptr : gen->value.name().c_str();
}

lsdiv_status lsdiv_generator_eval(const lsdiv_generator* gen, double u, double* out) {
  return guarded([&] {
    require(gen, "generator");
    require(out, "out");
    *out = gen->value(u);
  });
}

lsdiv_status lsdiv_config_create(lsdiv_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lsdiv_config{};
  });
}

void lsdiv_config_destroy(lsdiv_config* cfg) { delete cfg; }

lsdiv_status lsdiv_config_set_abs_tol(lsdiv_config* cfg, double v) {
  return guarded([&] {
    require(cfg, "config");
    lsdiv::QuadratureConfig next = cfg->value;
    next.abs_tol = v;
    next.validate();
    cfg->value = next;
  });
}

lsdiv_status lsdiv_config_set_rel_tol(lsdiv_config* cfg, double v) {
  return guarded([&] {
    require(cfg, "config");
    lsdiv::QuadratureConfig next = cfg->value;
    next.rel_tol = v;
    next.validate();
    cfg->value = next;
  });
}

lsdiv_status lsdiv_config_set_max_depth(lsdiv_config* cfg, int v) {
  return guarded([&] {
    require(cfg, "config");
    lsdiv::QuadratureConfig next = cfg->value;
    next.max_depth = v;
    next.validate();
    cfg->value = next;
  });
}

lsdiv_status lsdiv_entropy(const lsdiv_density* p, const lsdiv_config* cfg, unsigned flags,
                           lsdiv_result* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    fill(lsdiv::entropy(p->value, config_or_default(cfg), (flags & LSDIV_VERIFY) != 0), out);
  });
}

lsdiv_status lsdiv_cross_entropy(const lsdiv_density* p, const lsdiv_density* q,
                                 const lsdiv_config* cfg, unsigned flags, lsdiv_result* out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    fill(lsdiv::cross_entropy(p->value, q->value, config_or_default(cfg),
                              (flags & LSDIV_VERIFY) != 0),
         out);
  });
}

lsdiv_status lsdiv_kl(const lsdiv_density* p, const lsdiv_density* q, const lsdiv_config* cfg,
                      unsigned flags, lsdiv_result* out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    fill(lsdiv::kl(p->value, q->value, config_or_default(cfg), (flags & LSDIV_VERIFY) != 0), out);
  });
}

lsdiv_status lsdiv_fdiv(const lsdiv_generator* gen, const lsdiv_density* p,
                        const lsdiv_density* q, const lsdiv_config* cfg, unsigned flags,
                        lsdiv_result* out) {
  return guarded([&] {
    require(gen, "generator");
    require(p, "p");
    require(q, "q");
    require(out, "out");
    fill(lsdiv::fdiv(gen->value, p->value, q->value, config_or_default(cfg),
                     (flags & LSDIV_VERIFY) != 0),
         out);
  });
}

lsdiv_status lsdiv_reduce(const lsdiv_density* p, const lsdiv_density* q, double right[2],
                          double left[2]) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    const lsdiv::GroupElement r = lsdiv::reduce_right(p->value.element(), q->value.element());
    const lsdiv::GroupElement l = lsdiv::reduce_left(p->value.element(), q->value.element());
    if (right != nullptr) {
      right[0] = r.location();
      right[1] = r.scale();
    }
    if (left != nullptr) {
      left[0] = l.location();
      left[1] = l.scale();
    }
  });
}

lsdiv_status lsdiv_project(const lsdiv_density* query, const char* family,
                           const lsdiv_generator* gen, lsdiv_side side, const lsdiv_config* cfg,
                           lsdiv_projection* out) {
  return guarded([&] {
    require(query, "query");
    require(family, "family");
    require(out, "out");
    const lsdiv::StandardDensity other = lsdiv::catalog(family);
    const lsdiv::FDivGenerator generator =
        gen != nullptr ? gen->value : lsdiv::builtin_generator(lsdiv::GeneratorKind::kl);
    const auto& c = config_or_default(cfg);
    if (side == LSDIV_SIDE_RIGHT) {
      fill(lsdiv::project_right(query->value, other, generator, c), out);
    } else if (side == LSDIV_SIDE_LEFT) {
      fill(lsdiv::project_left(query->value, other, generator, c), out);
    } else {
      throw lsdiv::InvalidArgument("side must be LSDIV_SIDE_RIGHT or LSDIV_SIDE_LEFT");
    }
  });
}

lsdiv_status lsdiv_location_symmetry_defect(const char* family, double l,
                                            const lsdiv_config* cfg, double* out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = lsdiv::location_symmetry_defect(lsdiv::catalog(family), l, config_or_default(cfg))
               .value;
  });
}

lsdiv_status lsdiv_scale_symmetry_defect(const char* family, double s, const lsdiv_config* cfg,
                                         double* out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out =
        lsdiv::scale_symmetry_defect(lsdiv::catalog(family), s, config_or_default(cfg)).value;
  });
}

lsdiv_status lsdiv_fdiv_symmetry_defect(const lsdiv_generator* gen, const lsdiv_density* p,
                                        const lsdiv_density* q, const lsdiv_config* cfg,
                                        lsdiv_symmetry* out) {
  return guarded([&] {
    require(gen, "generator");
    require(p, "p");
    require(q, "q");
    require(out, "out");
    const lsdiv::SymmetryDefect d =
        lsdiv::fdiv_symmetry_defect(gen->value, p->value, q->value, config_or_default(cfg));
    *out = lsdiv_symmetry{d.value,          d.err_estimate, d.converged ? 1 : 0,
                          d.comparable ? 1 : 0, d.forward,  d.backward};
  });
}

lsdiv_status lsdiv_cauchy_kl(double l1, double s1, double l2, double s2, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = lsdiv::cauchy_kl(lsdiv::GroupElement(l1, s1), lsdiv::GroupElement(l2, s2));
  });
}

lsdiv_status lsdiv_cauchy_scale_cross_entropy(double s1, double s2, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = lsdiv::cauchy_scale_cross_entropy(s1, s2);
  });
}

lsdiv_status lsdiv_cauchy_scale_kl(double s1, double s2, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = lsdiv::cauchy_scale_kl(s1, s2);
  });
}

lsdiv_status lsdiv_halfnormal_exp_kl(double s1, double s2, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = lsdiv::halfnormal_exp_kl(s1, s2);
  });
}

lsdiv_status lsdiv_log_integral_a(double a, double b, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = lsdiv::log_integral_A(a, b);
  });
}

lsdiv_status lsdiv_check_run(const char* suite, size_t trials, uint64_t seed,
                             const lsdiv_config* cfg, lsdiv_check_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    const lsdiv::Suite s = lsdiv::parse_suite(suite);
    auto report = std::make_unique<lsdiv_check_report>();
    report->value = lsdiv::run_checks(s, trials, seed, config_or_default(cfg));
    *out = report.release();
  });
}

void lsdiv_check_report_destroy(lsdiv_check_report* report) { delete report; }

size_t lsdiv_check_report_size(const lsdiv_check_report* report) {
  return report == nullptr ? 0 : report->value.items.size();
}

lsdiv_status lsdiv_check_report_item(const lsdiv_check_report* report, size_t index,
                                     lsdiv_check_item* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->value.items.size()) {
      throw lsdiv::InvalidArgument("check item index out of range");
    }
    const lsdiv::CheckItem& item = report->value.items[index];
    *out = lsdiv_check_item{item.suite.c_str(), item.name.c_str(), item.trials,
                            item.failures,      item.infinite,     item.max_defect,
                            item.tolerance,     item.passed() ? 1 : 0};
  });
}

int lsdiv_check_report_passed(const lsdiv_check_report* report) {
  return report != nullptr && report->value.passed() ? 1 : 0;
}

}  // extern "C"
