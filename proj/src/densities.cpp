#include "lsdiv/densities.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lsdiv/errors.hpp"

namespace lsdiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogPi = std::log(std::numbers::pi);
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);
const double kLogSqrt2OverPi = 0.5 * std::log(2.0 / std::numbers::pi);

std::string valid_families() {
  std::string out;
  for (Family f : kAllFamilies) {
    if (!out.empty()) out += ", ";
    out += family_name(f);
  }
  return out;
}

double parse_real(std::string_view text, std::string_view spec) {
  // std::from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("malformed number '" + std::string(text) + "' in density spec '" +
                          std::string(spec) + "'");
  }
  return value;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::cauchy: return "cauchy";
    case Family::normal: return "normal";
    case Family::halfnormal: return "halfnormal";
    case Family::exponential: return "exponential";
    case Family::laplace: return "laplace";
  }
  return "?";
}

double StandardDensity::pdf(double x) const noexcept {
  switch (family_) {
    case Family::cauchy: return 1.0 / (std::numbers::pi * (1.0 + x * x));
    case Family::normal: return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    case Family::halfnormal:
      return x < 0.0 ? 0.0 : std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * x * x);
    case Family::exponential: return x < 0.0 ? 0.0 : std::exp(-x);
    case Family::laplace: return 0.5 * std::exp(-std::fabs(x));
  }
  return 0.0;
}

double StandardDensity::log_pdf(double x) const noexcept {
  switch (family_) {
    case Family::cauchy:
      // x*x overflows long before log(1+x^2) does.
      if (std::fabs(x) > 1e150) return -kLogPi - 2.0 * std::log(std::fabs(x));
      return -kLogPi - std::log1p(x * x);
    case Family::normal: return -0.5 * x * x - kLogSqrt2Pi;
    case Family::halfnormal: return x < 0.0 ? -kInf : kLogSqrt2OverPi - 0.5 * x * x;
    case Family::exponential: return x < 0.0 ? -kInf : -x;
    case Family::laplace: return -std::numbers::ln2 - std::fabs(x);
  }
  return -kInf;
}

double StandardDensity::support_lower() const noexcept { return on_real_line() ? -kInf : 0.0; }

bool StandardDensity::on_real_line() const noexcept {
  return family_ != Family::halfnormal && family_ != Family::exponential;
}

bool StandardDensity::is_even() const noexcept { return on_real_line(); }

std::optional<double> StandardDensity::standard_entropy() const noexcept {
  if (family_ == Family::cauchy) return std::log(4.0 * std::numbers::pi);
  return std::nullopt;
}

StandardDensity catalog(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return StandardDensity(f);
  }
  throw CatalogError("unknown family '" + std::string(name) + "' (valid: " + valid_families() +
                     ")");
}

double LocationScaleDensity::pdf(double x) const noexcept {
  return std_.pdf(pull_back(elem_, x)) / elem_.scale();
}

double LocationScaleDensity::log_pdf(double x) const noexcept {
  return std_.log_pdf(pull_back(elem_, x)) - std::log(elem_.scale());
}

double LocationScaleDensity::support_lower() const noexcept {
  return std_.on_real_line() ? -kInf : elem_.location();
}

std::optional<double> entropy_closed(const LocationScaleDensity& d) noexcept {
  if (auto h = d.standard().standard_entropy()) return *h + std::log(d.scale());
  return std::nullopt;
}

LocationScaleDensity parse_density_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("density spec '" + std::string(spec) +
                          "' must look like <family>:<loc>,<scale>");
  }
  const StandardDensity standard = catalog(spec.substr(0, colon));
  const std::string_view params = spec.substr(colon + 1);
  const auto comma = params.find(',');
  if (comma == std::string_view::npos) {
    throw InvalidArgument("density spec '" + std::string(spec) +
                          "' must look like <family>:<loc>,<scale>");
  }
  const double loc = parse_real(params.substr(0, comma), spec);
  const double scale = parse_real(params.substr(comma + 1), spec);
  return LocationScaleDensity(standard, GroupElement(loc, scale));
}

}  // namespace lsdiv
