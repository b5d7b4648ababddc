#include "isoriemann/wave_curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isoriemann/errors.hpp"

namespace isoriemann {

namespace {

void require_anchor(const GasState& anchor) {
  if (!(anchor.rho > 0.0) || !std::isfinite(anchor.rho) || !std::isfinite(anchor.v)) {
    throw DomainError("wave-curve anchor needs a finite positive density");
  }
}

void require_star(double rho_star) {
  if (!(rho_star >= 0.0) || !std::isfinite(rho_star)) {
    throw DomainError("intermediate density must be finite and nonnegative, got " +
                      std::to_string(rho_star));
  }
}

// 2 sqrt(kappa gamma) / (gamma - 1)
double fan_coefficient(const PolytropicEos& eos) {
  return 2.0 * std::sqrt(eos.kappa() * eos.gamma()) / (eos.gamma() - 1.0);
}

// Difference quotient (rho^g - rho0^g) / (rho - rho0), exact limit at rho0.
double power_quotient(double rho, double rho0, double gamma) {
  const double d = rho - rho0;
  if (d == 0.0) return gamma * std::pow(rho0, gamma - 1.0);
  return std::pow(rho0, gamma) * std::expm1(gamma * std::log1p(d / rho0)) / d;
}

// kappa (rho^g - rho0^g) / (rho rho0 (rho - rho0)); the shock branch reads
// v* = v0 -+ (rho - rho0) sqrt(H).
double shock_factor(const PolytropicEos& eos, double rho, double rho0) {
  return eos.kappa() * power_quotient(rho, rho0, eos.gamma()) / (rho * rho0);
}

// (rho - rho0) dH/drho, written without cancellation near the junction.
double scaled_shock_factor_slope(const PolytropicEos& eos, double rho, double rho0) {
  const double g = eos.gamma();
  const double q = power_quotient(rho, rho0, g);
  const double d = rho - rho0;
  return eos.kappa() / rho0 * ((g * std::pow(rho, g - 1.0) - q) / rho - d * q / (rho * rho));
}

void require_rarefaction_branch(const GasState& anchor, double rho_star) {
  require_anchor(anchor);
  require_star(rho_star);
  if (rho_star > anchor.rho) {
    throw AdmissibilityError("rarefaction branch requires rho* <= anchor density");
  }
}

void require_shock_branch(const GasState& anchor, double rho_star) {
  require_anchor(anchor);
  require_star(rho_star);
  if (rho_star < anchor.rho) {
    throw AdmissibilityError("shock branch requires rho* >= anchor density");
  }
}

double fan_drop(const PolytropicEos& eos, double rho0, double rho_star) {
  const double a = 0.5 * (eos.gamma() - 1.0);
  return fan_coefficient(eos) * (std::pow(rho0, a) - std::pow(rho_star, a));
}

// c / rho = sqrt(kappa gamma) rho^((gamma-3)/2), with its limit at rho = 0.
double fan_slope(const PolytropicEos& eos, double rho) {
  return std::sqrt(eos.kappa() * eos.gamma()) * std::pow(rho, 0.5 * (eos.gamma() - 3.0));
}

}  // namespace

double rarefaction1_v(const PolytropicEos& eos, const GasState& left, double rho_star) {
  require_rarefaction_branch(left, rho_star);
  return left.v + fan_drop(eos, left.rho, rho_star);
}

double rarefaction2_v(const PolytropicEos& eos, const GasState& right, double rho_star) {
  require_rarefaction_branch(right, rho_star);
  return right.v - fan_drop(eos, right.rho, rho_star);
}

double shock1_v(const PolytropicEos& eos, const GasState& left, double rho_star) {
  require_shock_branch(left, rho_star);
  return left.v - (rho_star - left.rho) * std::sqrt(shock_factor(eos, rho_star, left.rho));
}

double shock2_v(const PolytropicEos& eos, const GasState& right, double rho_star) {
  require_shock_branch(right, rho_star);
  return right.v + (rho_star - right.rho) * std::sqrt(shock_factor(eos, rho_star, right.rho));
}

double left_curve_v(const PolytropicEos& eos, const GasState& left, double rho_star) {
  return rho_star <= left.rho ? rarefaction1_v(eos, left, rho_star)
                              : shock1_v(eos, left, rho_star);
}

double right_curve_v(const PolytropicEos& eos, const GasState& right, double rho_star) {
  return rho_star <= right.rho ? rarefaction2_v(eos, right, rho_star)
                               : shock2_v(eos, right, rho_star);
}

double left_curve_dv(const PolytropicEos& eos, const GasState& left, double rho_star) {
  require_anchor(left);
  require_star(rho_star);
  if (rho_star <= left.rho) return -fan_slope(eos, rho_star);
  const double root = std::sqrt(shock_factor(eos, rho_star, left.rho));
  return -root - scaled_shock_factor_slope(eos, rho_star, left.rho) / (2.0 * root);
}

double right_curve_dv(const PolytropicEos& eos, const GasState& right, double rho_star) {
  require_anchor(right);
  require_star(rho_star);
  if (rho_star <= right.rho) return fan_slope(eos, rho_star);
  const double root = std::sqrt(shock_factor(eos, rho_star, right.rho));
  return root + scaled_shock_factor_slope(eos, rho_star, right.rho) / (2.0 * root);
}

double shock_speed(const PolytropicEos& eos, const GasState& ahead, const GasState& star) {
  if (star.rho == ahead.rho) {
    throw DomainError("shock speed undefined for equal densities");
  }
  const ConservedState u0 = to_conserved(ahead);
  const ConservedState u1 = to_conserved(star);
  const double sigma = (u1.momentum - u0.momentum) / (u1.rho - u0.rho);

  const double flux0 = u0.momentum * ahead.v + pressure(eos, ahead.rho);
  const double flux1 = u1.momentum * star.v + pressure(eos, star.rho);
  const double residual = sigma * (u1.momentum - u0.momentum) - (flux1 - flux0);
  const double scale = std::max({std::abs(flux0), std::abs(flux1),
                                 std::abs(sigma) * std::abs(u0.momentum),
                                 std::abs(sigma) * std::abs(u1.momentum), 1e-300});
  if (std::abs(residual) > 1e-9 * scale) {
    throw AdmissibilityError("momentum jump condition violated across proposed shock");
  }
  return sigma;
}

double shock1_speed(const PolytropicEos& eos, const GasState& left, double rho_star) {
  require_shock_branch(left, rho_star);
  return left.v - rho_star * std::sqrt(shock_factor(eos, rho_star, left.rho));
}

double shock2_speed(const PolytropicEos& eos, const GasState& right, double rho_star) {
  require_shock_branch(right, rho_star);
  return right.v + rho_star * std::sqrt(shock_factor(eos, rho_star, right.rho));
}

double h1(double rho, double rho_minus, double gamma) {
  return (std::pow(rho, gamma) - std::pow(rho_minus, gamma)) * (1.0 - rho_minus / rho);
}

double h2(double rho, double rho_minus, double gamma) {
  const double a = 0.5 * (gamma - 1.0);
  return std::pow(rho, a) - std::pow(rho_minus, a);
}

}  // namespace isoriemann
