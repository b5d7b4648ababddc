#include "isoriemann/gas_model.hpp"

#include <cmath>
#include <string>

#include "isoriemann/errors.hpp"

namespace isoriemann {

namespace {

void require_density(double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw DomainError("density must be finite and nonnegative, got " + std::to_string(rho));
  }
}

}  // namespace

PolytropicEos::PolytropicEos(double kappa, double gamma) : kappa_(kappa), gamma_(gamma) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be positive, got " + std::to_string(kappa));
  }
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must exceed 1, got " + std::to_string(gamma));
  }
}

double pressure(const PolytropicEos& eos, double rho) {
  require_density(rho);
  return eos.kappa() * std::pow(rho, eos.gamma());
}

double sound_speed(const PolytropicEos& eos, double rho) {
  require_density(rho);
  if (rho == 0.0) return 0.0;
  return std::sqrt(eos.gamma() * eos.kappa() * std::pow(rho, eos.gamma() - 1.0));
}

CharacteristicSpeeds eigenvalues(const PolytropicEos& eos, const GasState& state) {
  const double c = sound_speed(eos, state.rho);
  return {state.v - c, state.v + c};
}

RiemannInvariants riemann_invariants(const PolytropicEos& eos, const GasState& state) {
  const double w = 2.0 * sound_speed(eos, state.rho) / (eos.gamma() - 1.0);
  return {state.v + w, state.v - w};
}

ConservedState to_conserved(const GasState& state) noexcept {
  return {state.rho, state.rho * state.v};
}

GasState to_primitive(const ConservedState& cons, double vacuum_floor) noexcept {
  if (cons.rho <= vacuum_floor) return {cons.rho, 0.0};
  return {cons.rho, cons.momentum / cons.rho};
}

ConservedState physical_flux(const PolytropicEos& eos, const ConservedState& cons,
                             double vacuum_floor) {
  const GasState w = to_primitive(cons, vacuum_floor);
  return {cons.momentum, cons.momentum * w.v + pressure(eos, cons.rho)};
}

}  // namespace isoriemann
