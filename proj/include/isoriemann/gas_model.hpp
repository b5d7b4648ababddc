#pragma once

// Polytropic pressure law p = kappa * rho^gamma for the isentropic Euler
// system, its characteristic speeds and Riemann invariants.

namespace isoriemann {

/// Density below which momentum is not divided by density.
inline constexpr double kDefaultVacuumFloor = 1e-12;

class PolytropicEos {
 public:
  /// Throws DomainError unless kappa > 0 and gamma > 1.
  PolytropicEos(double kappa, double gamma);

  double kappa() const noexcept { return kappa_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double kappa_;
  double gamma_;
};

/// Primitive state. rho == 0 marks vacuum; v is then meaningless.
struct GasState {
  double rho = 0.0;
  double v = 0.0;

  friend bool operator==(const GasState&, const GasState&) = default;
};

struct ConservedState {
  double rho = 0.0;
  double momentum = 0.0;

  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

struct CharacteristicSpeeds {
  double lambda1;  // v - c
  double lambda2;  // v + c
};

struct RiemannInvariants {
  double phi1;  // v + 2c/(gamma-1), constant through 1-rarefactions
  double phi2;  // v - 2c/(gamma-1), constant through 2-rarefactions
};

double pressure(const PolytropicEos& eos, double rho);
double sound_speed(const PolytropicEos& eos, double rho);
CharacteristicSpeeds eigenvalues(const PolytropicEos& eos, const GasState& state);
RiemannInvariants riemann_invariants(const PolytropicEos& eos, const GasState& state);

ConservedState to_conserved(const GasState& state) noexcept;

/// Inverse of to_conserved above the floor; at or below it the velocity is
/// reported as 0.
GasState to_primitive(const ConservedState& cons,
                      double vacuum_floor = kDefaultVacuumFloor) noexcept;

/// Physical flux (rho v, rho v^2 + p) of the conserved state.
ConservedState physical_flux(const PolytropicEos& eos, const ConservedState& cons,
                             double vacuum_floor = kDefaultVacuumFloor);

}  // namespace isoriemann
