#pragma once

#include "isoriemann/gas_model.hpp"

// Forward wave curves in the (rho*, v*) plane.
//
// The 1-curves give the states reachable from a left anchor (rho-, v-), the
// 2-curves the states reachable from a right anchor (rho+, v+). Rarefaction
// branches hold rho* <= anchor density and are closed at rho* = 0 with the
// vacuum-endpoint velocity; shock branches hold rho* >= anchor density. At
// rho* equal to the anchor density both branches return the anchor velocity.

namespace isoriemann {

double rarefaction1_v(const PolytropicEos& eos, const GasState& left, double rho_star);
double rarefaction2_v(const PolytropicEos& eos, const GasState& right, double rho_star);
double shock1_v(const PolytropicEos& eos, const GasState& left, double rho_star);
double shock2_v(const PolytropicEos& eos, const GasState& right, double rho_star);

/// rarefaction1_v below left.rho, shock1_v above. Strictly decreasing.
double left_curve_v(const PolytropicEos& eos, const GasState& left, double rho_star);
/// rarefaction2_v below right.rho, shock2_v above. Strictly increasing.
double right_curve_v(const PolytropicEos& eos, const GasState& right, double rho_star);

/// d v*/d rho* of left_curve_v. At the junction the rarefaction slope
/// -c/rho is returned (the shock slope has the same limit).
double left_curve_dv(const PolytropicEos& eos, const GasState& left, double rho_star);
double right_curve_dv(const PolytropicEos& eos, const GasState& right, double rho_star);

/// Shock speed from the mass jump condition. Throws DomainError for equal
/// densities and AdmissibilityError if the momentum jump condition fails
/// (relative 1e-9).
double shock_speed(const PolytropicEos& eos, const GasState& ahead, const GasState& star);

/// Speed of the 1-shock joining left to the point of its shock curve at
/// rho_star, written without the (rho* - rho-) cancellation. Equal to
/// shock_speed(left, {rho_star, shock1_v(...)}).
double shock1_speed(const PolytropicEos& eos, const GasState& left, double rho_star);
double shock2_speed(const PolytropicEos& eos, const GasState& right, double rho_star);

/// (rho^gamma - rho_minus^gamma) (1 - rho_minus / rho); increasing on rho > rho_minus.
double h1(double rho, double rho_minus, double gamma);
/// rho^((gamma-1)/2) - rho_minus^((gamma-1)/2); increasing on rho > 0.
double h2(double rho, double rho_minus, double gamma);

}  // namespace isoriemann
