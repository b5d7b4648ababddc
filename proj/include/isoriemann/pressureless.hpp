#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/fv_solver.hpp"

// Riemann solutions of the zero-pressure (sticky particle) system
//   rho_t + (rho v)_x = 0,  (rho v)_t + (rho v^2)_x = 0.
//
// Converging data (v- > v+) produce a delta-shock whose speed is the
// sqrt(rho)-weighted mean velocity and whose weight grows at the rate
// sqrt(rho- rho+)(v- - v+); diverging data (v- < v+) produce two contact
// discontinuities moving with v- and v+ around a vacuum.

namespace isoriemann {

struct DeltaShock {
  double sigma;
  double weight_rate;  // dw/dt
  double u_delta;      // velocity carried by the concentrated mass, = sigma
};

enum class PressurelessPattern { Delta, VacuumContacts, Contact, Constant };

std::string_view to_string(PressurelessPattern pattern) noexcept;

struct PressurelessSolution {
  PressurelessPattern tag;
  RiemannProblem problem;
  /// Present for Delta, Contact and Constant (zero weight rate for the latter two).
  std::optional<DeltaShock> delta;
  /// (v-, v+) for VacuumContacts and Contact.
  std::optional<std::pair<double, double>> contact_speeds;
};

/// Throws DomainError for nonpositive densities.
PressurelessSolution solve_pressureless(const RiemannProblem& problem);

/// The delta mass is metadata, not a sampled density: at and right of the
/// front the right state is returned. Vacuum samples as (0, 0).
GasState sample_pressureless(const PressurelessSolution& solution, double xi);

/// Excess mass in [center - half_width, center + half_width] over the
/// background 2 half_width rho_bar, rho_bar being the mean of the two
/// boundary-cell densities. Partial cells are integrated exactly.
/// Throws DomainError if the window leaves the grid.
double delta_diagnostic(const FieldState& field, const Grid1D& grid, double half_width,
                        double center);

}  // namespace isoriemann
