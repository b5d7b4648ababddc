#include "isoriemann/pressureless.hpp"

#include <algorithm>
#include <cmath>

#include "isoriemann/errors.hpp"

namespace isoriemann {

std::string_view to_string(PressurelessPattern pattern) noexcept {
  switch (pattern) {
    case PressurelessPattern::Delta:
      return "Delta";
    case PressurelessPattern::VacuumContacts:
      return "VacuumContacts";
    case PressurelessPattern::Contact:
      return "Contact";
    case PressurelessPattern::Constant:
      return "Constant";
  }
  return "Unknown";
}

PressurelessSolution solve_pressureless(const RiemannProblem& problem) {
  problem.validate();
  const GasState& l = problem.left;
  const GasState& r = problem.right;

  PressurelessSolution sol{PressurelessPattern::Constant, problem, std::nullopt, std::nullopt};
  if (l.v > r.v) {
    const double wl = std::sqrt(l.rho);
    const double wr = std::sqrt(r.rho);
    const double sigma = (wl * l.v + wr * r.v) / (wl + wr);
    sol.tag = PressurelessPattern::Delta;
    sol.delta = DeltaShock{sigma, wl * wr * (l.v - r.v), sigma};
  } else if (l.v < r.v) {
    sol.tag = PressurelessPattern::VacuumContacts;
    sol.contact_speeds = std::pair{l.v, r.v};
  } else {
    sol.tag = l.rho == r.rho ? PressurelessPattern::Constant : PressurelessPattern::Contact;
    sol.delta = DeltaShock{l.v, 0.0, l.v};
    if (sol.tag == PressurelessPattern::Contact) sol.contact_speeds = std::pair{l.v, r.v};
  }
  return sol;
}

GasState sample_pressureless(const PressurelessSolution& solution, double xi) {
  const GasState& l = solution.problem.left;
  const GasState& r = solution.problem.right;
  switch (solution.tag) {
    case PressurelessPattern::Delta:
    case PressurelessPattern::Contact:
      return xi < solution.delta->sigma ? l : r;
    case PressurelessPattern::VacuumContacts:
      if (xi < l.v) return l;
      if (xi < r.v) return {0.0, 0.0};
      return r;
    case PressurelessPattern::Constant:
      break;
  }
  return l;
}

double delta_diagnostic(const FieldState& field, const Grid1D& grid, double half_width,
                        double center) {
  if (!(half_width > 0.0)) throw DomainError("window half-width must be positive");
  const double a = center - half_width;
  const double b = center + half_width;
  if (a < grid.x_min() || b > grid.x_max()) {
    throw DomainError("diagnostic window leaves the grid");
  }
  if (field.size() != static_cast<std::size_t>(grid.nx())) {
    throw DomainError("field and grid sizes differ");
  }

  double mass = 0.0;
  const int first = std::max(0, static_cast<int>(std::floor((a - grid.x_min()) / grid.dx())));
  const int last =
      std::min(grid.nx() - 1, static_cast<int>(std::floor((b - grid.x_min()) / grid.dx())));
  for (int i = first; i <= last; ++i) {
    const double lo = std::max(a, grid.x_min() + i * grid.dx());
    const double hi = std::min(b, grid.x_min() + (i + 1) * grid.dx());
    if (hi > lo) mass += field.rho[static_cast<std::size_t>(i)] * (hi - lo);
  }
  const double background = 0.5 * (field.rho.front() + field.rho.back());
  return mass - background * 2.0 * half_width;
}

}  // namespace isoriemann
