#include "isoriemann/fv_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace isoriemann {

namespace {

double sum(const std::vector<double>& values) {
  // Neumaier summation in index order: deterministic and accurate.
  double s = 0.0;
  double comp = 0.0;
  for (const double x : values) {
    const double t = s + x;
    comp += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + comp;
}

double abs_sum(const std::vector<double>& values) {
  double s = 0.0;
  for (const double x : values) s += std::abs(x);
  return s;
}

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, int nx) : x_min_(x_min), x_max_(x_max), nx_(nx) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ConfigError("grid needs finite x_min < x_max");
  }
  if (nx < 4) throw ConfigError("grid needs at least 4 cells");
  dx_ = (x_max - x_min) / nx;
}

std::vector<double> Grid1D::centers() const {
  std::vector<double> x(static_cast<std::size_t>(nx_));
  for (int i = 0; i < nx_; ++i) x[static_cast<std::size_t>(i)] = center(i);
  return x;
}

double FieldState::total_mass(const Grid1D& grid) const { return sum(rho) * grid.dx(); }

double FieldState::total_momentum(const Grid1D& grid) const {
  return sum(momentum) * grid.dx();
}

std::vector<double> FieldState::velocity(double vacuum_floor) const {
  std::vector<double> v(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    v[i] = to_primitive({rho[i], momentum[i]}, vacuum_floor).v;
  }
  return v;
}

SchemeConfig SchemeConfig::fixed_dt(double dt, double theta) {
  SchemeConfig c;
  c.dt = dt;
  c.cfl.reset();
  c.theta = theta;
  return c;
}

SchemeConfig SchemeConfig::courant(double cfl, double theta) {
  SchemeConfig c;
  c.cfl = cfl;
  c.theta = theta;
  return c;
}

void SchemeConfig::validate() const {
  if (dt.has_value() == cfl.has_value()) {
    throw ConfigError("exactly one of dt and cfl must be set");
  }
  if (dt && !(*dt > 0.0 && std::isfinite(*dt))) throw ConfigError("dt must be positive");
  if (cfl && !(*cfl > 0.0 && *cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1)");
  if (!(theta > 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in (0, 1]");
  if (cfl && *cfl > theta) {
    throw ConfigError("cfl must not exceed theta (stability bound dt max|lambda|/dx <= theta)");
  }
  if (!(vacuum_floor >= 0.0)) throw ConfigError("vacuum_floor must be nonnegative");
}

StepError::StepError(StepFailure kind, double time, const std::string& what)
    : NumericalError(what + " at t = " + std::to_string(time)), kind_(kind), time_(time) {}

FieldState init(const Grid1D& grid, const RiemannProblem& problem,
                const PolytropicEos& /*eos*/) {
  problem.validate();
  if (!(grid.x_min() < 0.0 && grid.x_max() > 0.0)) {
    throw ConfigError("the interface x = 0 must lie inside the grid");
  }
  const double edges_left = -grid.x_min() / grid.dx();
  if (std::abs(edges_left - std::round(edges_left)) > 1e-9 * std::max(1.0, edges_left)) {
    throw ConfigError("the interface x = 0 must coincide with a cell edge");
  }
  const auto n_left = static_cast<std::size_t>(std::llround(edges_left));

  FieldState f;
  const auto n = static_cast<std::size_t>(grid.nx());
  f.rho.resize(n);
  f.momentum.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ConservedState u = to_conserved(i < n_left ? problem.left : problem.right);
    f.rho[i] = u.rho;
    f.momentum[i] = u.momentum;
  }
  f.audit.initial_mass = f.total_mass(grid);
  f.audit.initial_momentum = f.total_momentum(grid);
  return f;
}

double max_wave_speed(const FieldState& field, const PolytropicEos& eos, double vacuum_floor) {
  double lam = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const GasState w = to_primitive({field.rho[i], field.momentum[i]}, vacuum_floor);
    lam = std::max(lam, std::abs(w.v) + sound_speed(eos, std::max(w.rho, 0.0)));
  }
  return lam;
}

double choose_dt(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                 const SchemeConfig& config) {
  if (config.dt) return *config.dt;
  const double lam = max_wave_speed(field, eos, config.vacuum_floor);
  if (!(lam > 0.0) || !std::isfinite(lam)) {
    throw StepError(StepFailure::Blowup, field.time, "no finite positive wave speed");
  }
  return *config.cfl * grid.dx() / lam;
}

FieldState step(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                const SchemeConfig& config, double dt) {
  const std::size_t n = field.size();
  const double dx = grid.dx();
  const double lam = max_wave_speed(field, eos, config.vacuum_floor);
  if (dt * lam / dx > config.theta * (1.0 + 1e-12)) {
    throw StepError(StepFailure::Cfl, field.time,
                    "CFL violation: dt max|lambda| / dx = " + std::to_string(dt * lam / dx) +
                        " exceeds theta = " + std::to_string(config.theta));
  }

  std::vector<ConservedState> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = physical_flux(eos, {field.rho[i], field.momentum[i]}, config.vacuum_floor);
  }

  // Interface j sits between cells j-1 and j; outflow ghosts copy the edge cells.
  const double nu = 0.5 * config.theta * dx / dt;
  std::vector<ConservedState> face(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t a = j == 0 ? 0 : j - 1;
    const std::size_t b = j == n ? n - 1 : j;
    face[j].rho = 0.5 * (f[a].rho + f[b].rho) - nu * (field.rho[b] - field.rho[a]);
    face[j].momentum =
        0.5 * (f[a].momentum + f[b].momentum) - nu * (field.momentum[b] - field.momentum[a]);
  }

  FieldState next;
  next.time = field.time + dt;
  next.rho.resize(n);
  next.momentum.resize(n);
  next.audit = field.audit;
  next.audit.boundary_mass_inflow += dt * (face[0].rho - face[n].rho);
  next.audit.boundary_momentum_inflow += dt * (face[0].momentum - face[n].momentum);
  ++next.audit.steps;

  const double r = dt / dx;
  for (std::size_t i = 0; i < n; ++i) {
    double rho = field.rho[i] - r * (face[i + 1].rho - face[i].rho);
    double m = field.momentum[i] - r * (face[i + 1].momentum - face[i].momentum);
    if (!std::isfinite(rho) || !std::isfinite(m)) {
      throw StepError(StepFailure::Blowup, field.time,
                      "non-finite state in cell " + std::to_string(i));
    }
    if (rho < config.vacuum_floor) {
      next.audit.floor_mass_added += (config.vacuum_floor - rho) * dx;
      next.audit.floor_momentum_added -= m * dx;
      rho = config.vacuum_floor;
      m = 0.0;
    }
    next.rho[i] = rho;
    next.momentum[i] = m;
  }
  return next;
}

FieldState step(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                const SchemeConfig& config) {
  config.validate();
  return step(field, grid, eos, config, choose_dt(field, grid, eos, config));
}

FieldState run(const Grid1D& grid, const RiemannProblem& problem, const PolytropicEos& eos,
               const SchemeConfig& config, double t_final) {
  config.validate();
  if (!(t_final > 0.0) || !std::isfinite(t_final)) throw DomainError("t_final must be positive");

  FieldState field = init(grid, problem, eos);
  while (field.time < t_final) {
    const double remaining = t_final - field.time;
    double dt = choose_dt(field, grid, eos, config);
    const bool last = dt >= remaining * (1.0 - 1e-12);
    if (last) dt = remaining;
    field = step(field, grid, eos, config, dt);
    if (last) field.time = t_final;
  }
  return field;
}

FieldState sample_field(const Grid1D& grid, const ExactSolution& exact, double t) {
  if (!(t > 0.0)) throw DomainError("self-similar sampling needs t > 0");
  FieldState f;
  f.time = t;
  const auto n = static_cast<std::size_t>(grid.nx());
  f.rho.resize(n);
  f.momentum.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ConservedState u = to_conserved(sample(exact, grid.center(static_cast<int>(i)) / t));
    f.rho[i] = u.rho;
    f.momentum[i] = u.momentum;
  }
  f.audit.initial_mass = f.total_mass(grid);
  f.audit.initial_momentum = f.total_momentum(grid);
  return f;
}

double l1_error(const FieldState& field, const Grid1D& grid, const ExactSolution& exact,
                double t) {
  if (!(t > 0.0)) throw DomainError("l1_error needs t > 0");
  if (field.size() != static_cast<std::size_t>(grid.nx())) {
    throw DomainError("field and grid sizes differ");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const ConservedState u = to_conserved(sample(exact, grid.center(static_cast<int>(i)) / t));
    err += std::abs(field.rho[i] - u.rho) + std::abs(field.momentum[i] - u.momentum);
  }
  return err * grid.dx();
}

ConservationDefect conservation_defect(const FieldState& field, const Grid1D& grid) {
  const ConservationAudit& a = field.audit;
  const double mass = field.total_mass(grid);
  const double mom = field.total_momentum(grid);
  const double expected_mass = a.initial_mass + a.boundary_mass_inflow + a.floor_mass_added;
  const double expected_mom =
      a.initial_momentum + a.boundary_momentum_inflow + a.floor_momentum_added;
  const double mass_scale = std::max({std::abs(a.initial_mass), abs_sum(field.rho) * grid.dx(),
                                      1e-300});
  const double mom_scale = std::max(
      {std::abs(a.initial_momentum), abs_sum(field.momentum) * grid.dx(), 1e-300});
  return {std::abs(mass - expected_mass) / mass_scale,
          std::abs(mom - expected_mom) / mom_scale};
}

}  // namespace isoriemann
