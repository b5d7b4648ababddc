#pragma once

#include <optional>
#include <vector>

#include "isoriemann/errors.hpp"
#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/gas_model.hpp"

// First-order conservative finite-volume solver for the isentropic Euler
// system with the diffusion-scaled Lax-Friedrichs flux
//
//   F_{i+1/2} = (f(u_i) + f(u_{i+1}))/2 - (theta/2)(dx/dt)(u_{i+1} - u_i),
//
// theta = 1 being classical Lax-Friedrichs.

namespace isoriemann {

/// Uniform cell-centered mesh on [x_min, x_max].
class Grid1D {
 public:
  /// Throws ConfigError unless x_min < x_max and nx >= 4.
  Grid1D(double x_min, double x_max, int nx);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int nx() const noexcept { return nx_; }
  double dx() const noexcept { return dx_; }
  double center(int i) const noexcept { return x_min_ + (i + 0.5) * dx_; }
  std::vector<double> centers() const;

 private:
  double x_min_;
  double x_max_;
  int nx_;
  double dx_;
};

/// Running bookkeeping of everything that changes the discrete totals.
/// All quantities are integrated in time and multiplied by dx where needed,
/// so total(t) = total(0) + boundary_inflow + floor_added.
struct ConservationAudit {
  double initial_mass = 0.0;
  double initial_momentum = 0.0;
  double boundary_mass_inflow = 0.0;
  double boundary_momentum_inflow = 0.0;
  double floor_mass_added = 0.0;
  double floor_momentum_added = 0.0;
  long steps = 0;
};

struct FieldState {
  double time = 0.0;
  std::vector<double> rho;
  std::vector<double> momentum;
  ConservationAudit audit;

  std::size_t size() const noexcept { return rho.size(); }
  double total_mass(const Grid1D& grid) const;
  double total_momentum(const Grid1D& grid) const;
  std::vector<double> velocity(double vacuum_floor = kDefaultVacuumFloor) const;
};

enum class Boundary { Outflow };

struct SchemeConfig {
  /// Exactly one of dt and cfl is set. cfl is the Courant number
  /// dt max|lambda| / dx used to pick each step.
  std::optional<double> dt;
  std::optional<double> cfl = 0.4;
  double theta = 1.0;
  double vacuum_floor = kDefaultVacuumFloor;
  Boundary boundary = Boundary::Outflow;

  static SchemeConfig fixed_dt(double dt, double theta = 1.0);
  static SchemeConfig courant(double cfl, double theta = 1.0);

  /// Throws ConfigError on inconsistent settings.
  void validate() const;
};

enum class StepFailure { Cfl, Blowup };

/// A rejected time step; carries the simulation time at which it happened.
class StepError : public NumericalError {
 public:
  StepError(StepFailure kind, double time, const std::string& what);
  StepFailure kind() const noexcept { return kind_; }
  double time() const noexcept { return time_; }

 private:
  StepFailure kind_;
  double time_;
};

/// Cell averages of the Riemann data. x = 0 must be a cell edge.
FieldState init(const Grid1D& grid, const RiemannProblem& problem, const PolytropicEos& eos);

/// Largest |v| + c over the field.
double max_wave_speed(const FieldState& field, const PolytropicEos& eos,
                      double vacuum_floor = kDefaultVacuumFloor);

/// Time step chosen by the config: its fixed dt, or cfl dx / max|lambda|.
double choose_dt(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                 const SchemeConfig& config);

/// One explicit update with the given dt. Throws StepError if
/// dt max|lambda| / dx > theta or the update produces non-finite values.
FieldState step(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                const SchemeConfig& config, double dt);

FieldState step(const FieldState& field, const Grid1D& grid, const PolytropicEos& eos,
                const SchemeConfig& config);

/// Advances the Riemann data to exactly t_final (the last step is shortened).
FieldState run(const Grid1D& grid, const RiemannProblem& problem, const PolytropicEos& eos,
               const SchemeConfig& config, double t_final);

/// Exact solution sampled at the cell centers at time t > 0.
FieldState sample_field(const Grid1D& grid, const ExactSolution& exact, double t);

/// sum_i (|rho_i - rho(x_i/t)| + |m_i - m(x_i/t)|) dx.
double l1_error(const FieldState& field, const Grid1D& grid, const ExactSolution& exact,
                double t);

/// Relative mismatch of the mass and momentum totals against the audit.
struct ConservationDefect {
  double mass;
  double momentum;
};
ConservationDefect conservation_defect(const FieldState& field, const Grid1D& grid);

}  // namespace isoriemann
