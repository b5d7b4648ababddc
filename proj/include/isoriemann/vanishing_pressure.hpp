#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoriemann/exact_riemann.hpp"

// Critical pressure coefficients at which a mixed shock/rarefaction
// solution loses its second wave, and kappa sweeps toward zero pressure.

namespace isoriemann {

enum class CriticalKind {
  SR,  // 1-shock + 2-rarefaction data (v- > v+, rho+ > rho-)
  RS,  // 1-rarefaction + 2-shock data (v- < v+, rho- > rho+)
};

struct CriticalKappa {
  double value;
  CriticalKind kind;
  RiemannProblem problem;
  double gamma;
};

/// rho- rho+ (v- - v+)^2 / ((rho+^g - rho-^g)(rho+ - rho-)).
/// Throws RegimeError unless v- > v+ and rho+ > rho-.
double kappa_sr(const RiemannProblem& problem, double gamma);

/// ((v+ - v-)(g - 1) / (2 sqrt(g) (rho-^((g-1)/2) - rho+^((g-1)/2))))^2.
/// Throws RegimeError unless v- < v+ and rho- > rho+.
double kappa_rs(const RiemannProblem& problem, double gamma);

/// The critical coefficient of whichever mixed regime the data belong to,
/// or nothing when the data admit no pattern switch.
std::optional<CriticalKappa> critical_kappa(const RiemannProblem& problem, double gamma);

/// Wave pattern as a function of kappa. For data with a critical
/// coefficient the answer follows from comparing kappa with it; a kappa
/// within 1e-9 relative of the critical value defers to classify().
WavePattern regime(const RiemannProblem& problem, double gamma, double kappa);

struct SweepRecord {
  double kappa = 0.0;
  WavePattern pattern = WavePattern::Constant;
  std::optional<double> rho_star;  // 0 in the vacuum pattern
  std::optional<double> v_star;    // absent in the vacuum pattern
  bool vacuum = false;
  std::optional<double> max_density;  // attached by finite-volume sweeps
  std::optional<std::string> error;
};

/// One exact solve per kappa. Solver failures are recorded in the record and
/// do not stop the sweep. Throws DomainError unless the schedule is
/// positive and strictly decreasing.
std::vector<SweepRecord> sweep(const RiemannProblem& problem, double gamma,
                               std::span<const double> kappa_schedule);

/// kappa0 * ratio^n for n = 0, 1, ... while the value stays >= kappa_min.
std::vector<double> geometric_schedule(double kappa0, double ratio = 0.5,
                                       double kappa_min = 1e-4);

void validate_schedule(std::span<const double> kappa_schedule);

}  // namespace isoriemann
