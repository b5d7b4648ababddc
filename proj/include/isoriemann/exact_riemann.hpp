#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "isoriemann/gas_model.hpp"

namespace isoriemann {

/// Riemann data: left state for x < 0, right state for x > 0.
struct RiemannProblem {
  GasState left;
  GasState right;

  /// Throws DomainError unless both densities are finite and positive.
  void validate() const;

  friend bool operator==(const RiemannProblem&, const RiemannProblem&) = default;
};

/// Wave configuration of a Riemann solution.
///
/// The four generic configurations plus vacuum and the constant solution.
/// The *Only tags are the degenerate configurations where one wave has zero
/// strength, e.g. Shock1Only at kappa = kappa_sr.
enum class WavePattern {
  Constant,
  TwoShock,
  TwoRarefaction,
  ShockRarefaction,
  RarefactionShock,
  VacuumTwoRarefaction,
  Shock1Only,
  Shock2Only,
  Rarefaction1Only,
  Rarefaction2Only,
};

std::string_view to_string(WavePattern pattern) noexcept;
/// Throws DomainError for unknown names.
WavePattern pattern_from_string(std::string_view name);

enum class WaveKind { Shock, Rarefaction };

/// One elementary wave. Shocks have speed_lo == speed_hi; rarefactions span
/// [speed_lo, speed_hi] (head to tail for the 1-family, tail to head for the
/// 2-family). In the vacuum pattern the inner fan edges are the vacuum fronts.
struct Wave {
  int family;
  WaveKind kind;
  double speed_lo;
  double speed_hi;
};

class ExactSolution {
 public:
  ExactSolution(RiemannProblem problem, PolytropicEos eos, WavePattern pattern,
                std::optional<GasState> star, std::vector<Wave> waves);

  const RiemannProblem& problem() const noexcept { return problem_; }
  const PolytropicEos& eos() const noexcept { return eos_; }
  WavePattern pattern() const noexcept { return pattern_; }
  /// Absent in the vacuum pattern.
  const std::optional<GasState>& star() const noexcept { return star_; }
  /// Waves ordered left to right.
  const std::vector<Wave>& waves() const noexcept { return waves_; }

 private:
  RiemannProblem problem_;
  PolytropicEos eos_;
  WavePattern pattern_;
  std::optional<GasState> star_;
  std::vector<Wave> waves_;
};

/// True iff v+ - v- >= 2 (c- + c+) / (gamma - 1): the rarefaction curves do
/// not meet at positive density.
bool vacuum_check(const PolytropicEos& eos, const RiemannProblem& problem);

WavePattern classify(const PolytropicEos& eos, const RiemannProblem& problem);

struct SolverOptions {
  /// Curve residual bound, relative to max(1, |v-|, |v+|).
  double tol = 1e-12;
  double density_tol = 1e-12;
  int max_iterations = 200;
};

/// Intersects the left and right wave curves with a safeguarded Newton
/// iteration. Throws NumericalError if the residual bound is not reached.
ExactSolution solve(const PolytropicEos& eos, const RiemannProblem& problem,
                    const SolverOptions& options = {});

/// Self-similar solution at xi = x / t. A shock located exactly at xi
/// reports the state behind it (right of the jump). Vacuum is (0, 0).
GasState sample(const ExactSolution& solution, double xi);

/// Velocity scale used by the residual and tie tolerances.
double velocity_scale(const RiemannProblem& problem) noexcept;

}  // namespace isoriemann
