#include "isoriemann/exact_riemann.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "isoriemann/errors.hpp"
#include "isoriemann/wave_curves.hpp"

namespace isoriemann {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr std::array<std::pair<WavePattern, std::string_view>, 10> kPatternNames{{
    {WavePattern::Constant, "Constant"},
    {WavePattern::TwoShock, "TwoShock"},
    {WavePattern::TwoRarefaction, "TwoRarefaction"},
    {WavePattern::ShockRarefaction, "ShockRarefaction"},
    {WavePattern::RarefactionShock, "RarefactionShock"},
    {WavePattern::VacuumTwoRarefaction, "VacuumTwoRarefaction"},
    {WavePattern::Shock1Only, "Shock1Only"},
    {WavePattern::Shock2Only, "Shock2Only"},
    {WavePattern::Rarefaction1Only, "Rarefaction1Only"},
    {WavePattern::Rarefaction2Only, "Rarefaction2Only"},
}};

double curve_gap(const PolytropicEos& eos, const RiemannProblem& p, double rho) {
  return left_curve_v(eos, p.left, rho) - right_curve_v(eos, p.right, rho);
}

double curve_gap_slope(const PolytropicEos& eos, const RiemannProblem& p, double rho) {
  return left_curve_dv(eos, p.left, rho) - right_curve_dv(eos, p.right, rho);
}

// Rounding floor of curve_gap near the junction densities. Equality ties
// within it are classified as degenerate one-wave patterns.
double tie_tolerance(const PolytropicEos& eos, const RiemannProblem& p) {
  const double fan = 2.0 / (eos.gamma() - 1.0);
  const double scale = std::max({velocity_scale(p), fan * sound_speed(eos, p.left.rho),
                                 fan * sound_speed(eos, p.right.rho)});
  return 64.0 * kEps * scale;
}

struct Classification {
  WavePattern pattern;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

Classification classify_with_bracket(const PolytropicEos& eos, const RiemannProblem& p) {
  p.validate();
  if (p.left == p.right) return {WavePattern::Constant};
  if (vacuum_check(eos, p)) return {WavePattern::VacuumTwoRarefaction};

  const double rho_lo = std::min(p.left.rho, p.right.rho);
  const double rho_hi = std::max(p.left.rho, p.right.rho);
  const double gap_lo = curve_gap(eos, p, rho_lo);
  const double gap_hi = curve_gap(eos, p, rho_hi);
  const bool left_denser = p.left.rho > p.right.rho;

  if (rho_lo != rho_hi) {
    const double tie = tie_tolerance(eos, p);
    if (std::abs(gap_lo) <= tie) {
      // star equals the lighter anchor; only the wave of the denser side remains
      return {left_denser ? WavePattern::Rarefaction1Only : WavePattern::Rarefaction2Only,
              rho_lo, rho_lo};
    }
    if (std::abs(gap_hi) <= tie) {
      return {left_denser ? WavePattern::Shock2Only : WavePattern::Shock1Only, rho_hi, rho_hi};
    }
  }
  if (gap_lo < 0.0) return {WavePattern::TwoRarefaction, 0.0, rho_lo};
  if (gap_hi > 0.0) return {WavePattern::TwoShock, rho_hi, rho_hi};
  return {left_denser ? WavePattern::RarefactionShock : WavePattern::ShockRarefaction, rho_lo,
          rho_hi};
}

double find_star_density(const PolytropicEos& eos, const RiemannProblem& p,
                         const Classification& c, const SolverOptions& opt) {
  const double scale = velocity_scale(p);
  const double target = opt.tol * scale;
  double lo = c.bracket_lo;
  double hi = c.bracket_hi;
  double x = 0.5 * (lo + hi);

  if (c.pattern == WavePattern::TwoShock) {
    hi = 2.0 * lo;
    int expansions = 0;
    while (curve_gap(eos, p, hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (++expansions > 1000 || !std::isfinite(hi)) {
        throw NumericalError("could not bracket the intermediate density");
      }
    }
    x = 0.5 * (lo + hi);
  } else if (c.pattern == WavePattern::TwoRarefaction) {
    // Both fans: 2 c*/(gamma-1) = (phi1(left) - phi2(right)) / 2 in closed form.
    const double half_gap = 0.5 * (riemann_invariants(eos, p.left).phi1 -
                                   riemann_invariants(eos, p.right).phi2);
    const double c_star = 0.5 * (eos.gamma() - 1.0) * half_gap;
    const double guess =
        std::pow(c_star * c_star / (eos.gamma() * eos.kappa()), 1.0 / (eos.gamma() - 1.0));
    if (guess > lo && guess < hi) x = guess;
  }

  for (int it = 0; it < opt.max_iterations; ++it) {
    const double gap = curve_gap(eos, p, x);
    if (gap == 0.0) return x;
    if (gap > 0.0) {
      lo = x;
    } else {
      hi = x;
    }

    const double slope = curve_gap_slope(eos, p, x);
    double next = x - gap / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);

    const bool small_step = std::abs(next - x) <= opt.density_tol;
    const bool collapsed = hi - lo <= 4.0 * kEps * hi;
    if (std::abs(gap) <= target && (small_step || std::abs(gap) <= 1e-3 * target)) return x;
    if (collapsed) break;
    x = next;
  }
  if (std::abs(curve_gap(eos, p, x)) < target) return x;
  throw NumericalError("intermediate-state iteration did not converge (rho* ~ " +
                       std::to_string(x) + ")");
}

std::vector<Wave> waves_for(const PolytropicEos& eos, const RiemannProblem& p,
                            const GasState& star) {
  std::vector<Wave> waves;
  if (star.rho > p.left.rho) {
    const double s = shock1_speed(eos, p.left, star.rho);
    waves.push_back({1, WaveKind::Shock, s, s});
  } else if (star.rho < p.left.rho) {
    waves.push_back({1, WaveKind::Rarefaction, eigenvalues(eos, p.left).lambda1,
                     eigenvalues(eos, star).lambda1});
  }
  if (star.rho > p.right.rho) {
    const double s = shock2_speed(eos, p.right, star.rho);
    waves.push_back({2, WaveKind::Shock, s, s});
  } else if (star.rho < p.right.rho) {
    waves.push_back({2, WaveKind::Rarefaction, eigenvalues(eos, star).lambda2,
                     eigenvalues(eos, p.right).lambda2});
  }
  return waves;
}

// Interior of a centered fan; density from c^2 = gamma kappa rho^(gamma-1).
GasState fan_state(const PolytropicEos& eos, double c, double v) {
  c = std::max(c, 0.0);
  const double rho =
      std::pow(c * c / (eos.gamma() * eos.kappa()), 1.0 / (eos.gamma() - 1.0));
  return {rho, rho > 0.0 ? v : 0.0};
}

GasState sample_fan1(const PolytropicEos& eos, const GasState& left, double xi) {
  const double g = eos.gamma();
  const double c = (g - 1.0) * (riemann_invariants(eos, left).phi1 - xi) / (g + 1.0);
  return fan_state(eos, c, xi + c);
}

GasState sample_fan2(const PolytropicEos& eos, const GasState& right, double xi) {
  const double g = eos.gamma();
  const double c = (g - 1.0) * (xi - riemann_invariants(eos, right).phi2) / (g + 1.0);
  return fan_state(eos, c, xi - c);
}

}  // namespace

void RiemannProblem::validate() const {
  for (const GasState* s : {&left, &right}) {
    if (!(s->rho > 0.0) || !std::isfinite(s->rho) || !std::isfinite(s->v)) {
      throw DomainError("Riemann data need finite states with positive density");
    }
  }
}

std::string_view to_string(WavePattern pattern) noexcept {
  for (const auto& [p, name] : kPatternNames) {
    if (p == pattern) return name;
  }
  return "Unknown";
}

WavePattern pattern_from_string(std::string_view name) {
  for (const auto& [p, n] : kPatternNames) {
    if (n == name) return p;
  }
  throw DomainError("unknown wave pattern '" + std::string(name) + "'");
}

ExactSolution::ExactSolution(RiemannProblem problem, PolytropicEos eos, WavePattern pattern,
                             std::optional<GasState> star, std::vector<Wave> waves)
    : problem_(problem), eos_(eos), pattern_(pattern), star_(star), waves_(std::move(waves)) {}

double velocity_scale(const RiemannProblem& problem) noexcept {
  return std::max({1.0, std::abs(problem.left.v), std::abs(problem.right.v)});
}

bool vacuum_check(const PolytropicEos& eos, const RiemannProblem& problem) {
  problem.validate();
  const double fans = 2.0 / (eos.gamma() - 1.0) *
                      (sound_speed(eos, problem.left.rho) + sound_speed(eos, problem.right.rho));
  return problem.right.v - problem.left.v >= fans;
}

WavePattern classify(const PolytropicEos& eos, const RiemannProblem& problem) {
  return classify_with_bracket(eos, problem).pattern;
}

ExactSolution solve(const PolytropicEos& eos, const RiemannProblem& problem,
                    const SolverOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("solver tolerance must be positive");
  const Classification c = classify_with_bracket(eos, problem);
  const GasState& l = problem.left;
  const GasState& r = problem.right;

  switch (c.pattern) {
    case WavePattern::Constant:
      return ExactSolution(problem, eos, c.pattern, l, {});
    case WavePattern::VacuumTwoRarefaction: {
      const double fan = 2.0 / (eos.gamma() - 1.0);
      std::vector<Wave> waves{
          {1, WaveKind::Rarefaction, eigenvalues(eos, l).lambda1,
           l.v + fan * sound_speed(eos, l.rho)},
          {2, WaveKind::Rarefaction, r.v - fan * sound_speed(eos, r.rho),
           eigenvalues(eos, r).lambda2},
      };
      return ExactSolution(problem, eos, c.pattern, std::nullopt, std::move(waves));
    }
    case WavePattern::Shock1Only:
    case WavePattern::Rarefaction1Only:
      return ExactSolution(problem, eos, c.pattern, r, waves_for(eos, problem, r));
    case WavePattern::Shock2Only:
    case WavePattern::Rarefaction2Only:
      return ExactSolution(problem, eos, c.pattern, l, waves_for(eos, problem, l));
    default:
      break;
  }

  const double rho_star = find_star_density(eos, problem, c, options);
  const double v_star =
      0.5 * (left_curve_v(eos, l, rho_star) + right_curve_v(eos, r, rho_star));
  const GasState star{rho_star, v_star};
  return ExactSolution(problem, eos, c.pattern, star, waves_for(eos, problem, star));
}

GasState sample(const ExactSolution& solution, double xi) {
  const PolytropicEos& eos = solution.eos();
  const GasState& l = solution.problem().left;
  const GasState& r = solution.problem().right;

  if (solution.pattern() == WavePattern::VacuumTwoRarefaction) {
    const Wave& w1 = solution.waves()[0];
    const Wave& w2 = solution.waves()[1];
    if (xi <= w1.speed_lo) return l;
    if (xi < w1.speed_hi) return sample_fan1(eos, l, xi);
    if (xi < w2.speed_lo) return {0.0, 0.0};
    if (xi < w2.speed_hi) return sample_fan2(eos, r, xi);
    return r;
  }

  const GasState star = *solution.star();
  for (const Wave& w : solution.waves()) {
    if (w.family == 1) {
      if (w.kind == WaveKind::Shock) {
        if (xi < w.speed_lo) return l;
      } else {
        if (xi <= w.speed_lo) return l;
        if (xi < w.speed_hi) return sample_fan1(eos, l, xi);
      }
    } else {
      if (w.kind == WaveKind::Shock) {
        return xi < w.speed_lo ? star : r;
      }
      if (xi <= w.speed_lo) return star;
      if (xi < w.speed_hi) return sample_fan2(eos, r, xi);
      return r;
    }
  }
  return star;
}

}  // namespace isoriemann
