#include "isoriemann/vanishing_pressure.hpp"

#include <cmath>

#include "isoriemann/errors.hpp"

namespace isoriemann {

namespace {

void require_gamma(double gamma) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw DomainError("gamma must exceed 1");
}

bool is_sr_data(const RiemannProblem& p) {
  return p.left.v > p.right.v && p.right.rho > p.left.rho;
}

bool is_rs_data(const RiemannProblem& p) {
  return p.left.v < p.right.v && p.left.rho > p.right.rho;
}

}  // namespace

double kappa_sr(const RiemannProblem& problem, double gamma) {
  problem.validate();
  require_gamma(gamma);
  const double rl = problem.left.rho;
  const double rr = problem.right.rho;
  const double dv = problem.left.v - problem.right.v;
  if (!(dv > 0.0)) throw RegimeError("kappa_sr requires v- > v+");
  if (!(rr > rl)) throw RegimeError("kappa_sr requires rho+ > rho- (1-shock + 2-rarefaction)");
  return rl * rr * dv * dv / ((std::pow(rr, gamma) - std::pow(rl, gamma)) * (rr - rl));
}

double kappa_rs(const RiemannProblem& problem, double gamma) {
  problem.validate();
  require_gamma(gamma);
  const double rl = problem.left.rho;
  const double rr = problem.right.rho;
  const double dv = problem.right.v - problem.left.v;
  if (!(dv > 0.0)) throw RegimeError("kappa_rs requires v- < v+");
  if (!(rl > rr)) throw RegimeError("kappa_rs requires rho- > rho+ (1-rarefaction + 2-shock)");
  const double a = 0.5 * (gamma - 1.0);
  const double root =
      dv * (gamma - 1.0) / (2.0 * std::sqrt(gamma) * (std::pow(rl, a) - std::pow(rr, a)));
  return root * root;
}

std::optional<CriticalKappa> critical_kappa(const RiemannProblem& problem, double gamma) {
  if (is_sr_data(problem)) {
    return CriticalKappa{kappa_sr(problem, gamma), CriticalKind::SR, problem, gamma};
  }
  if (is_rs_data(problem)) {
    return CriticalKappa{kappa_rs(problem, gamma), CriticalKind::RS, problem, gamma};
  }
  return std::nullopt;
}

WavePattern regime(const RiemannProblem& problem, double gamma, double kappa) {
  const PolytropicEos eos(kappa, gamma);
  problem.validate();
  const auto critical = critical_kappa(problem, gamma);
  if (!critical || std::abs(kappa - critical->value) <= 1e-9 * critical->value) {
    return classify(eos, problem);
  }
  if (critical->kind == CriticalKind::SR) {
    return kappa > critical->value ? WavePattern::ShockRarefaction : WavePattern::TwoShock;
  }
  if (kappa > critical->value) return WavePattern::RarefactionShock;
  // Below kappa_rs the 2-shock has turned into a rarefaction; small enough
  // kappa opens a vacuum between the fans.
  return vacuum_check(eos, problem) ? WavePattern::VacuumTwoRarefaction
                                    : WavePattern::TwoRarefaction;
}

void validate_schedule(std::span<const double> kappa_schedule) {
  if (kappa_schedule.empty()) throw DomainError("kappa schedule is empty");
  for (std::size_t i = 0; i < kappa_schedule.size(); ++i) {
    const double k = kappa_schedule[i];
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("kappa schedule must be positive");
    if (i > 0 && !(k < kappa_schedule[i - 1])) {
      throw DomainError("kappa schedule must be strictly decreasing");
    }
  }
}

std::vector<SweepRecord> sweep(const RiemannProblem& problem, double gamma,
                               std::span<const double> kappa_schedule) {
  validate_schedule(kappa_schedule);
  problem.validate();
  require_gamma(gamma);

  std::vector<SweepRecord> records;
  records.reserve(kappa_schedule.size());
  for (const double kappa : kappa_schedule) {
    SweepRecord rec;
    rec.kappa = kappa;
    try {
      const ExactSolution sol = solve(PolytropicEos(kappa, gamma), problem);
      rec.pattern = sol.pattern();
      rec.vacuum = sol.pattern() == WavePattern::VacuumTwoRarefaction;
      if (sol.star()) {
        rec.rho_star = sol.star()->rho;
        rec.v_star = sol.star()->v;
      } else {
        rec.rho_star = 0.0;
      }
    } catch (const Error& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<double> geometric_schedule(double kappa0, double ratio, double kappa_min) {
  if (!(kappa0 > 0.0) || !(kappa_min > 0.0) || !(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("geometric schedule needs kappa0, kappa_min > 0 and 0 < ratio < 1");
  }
  std::vector<double> schedule;
  for (int n = 0;; ++n) {
    const double k = kappa0 * std::pow(ratio, n);
    if (k < kappa_min) break;
    schedule.push_back(k);
  }
  return schedule;
}

}  // namespace isoriemann
