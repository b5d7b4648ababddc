// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass). Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/fv_solver.hpp"
#include "isoriemann/pressureless.hpp"
#include "isoriemann/vanishing_pressure.hpp"
#include "isoriemann/wave_curves.hpp"
#include "oracles.hpp"

using namespace isoriemann;

namespace {

// Criterion 1
constexpr double kSrTarget = 0.1395, kRsTarget = 0.0682, kCritTol = 5e-4;
// Criterion 2
constexpr double kBoundaryTol = 1e-8, kFlip = 1e-6;
// Criterion 3
constexpr double kRootRelTol = 1e-8;
constexpr int kRootCases = 20;
// Criterion 4
constexpr int kPropertyCases = 500;
constexpr double kResidualTol = 1e-10, kInvariantTol = 1e-10;
// Criterion 5
constexpr double kMinOrder = 0.5, kConservationTol = 1e-10;
// Criterion 6
constexpr double kVacuumMinDensity = 0.05, kWaveCells = 5.0;
// Criterion 7
constexpr double kSigmaTol = 0.05, kBalanceTol = 1e-12, kDeltaHalfWidth = 0.1;
// Criterion 8
constexpr int kPressurelessCases = 200;

constexpr double kGamma = 1.4, kT = 0.63;
const RiemannProblem kData1{{1.0, 0.8}, {0.5, 1.0}};
const RiemannProblem kData2{{0.2, 1.5}, {0.7, 1.0}};

// Figure runs: classical Lax-Friedrichs (theta = 1) at Courant number 0.9.
SchemeConfig figure_scheme() { return SchemeConfig::courant(0.9, 1.0); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// ---------------------------------------------------------------- 1
void critical_coefficients(Outcome& o) {
  const double ksr = kappa_sr(kData2, kGamma);
  const double krs = kappa_rs(kData1, kGamma);
  o.detail << "kappa_sr=" << fmt(ksr) << " kappa_rs=" << fmt(krs);
  o.require(std::abs(ksr - kSrTarget) <= kCritTol, "kappa_sr");
  o.require(std::abs(krs - kRsTarget) <= kCritTol, "kappa_rs");
}

// ---------------------------------------------------------------- 2
void boundary_behaviour(Outcome& o) {
  struct Case {
    const RiemannProblem& p;
    double kappa;
    WavePattern below, above;
  };
  const Case cases[] = {
      {kData2, kappa_sr(kData2, kGamma), WavePattern::TwoShock, WavePattern::ShockRarefaction},
      {kData1, kappa_rs(kData1, kGamma), WavePattern::TwoRarefaction, WavePattern::RarefactionShock}};
  for (const Case& c : cases) {
    const auto sol = solve(PolytropicEos(c.kappa, kGamma), c.p);
    const double dr = std::abs(sol.star()->rho - c.p.right.rho);
    const double dv = std::abs(sol.star()->v - c.p.right.v);
    o.detail << to_string(sol.pattern()) << " |rho*-rho+|=" << fmt(dr) << " |v*-v+|=" << fmt(dv)
             << "; ";
    o.require(dr <= kBoundaryTol && dv <= kBoundaryTol, "star equals right state");
    const auto lo = classify(PolytropicEos(c.kappa * (1 - kFlip), kGamma), c.p);
    const auto hi = classify(PolytropicEos(c.kappa * (1 + kFlip), kGamma), c.p);
    o.require(lo == c.below, "pattern below");
    o.require(hi == c.above, "pattern above");
  }
}

// ---------------------------------------------------------------- 3
void formula_oracle(Outcome& o) {
  gen::Rng rng(2024);
  const double gammas[] = {1.2, 1.4, 2.0, 3.0};
  double worst = 0.0;
  for (int i = 0; i < kRootCases; ++i) {
    const double g = gammas[i % 4];
    const bool sr = i % 2 == 0;
    const RiemannProblem p = sr ? rng.sr_problem() : rng.rs_problem();
    const double closed = sr ? kappa_sr(p, g) : kappa_rs(p, g);
    const double root =
        oracle::kappa_by_root(p, g, sr ? oracle::Degeneracy::SR : oracle::Degeneracy::RS);
    worst = std::max(worst, std::abs(root / closed - 1.0));
  }
  o.detail << kRootCases << " cases, max relative difference " << fmt(worst);
  o.require(worst <= kRootRelTol, "relative agreement");
}

// ---------------------------------------------------------------- 4
void exact_properties(Outcome& o) {
  gen::Rng rng(4004);
  double worst_residual = 0.0, worst_invariant = 0.0;
  int lax_failures = 0, order_failures = 0, lemma_failures = 0, lemma_cases = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const double g = rng.gamma();
    RiemannProblem p;
    double kappa;
    int lemma = 0;  // 1: v- > v* > v+ expected, 2: v- < v* < v+
    switch (i % 3) {
      case 0:
        p = rng.problem();
        kappa = rng.kappa();
        break;
      case 1:
        p = rng.sr_problem();
        kappa = kappa_sr(p, g) * rng.uniform(0.001, 0.999);
        lemma = 1;
        break;
      default:
        p = rng.rs_problem();
        kappa = kappa_rs(p, g) * rng.uniform(0.001, 0.999);
        lemma = 2;
        break;
    }
    const PolytropicEos eos(kappa, g);
    const auto sol = solve(eos, p);
    const double scale = velocity_scale(p);

    if (sol.star()) {
      const double r = sol.star()->rho;
      worst_residual = std::max(
          worst_residual,
          std::abs(left_curve_v(eos, p.left, r) - right_curve_v(eos, p.right, r)) / scale);
    }
    double prev = -INFINITY;
    for (const Wave& w : sol.waves()) {
      if (!(prev <= w.speed_lo && w.speed_lo <= w.speed_hi)) ++order_failures;
      prev = w.speed_hi;
      const GasState& outer = w.family == 1 ? p.left : p.right;
      if (w.kind == WaveKind::Shock) {
        const auto ls = eigenvalues(eos, *sol.star());
        const auto lo = eigenvalues(eos, outer);
        const double s = w.speed_lo;
        const bool ok = w.family == 1 ? (ls.lambda1 < s && s < lo.lambda1 && s < ls.lambda2)
                                      : (lo.lambda2 < s && s < ls.lambda2 && ls.lambda1 < s);
        if (!ok) ++lax_failures;
      } else {
        const auto r0 = riemann_invariants(eos, outer);
        const double iscale = std::max(1.0, std::abs(r0.phi1) + std::abs(r0.phi2));
        for (int k = 0; k <= 8; ++k) {
          const double xi = w.speed_lo + (w.speed_hi - w.speed_lo) * k / 8.0;
          const GasState u = sample(sol, xi);
          if (u.rho == 0.0) continue;  // vacuum velocity is a convention
          const auto r = riemann_invariants(eos, u);
          const double d = w.family == 1 ? r.phi1 - r0.phi1 : r.phi2 - r0.phi2;
          worst_invariant = std::max(worst_invariant, std::abs(d) / iscale);
        }
      }
    }
    if (lemma != 0 && sol.star()) {
      ++lemma_cases;
      const double vs = sol.star()->v;
      const bool ok = lemma == 1 ? (p.left.v > vs && vs > p.right.v)
                                 : (p.left.v < vs && vs < p.right.v);
      if (!ok) ++lemma_failures;
    }
  }
  o.detail << kPropertyCases << " problems: residual " << fmt(worst_residual) << ", invariant drift "
           << fmt(worst_invariant) << ", Lax failures " << lax_failures << ", order failures "
           << order_failures << ", lemma failures " << lemma_failures << "/" << lemma_cases;
  o.require(worst_residual < kResidualTol, "curve residual");
  o.require(worst_invariant < kInvariantTol, "invariants");
  o.require(lax_failures == 0, "Lax");
  o.require(order_failures == 0, "speed order");
  o.require(lemma_failures == 0, "lemma ordering");
}

// ---------------------------------------------------------------- 5
void fv_convergence(Outcome& o) {
  // The 2-shock travels to x = 1.21 by t = 0.63, so the domain extends to 2.
  const PolytropicEos eos(0.6, kGamma);
  const auto exact = solve(eos, kData1);
  std::vector<double> errors;
  double worst_defect = 0.0;
  for (const double dx : {4e-3, 2e-3, 1e-3}) {
    const Grid1D grid(-1.0, 2.0, static_cast<int>(std::lround(3.0 / dx)));
    const auto f = run(grid, kData1, eos, SchemeConfig{}, kT);
    errors.push_back(l1_error(f, grid, exact, kT));
    const auto d = conservation_defect(f, grid);
    worst_defect = std::max({worst_defect, d.mass, d.momentum});
  }
  o.detail << "L1 " << fmt(errors[0]) << ", " << fmt(errors[1]) << ", " << fmt(errors[2]);
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double order = std::log2(errors[i - 1] / errors[i]);
    o.detail << " order " << fmt(order);
    o.require(order >= kMinOrder, "order");
  }
  o.detail << "; conservation defect " << fmt(worst_defect);
  o.require(worst_defect <= kConservationTol, "conservation");
}

// Position of a jump from `left` to `right` density inside [a, b] such that
// the step function has the same mass as the cell data (equal-area rule).
double jump_position(const FieldState& f, const Grid1D& g, double a, double b, double left,
                     double right) {
  double mass = 0.0, lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < g.nx(); ++i) {
    const double x = g.center(i);
    if (x < a || x > b) continue;
    mass += f.rho[static_cast<std::size_t>(i)] * g.dx();
    lo = std::min(lo, x - 0.5 * g.dx());
    hi = std::max(hi, x + 0.5 * g.dx());
  }
  return lo + (mass - right * (hi - lo)) / (left - right);
}

// Fan edges from a least-squares line through c(x) over the middle half of
// the exact fan, extrapolated to the sound speeds on either side.
// Corner positions of a plateau-ramp-plateau fit to c(x) over the fan and a
// margin of half its width on each side. c_lo holds left of the first corner,
// c_hi right of the second; least squares by pattern search on both corners.
std::pair<double, double> fan_edges(const FieldState& f, const Grid1D& g,
                                    const PolytropicEos& eos, double x_lo, double x_hi,
                                    double c_lo, double c_hi) {
  const double margin = 0.5 * (x_hi - x_lo);
  std::vector<double> xs, cs;
  for (int i = 0; i < g.nx(); ++i) {
    const double x = g.center(i);
    if (x < x_lo - margin || x > x_hi + margin) continue;
    xs.push_back(x);
    cs.push_back(sound_speed(eos, std::max(f.rho[static_cast<std::size_t>(i)], 0.0)));
  }
  auto misfit = [&](double a, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double m = xs[i] <= a   ? c_lo
                       : xs[i] >= b ? c_hi
                                    : c_lo + (c_hi - c_lo) * (xs[i] - a) / (b - a);
      s += (cs[i] - m) * (cs[i] - m);
    }
    return s;
  };
  double a = x_lo, b = x_hi, best = misfit(a, b);
  for (double step = 8.0 * g.dx(); step > 1e-3 * g.dx(); step *= 0.5) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
          const double ta = a + da * step, tb = b + db * step;
          if (!(tb > ta)) continue;
          const double m = misfit(ta, tb);
          if (m < best) {
            best = m;
            a = ta;
            b = tb;
            moved = true;
          }
        }
      }
    }
  }
  return {a, b};
}

// Largest distance between a measured and an exact wave position, in cells.
// Fans narrower than 20 cells carry no measurable edge and are skipped.
double wave_position_error(const FieldState& f, const Grid1D& g, const ExactSolution& sol,
                           std::ostringstream& log) {
  const auto& p = sol.problem();
  const auto& eos = sol.eos();
  double worst = 0.0;
  const auto& waves = sol.waves();
  for (std::size_t k = 0; k < waves.size(); ++k) {
    const Wave& w = waves[k];
    const double lo = w.speed_lo * kT, hi = w.speed_hi * kT;
    const GasState& outer = w.family == 1 ? p.left : p.right;
    const double inner_rho = sol.star() ? sol.star()->rho : 0.0;
    if (w.kind == WaveKind::Shock) {
      // window halfway to the neighbouring waves
      const double a = k > 0 ? 0.5 * (waves[k - 1].speed_hi * kT + lo) : lo - 0.1;
      const double b = k + 1 < waves.size() ? 0.5 * (hi + waves[k + 1].speed_lo * kT) : lo + 0.1;
      const double left = w.family == 1 ? outer.rho : inner_rho;
      const double right = w.family == 1 ? inner_rho : outer.rho;
      const double x = jump_position(f, g, a, b, left, right);
      worst = std::max(worst, std::abs(x - lo) / g.dx());
      log << " shock" << w.family << " " << fmt((x - lo) / g.dx());
    } else if (hi - lo >= 20.0 * g.dx()) {
      const double c_out = sound_speed(eos, outer.rho);
      const double c_in = sound_speed(eos, inner_rho);
      // the head of a 1-fan is its left edge, of a 2-fan its right edge
      const auto [x_left, x_right] = w.family == 1 ? fan_edges(f, g, eos, lo, hi, c_out, c_in)
                                                   : fan_edges(f, g, eos, lo, hi, c_in, c_out);
      const double d_head = (w.family == 1 ? x_left - lo : x_right - hi) / g.dx();
      const double d_tail = (w.family == 1 ? x_right - hi : x_left - lo) / g.dx();
      worst = std::max({worst, std::abs(d_head), std::abs(d_tail)});
      log << " fan" << w.family << " head " << fmt(d_head) << " tail " << fmt(d_tail);
    } else {
      log << " fan" << w.family << " unresolved";
    }
  }
  return worst;
}

// ---------------------------------------------------------------- 6
void vacuum_trend(Outcome& o) {
  const double kappas[] = {0.6, 0.068, 0.001};
  const double dx = 1e-3;
  double prev_min = INFINITY;
  for (const double k : kappas) {
    const PolytropicEos eos(k, kGamma);
    const auto sol = solve(eos, kData1);
    // Trend on the default domain [-1, 1], between the 1-wave tail and the 2-wave front.
    const Grid1D grid(-1.0, 1.0, 2000);
    const auto f = run(grid, kData1, eos, figure_scheme(), kT);
    const double a = sol.waves().front().speed_hi * kT;
    const double b = sol.waves().back().speed_lo * kT;
    double m = INFINITY;
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.center(i);
      if (x >= a && x <= b) m = std::min(m, f.rho[static_cast<std::size_t>(i)]);
    }
    o.detail << "kappa=" << k << " min=" << fmt(m) << ";";
    o.require(m < prev_min, "inter-fan minimum decreasing");
    prev_min = m;

    // Wave positions on [-1, 2], where every wave stays inside.
    const Grid1D wide(-1.0, 2.0, static_cast<int>(std::lround(3.0 / dx)));
    const auto fw = run(wide, kData1, eos, figure_scheme(), kT);
    std::ostringstream log;
    const double cells = wave_position_error(fw, wide, sol, log);
    o.detail << log.str() << ";";
    o.require(cells <= kWaveCells, "wave positions at kappa " + fmt(k));
  }
  o.require(prev_min < kVacuumMinDensity, "minimum below 0.05 at kappa 0.001");

  double prev = INFINITY;
  o.detail << " exact rho*:";
  for (const double k : {0.6, 0.1, 0.01, 0.001}) {
    const double r = solve(PolytropicEos(k, kGamma), kData1).star()->rho;
    o.detail << " " << fmt(r);
    o.require(r < prev, "exact rho* decreasing");
    prev = r;
  }
}

// ---------------------------------------------------------------- 7
void delta_trend(Outcome& o) {
  const Grid1D grid(-1.0, 1.0, 2000);
  double prev_max = -INFINITY;
  for (const double k : {0.6, 0.14, 0.001}) {
    const auto f = run(grid, kData2, PolytropicEos(k, kGamma), figure_scheme(), kT);
    const double m = *std::max_element(f.rho.begin(), f.rho.end());
    o.detail << "kappa=" << k << " max=" << fmt(m) << ";";
    o.require(m > prev_max, "maximum density increasing");
    prev_max = m;
  }

  const auto delta = solve_pressureless(kData2).delta;
  const double sigma = delta->sigma;
  double diag[2];
  int j = 0;
  for (const double k : {0.1, 0.001}) {
    const auto f = run(grid, kData2, PolytropicEos(k, kGamma), figure_scheme(), kT);
    diag[j++] = delta_diagnostic(f, grid, kDeltaHalfWidth, sigma * kT);
  }
  o.detail << " window mass " << fmt(diag[0]) << " -> " << fmt(diag[1]) << ";";
  o.require(diag[1] > diag[0], "window mass grows");

  const auto sol = solve(PolytropicEos(1e-4, kGamma), kData2);
  const double s1 = sol.waves()[0].speed_lo, s2 = sol.waves()[1].speed_lo;
  o.detail << " shocks " << fmt(s1) << ", " << fmt(s2) << " sigma " << fmt(sigma) << ";";
  o.require(sol.pattern() == WavePattern::TwoShock, "two shocks at kappa 1e-4");
  o.require(s1 < sigma && sigma < s2, "bracket");
  o.require(std::abs(s1 - sigma) <= kSigmaTol && std::abs(s2 - sigma) <= kSigmaTol, "closeness");
  const auto bal = oracle::delta_box_balance(kData2, sigma, delta->weight_rate);
  o.detail << " balance " << fmt(std::max(bal[0], bal[1]));
  o.require(bal[0] <= kBalanceTol && bal[1] <= kBalanceTol, "balance identity");
}

// ---------------------------------------------------------------- 8
void pressureless_identities(Outcome& o) {
  gen::Rng rng(8008);
  double worst = 0.0;
  int order_failures = 0;
  for (int i = 0; i < kPressurelessCases; ++i) {
    double vl = rng.uniform(-3.0, 3.0), vr = rng.uniform(-3.0, 3.0);
    if (vl < vr) std::swap(vl, vr);
    if (vl == vr) vl += 0.1;
    const RiemannProblem p{{rng.log_uniform(1e-3, 10.0), vl}, {rng.log_uniform(1e-3, 10.0), vr}};
    const auto d = solve_pressureless(p).delta;
    const auto bal = oracle::delta_box_balance(p, d->sigma, d->weight_rate);
    worst = std::max({worst, bal[0], bal[1]});
    if (!(vr < d->sigma && d->sigma < vl)) ++order_failures;
  }
  o.detail << kPressurelessCases << " cases, balance " << fmt(worst) << ", ordering failures "
           << order_failures;
  o.require(worst <= kBalanceTol, "balance");
  o.require(order_failures == 0, "ordering");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"critical coefficients", critical_coefficients},
      {"boundary behaviour at critical kappa", boundary_behaviour},
      {"closed form vs root-finding", formula_oracle},
      {"exact-solver property suite", exact_properties},
      {"finite-volume convergence and conservation", fv_convergence},
      {"vacuum-formation trend", vacuum_trend},
      {"delta-shock-formation trend", delta_trend},
      {"pressureless identities", pressureless_identities},
  };
  int failures = 0, n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::printf("CRITERION %d %s: %s (%.2fs) %s\n", n, o.pass ? "PASS" : "FAIL", name, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", n - failures, n);
  return failures;
}
