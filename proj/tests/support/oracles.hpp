#pragma once

// Reference computations used to check the library. None of them calls into
// the wave-curve code: shocks come from the Hugoniot locus written as
// (v* - v0)^2 = (p* - p0)(rho* - rho0) / (rho* rho0), rarefactions from
// quadrature of dv = -+ c(rho)/rho drho, and intersections from bisection.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/pressureless.hpp"

namespace oracle {

using isoriemann::GasState;
using isoriemann::RiemannProblem;

struct Gas {
  double kappa;
  double gamma;

  double p(double rho) const { return kappa * std::pow(rho, gamma); }
  double c(double rho) const { return std::sqrt(gamma * kappa * std::pow(rho, gamma - 1.0)); }
};

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

// Velocity on the wave curve of the given family through `anchor`.
inline double shock_v(const Gas& g, const GasState& anchor, double rho, int family) {
  const double r0 = anchor.rho;
  const double jump = std::sqrt((g.p(rho) - g.p(r0)) * (rho - r0) / (rho * r0));
  return family == 1 ? anchor.v - jump : anchor.v + jump;
}

inline double rarefaction_v(const Gas& g, const GasState& anchor, double rho, int family) {
  // integral of c/rho from rho to anchor.rho, with rho = e^u
  const double integral =
      simpson([&](double u) { return g.c(std::exp(u)); }, std::log(rho), std::log(anchor.rho));
  return family == 1 ? anchor.v + integral : anchor.v - integral;
}

inline double curve_v(const Gas& g, const GasState& anchor, double rho, int family) {
  if (rho == anchor.rho) return anchor.v;
  return rho > anchor.rho ? shock_v(g, anchor, rho, family) : rarefaction_v(g, anchor, rho, family);
}

/// Intermediate state by bisection on the curve gap; nullopt when the
/// vacuum criterion holds (no positive-density intersection).
inline std::optional<GasState> star_state(const Gas& g, const RiemannProblem& p) {
  const double a = (g.gamma - 1.0) / 2.0;
  if (p.right.v - p.left.v >= (g.c(p.left.rho) + g.c(p.right.rho)) / a) return std::nullopt;
  auto gap = [&](double rho) {
    return curve_v(g, p.left, rho, 1) - curve_v(g, p.right, rho, 2);
  };
  double lo = std::min(p.left.rho, p.right.rho);
  while (gap(lo) < 0.0) lo *= 0.5;
  double hi = std::max(p.left.rho, p.right.rho);
  while (gap(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  const double rho = 0.5 * (lo + hi);
  return GasState{rho, 0.5 * (curve_v(g, p.left, rho, 1) + curve_v(g, p.right, rho, 2))};
}

enum class Degeneracy { SR, RS };

/// Critical coefficient located by bisection in log(kappa) on the sign of
/// v*(kappa) - v+, with v* taken from the library's exact solver. Below the
/// SR value v* > v+; below the RS value v* < v+ (or vacuum).
inline double kappa_by_root(const RiemannProblem& p, double gamma, Degeneracy kind) {
  auto sign = [&](double kappa) {
    const auto sol = isoriemann::solve(isoriemann::PolytropicEos(kappa, gamma), p);
    if (!sol.star()) return kind == Degeneracy::RS ? 1 : -1;
    const double g = sol.star()->v - p.right.v;
    if (g == 0.0) return 0;
    const int s = g > 0.0 ? 1 : -1;
    return kind == Degeneracy::SR ? s : -s;
  };
  double lo = 1.0, hi = 1.0;
  while (sign(lo) < 0) lo *= 0.5;
  while (sign(hi) > 0) hi *= 2.0;
  if (sign(lo) == 0) return lo;
  if (sign(hi) == 0) return hi;
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-15; ++it) {
    const double mid = std::sqrt(lo * hi);
    const int s = sign(mid);
    if (s == 0) return mid;
    (s > 0 ? lo : hi) = mid;
  }
  return std::sqrt(lo * hi);
}

/// Relative residual of the weak form of the isentropic system,
///   int int (U phi_t + F(U) phi_x) dx dt,
/// for phi(x, t) = bump((t - 1)/0.5) bump(x / 3), integrated in (xi, t)
/// with Gauss-Legendre rules split at the wave speeds. Returns the worse
/// of the mass and momentum residuals relative to the integral of |terms|.
inline double weak_form_residual(const isoriemann::ExactSolution& sol) {
  const Gas g{sol.eos().kappa(), sol.eos().gamma()};
  auto bump = [](double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; };
  auto dbump = [&](double s) {
    return std::abs(s) < 1.0 ? bump(s) * (-2.0 * s / ((1.0 - s * s) * (1.0 - s * s))) : 0.0;
  };
  const double xw = 3.0, t0 = 1.0, tw = 0.5;

  std::vector<double> breaks;
  for (const auto& w : sol.waves()) {
    breaks.push_back(w.speed_lo);
    breaks.push_back(w.speed_hi);
  }
  const auto [gx, gw] = gauss_legendre(24);

  std::array<double, 2> res{0.0, 0.0}, mag{0.0, 0.0};
  const int t_panels = 8, xi_panels = 6;
  for (int tp = 0; tp < t_panels; ++tp) {
    const double ta = t0 - tw + 2.0 * tw * tp / t_panels;
    const double tb = ta + 2.0 * tw / t_panels;
    for (std::size_t it = 0; it < gx.size(); ++it) {
      const double t = 0.5 * (ta + tb) + 0.5 * (tb - ta) * gx[it];
      const double wt = 0.5 * (tb - ta) * gw[it];
      const double st = (t - t0) / tw;
      const double psi = bump(st), dpsi = dbump(st) / tw;

      std::vector<double> cuts{-xw / t};
      for (const double b : breaks) {
        if (b > -xw / t && b < xw / t) cuts.push_back(b);
      }
      cuts.push_back(xw / t);
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        for (int xp = 0; xp < xi_panels; ++xp) {
          const double xa = cuts[k] + (cuts[k + 1] - cuts[k]) * xp / xi_panels;
          const double xb = cuts[k] + (cuts[k + 1] - cuts[k]) * (xp + 1) / xi_panels;
          if (!(xb > xa)) continue;
          for (std::size_t ix = 0; ix < gx.size(); ++ix) {
            const double xi = 0.5 * (xa + xb) + 0.5 * (xb - xa) * gx[ix];
            const double w = wt * 0.5 * (xb - xa) * gw[ix] * t;  // dx = t dxi
            const double x = xi * t;
            const double sx = x / xw;
            const double chi = bump(sx), dchi = dbump(sx) / xw;
            const double phi_t = dpsi * chi, phi_x = psi * dchi;
            const GasState u = isoriemann::sample(sol, xi);
            const double m = u.rho * u.v;
            const double f2 = u.rho * u.v * u.v + g.p(u.rho);
            const std::array<double, 2> a{u.rho * phi_t, m * phi_t};
            const std::array<double, 2> b{m * phi_x, f2 * phi_x};
            for (int q = 0; q < 2; ++q) {
              res[q] += w * (a[q] + b[q]);
              mag[q] += w * (std::abs(a[q]) + std::abs(b[q]));
            }
          }
        }
      }
    }
  }
  return std::max(std::abs(res[0]) / mag[0], std::abs(res[1]) / mag[1]);
}

/// Box balance for a delta-shock on [-L, L] x [0, T]: mass (momentum) in the
/// box at T, including the concentrated weight w(T) = weight_rate T (times
/// sigma for momentum), minus the initial content and the boundary fluxes.
/// Returned relative to the largest individual term.
inline std::array<double, 2> delta_box_balance(const RiemannProblem& p, double sigma,
                                               double weight_rate, double L = 10.0,
                                               double T = 1.0) {
  const GasState& l = p.left;
  const GasState& r = p.right;
  const double xs = sigma * T;
  const double w = weight_rate * T;

  const double mass_t = l.rho * (xs + L) + r.rho * (L - xs) + w;
  const double mass_0 = (l.rho + r.rho) * L;
  const double mass_flux = (l.rho * l.v - r.rho * r.v) * T;
  const double mass_scale = std::max({std::abs(mass_t), std::abs(mass_0), std::abs(mass_flux)});

  const double mom_t = l.rho * l.v * (xs + L) + r.rho * r.v * (L - xs) + w * sigma;
  const double mom_0 = (l.rho * l.v + r.rho * r.v) * L;
  const double mom_flux = (l.rho * l.v * l.v - r.rho * r.v * r.v) * T;
  const double mom_scale = std::max({std::abs(mom_t), std::abs(mom_0), std::abs(mom_flux)});

  return {std::abs(mass_t - mass_0 - mass_flux) / mass_scale,
          std::abs(mom_t - mom_0 - mom_flux) / mom_scale};
}

}  // namespace oracle
