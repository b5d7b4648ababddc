// isoriemann: exact and finite-volume Riemann solutions of the isentropic
// Euler equations in the vanishing-pressure limit.
//
// Exit status: 0 success, 2 usage/config/domain/regime error, 3 numerical or
// admissibility failure, 4 I/O error, 1 anything else. On failure a single
// JSON error record is printed to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "isoriemann/errors.hpp"
#include "isoriemann/experiments.hpp"
#include "isoriemann/pressureless.hpp"

namespace ex = isoriemann::experiments;
using isoriemann::to_string;

namespace {

struct Overrides {
  std::string config_path;
  double rho_l = 0, v_l = 0, rho_r = 0, v_r = 0, gamma = 0;
  std::string kappa, schedule;
  double t_final = 0, xmin = 0, xmax = 0, dt = 0, cfl = 0, theta = 0;
  int nx = 0;
  std::string out, mode;
  bool paper_resolution = false;
  int figure = 3;
};

struct OptionSet {
  CLI::Option *rho_l, *v_l, *rho_r, *v_r, *gamma, *kappa, *schedule, *t_final, *nx, *xmin,
      *xmax, *dt, *cfl, *theta, *out, *mode;
};

OptionSet add_common(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config_path, "Configuration file")->check(CLI::ExistingFile);
  OptionSet s{};
  s.rho_l = app.add_option("--rho-l", o.rho_l, "Left density");
  s.v_l = app.add_option("--v-l", o.v_l, "Left velocity");
  s.rho_r = app.add_option("--rho-r", o.rho_r, "Right density");
  s.v_r = app.add_option("--v-r", o.v_r, "Right velocity");
  s.gamma = app.add_option("--gamma", o.gamma, "Adiabatic exponent (> 1)");
  s.kappa = app.add_option("--kappa", o.kappa, "Pressure coefficient, or 'crit'");
  s.schedule = app.add_option("--kappa-schedule", o.schedule,
                              "Comma-separated strictly decreasing kappa values ('crit' allowed)");
  s.t_final = app.add_option("--t-final", o.t_final, "Final time");
  s.nx = app.add_option("--nx", o.nx, "Number of cells");
  s.xmin = app.add_option("--xmin", o.xmin, "Left end of the domain");
  s.xmax = app.add_option("--xmax", o.xmax, "Right end of the domain");
  s.dt = app.add_option("--dt", o.dt, "Fixed time step");
  s.cfl = app.add_option("--cfl", o.cfl, "Courant number (adaptive time step)");
  s.dt->excludes(s.cfl);
  s.theta = app.add_option("--theta", o.theta, "Numerical viscosity factor in (0, 1]");
  s.out = app.add_option("--out", o.out, "Output directory");
  s.mode = app.add_option("--mode", o.mode, "Sweep mode")->check(CLI::IsMember({"exact", "fv"}));
  app.add_flag("--paper-resolution", o.paper_resolution, "dx = 1e-4 and dt = 2e-5");
  return s;
}

ex::ExperimentConfig resolve(const Overrides& o, const OptionSet& s) {
  ex::ExperimentConfig c;
  if (!o.config_path.empty()) c = ex::load_config(o.config_path);
  if (*s.rho_l) c.problem.left.rho = o.rho_l;
  if (*s.v_l) c.problem.left.v = o.v_l;
  if (*s.rho_r) c.problem.right.rho = o.rho_r;
  if (*s.v_r) c.problem.right.v = o.v_r;
  if (*s.gamma) c.gamma = o.gamma;
  if (*s.kappa) c.kappa = ex::parse_kappa(o.kappa);
  if (*s.schedule) {
    c.kappa_schedule.clear();
    std::string_view rest = o.schedule;
    if (rest.find_first_not_of(" ,") == std::string_view::npos) {
      throw isoriemann::ConfigError("kappa schedule is empty");
    }
    while (true) {
      const auto comma = rest.find(',');
      c.kappa_schedule.push_back(ex::parse_kappa(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  if (*s.t_final) c.t_final = o.t_final;
  if (*s.nx) c.nx = o.nx;
  if (*s.xmin) c.x_min = o.xmin;
  if (*s.xmax) c.x_max = o.xmax;
  if (*s.dt) {
    c.scheme.dt = o.dt;
    c.scheme.cfl.reset();
  }
  if (*s.cfl) {
    c.scheme.cfl = o.cfl;
    c.scheme.dt.reset();
  }
  if (*s.theta) c.scheme.theta = o.theta;
  if (*s.out) c.out_dir = o.out;
  if (*s.mode) c.sweep_mode = o.mode == "fv" ? ex::SweepMode::Fv : ex::SweepMode::Exact;
  if (o.paper_resolution) ex::apply_paper_resolution(c);
  c.validate();
  return c;
}

void print_metadata(const ex::Metadata& md) {
  for (const auto& [key, value] : md) std::cout << key << " = " << value << '\n';
}

int fail(const char* kind, const std::string& message, int code, nlohmann::json extra = {}) {
  nlohmann::json record{{"error", kind}, {"message", message}, {"exit_code", code}};
  if (!extra.is_null()) record.update(extra);
  std::cerr << record.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann solutions of the isentropic Euler equations as pressure vanishes"};
  app.require_subcommand(1);

  Overrides o;
  CLI::App* exact = app.add_subcommand("exact", "Exact Riemann solution at one kappa");
  CLI::App* fv = app.add_subcommand("fv", "Lax-Friedrichs finite-volume run at one kappa");
  CLI::App* sweep = app.add_subcommand("sweep", "Exact (or FV) solutions over a kappa schedule");
  CLI::App* figures = app.add_subcommand("figures", "Profile data and plot scripts of both figures");
  CLI::App* pressureless = app.add_subcommand("pressureless", "Zero-pressure Riemann solution");

  const OptionSet s_exact = add_common(*exact, o);
  const OptionSet s_fv = add_common(*fv, o);
  const OptionSet s_sweep = add_common(*sweep, o);
  const OptionSet s_fig = add_common(*figures, o);
  figures->add_option("--figure", o.figure, "1 = vacuum, 2 = delta-shock, 3 = both")
      ->check(CLI::Range(1, 3));
  const OptionSet s_pl = add_common(*pressureless, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), 2);
  }

  try {
    if (*exact) {
      const auto report = ex::cmd_exact(resolve(o, s_exact));
      print_metadata(report.metadata);
    } else if (*fv) {
      const auto report = ex::cmd_fv(resolve(o, s_fv));
      print_metadata(report.metadata);
    } else if (*sweep) {
      const auto cfg = resolve(o, s_sweep);
      const auto table = ex::cmd_sweep(cfg);
      std::cout << ex::kSweepHeader << '\n';
      for (const auto& r : table.rows) {
        std::cout << ex::format_double(r.kappa) << ','
                  << (r.error ? std::string("Error: " + *r.error)
                              : std::string(to_string(r.pattern)))
                  << ',' << (r.rho_star ? ex::format_double(*r.rho_star) : "") << ','
                  << (r.v_star ? ex::format_double(*r.v_star) : "") << ','
                  << (r.max_density ? ex::format_double(*r.max_density) : "") << '\n';
      }
    } else if (*figures) {
      const auto cfg = resolve(o, s_fig);
      const auto files = ex::cmd_figures(cfg, static_cast<ex::FigureSelection>(o.figure),
                                         o.paper_resolution);
      for (const auto& f : files) std::cout << f.string() << '\n';
    } else if (*pressureless) {
      const auto cfg = resolve(o, s_pl);
      const auto sol = isoriemann::solve_pressureless(cfg.problem);
      std::cout << "pattern = " << to_string(sol.tag) << '\n';
      if (sol.delta) {
        std::cout << "sigma = " << ex::format_double(sol.delta->sigma) << '\n'
                  << "weight_rate = " << ex::format_double(sol.delta->weight_rate) << '\n';
      }
      if (sol.contact_speeds) {
        std::cout << "contact_left = " << ex::format_double(sol.contact_speeds->first) << '\n'
                  << "contact_right = " << ex::format_double(sol.contact_speeds->second) << '\n';
      }
    }
  } catch (const isoriemann::StepError& e) {
    return fail("StepError", e.what(), 3,
                {{"time", e.time()},
                 {"kind", e.kind() == isoriemann::StepFailure::Cfl ? "cfl" : "blowup"}});
  } catch (const isoriemann::ConfigError& e) {
    return fail("ConfigError", e.what(), 2);
  } catch (const isoriemann::DomainError& e) {
    return fail("DomainError", e.what(), 2);
  } catch (const isoriemann::RegimeError& e) {
    return fail("RegimeError", e.what(), 2);
  } catch (const isoriemann::AdmissibilityError& e) {
    return fail("AdmissibilityError", e.what(), 3);
  } catch (const isoriemann::NumericalError& e) {
    return fail("NumericalError", e.what(), 3);
  } catch (const isoriemann::IoError& e) {
    return fail("IoError", e.what(), 4);
  } catch (const std::exception& e) {
    return fail("Error", e.what(), 1);
  }
  return 0;
}
