#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/fv_solver.hpp"
#include "isoriemann/vanishing_pressure.hpp"

// Experiment driver behind the command-line tool: configuration files,
// CSV result tables and the exact / fv / sweep / figures commands.

namespace isoriemann::experiments {

/// Either a literal kappa or the critical coefficient of the Riemann data
/// (written "crit" in configs and on the command line).
struct KappaValue {
  double value = 0.0;
  bool critical = false;

  static KappaValue literal(double k) { return {k, false}; }
  static KappaValue critical_value() { return {0.0, true}; }
  friend bool operator==(const KappaValue&, const KappaValue&) = default;
};

KappaValue parse_kappa(std::string_view token);
std::string format_kappa(const KappaValue& kappa);

enum class SweepMode { Exact, Fv };

struct ExperimentConfig {
  RiemannProblem problem{{1.0, 0.8}, {0.5, 1.0}};
  double gamma = 1.4;
  std::optional<KappaValue> kappa;
  std::vector<KappaValue> kappa_schedule;
  double x_min = -1.0;
  double x_max = 1.0;
  int nx = 2000;
  double t_final = 0.63;
  SchemeConfig scheme;
  std::string out_dir = "out";
  SweepMode sweep_mode = SweepMode::Exact;

  /// Re-checks every gas, grid and scheme invariant. Throws ConfigError.
  void validate() const;
  Grid1D grid() const { return Grid1D(x_min, x_max, nx); }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&);
};

/// Parses `[section]` headers and `key = value` lines ('#' starts a
/// comment). Keys not set keep their defaults; unknown sections or keys
/// are rejected.
ExperimentConfig parse_config(std::string_view text);
std::string serialize_config(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Paper resolution: dx = 1e-4 and fixed dt = 2e-5 on the configured domain.
void apply_paper_resolution(ExperimentConfig& config);

/// Literal kappa, or kappa_sr / kappa_rs of the data. Throws RegimeError
/// when "crit" is requested for data without a critical coefficient.
double resolve_kappa(const KappaValue& kappa, const RiemannProblem& problem, double gamma);

/// 17 significant digits; parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view token);

struct ProfileTable {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> v;
  std::vector<double> momentum;

  std::size_t size() const noexcept { return x.size(); }
  /// Equal column lengths and strictly increasing x. Throws DomainError.
  void validate() const;
};

struct SweepTable {
  std::vector<SweepRecord> rows;

  /// Strictly decreasing kappa. Throws DomainError.
  void validate() const;
};

ProfileTable profile_from_field(const FieldState& field, const Grid1D& grid,
                                double vacuum_floor = kDefaultVacuumFloor);
ProfileTable profile_from_exact(const ExactSolution& exact, const Grid1D& grid, double t);

inline constexpr std::string_view kProfileHeader = "x,rho,v,momentum";
inline constexpr std::string_view kSweepHeader = "kappa,pattern,rho_star,v_star,max_density";

void write_profile_csv(const std::filesystem::path& path, const ProfileTable& table);
ProfileTable read_profile_csv(const std::filesystem::path& path);
void write_sweep_csv(const std::filesystem::path& path, const SweepTable& table);
SweepTable read_sweep_csv(const std::filesystem::path& path);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Resolved configuration followed by a [results] section.
void write_metadata(const std::filesystem::path& path, const ExperimentConfig& config,
                    const Metadata& results);

struct ExactReport {
  ExactSolution solution;
  double kappa;
  ProfileTable profile;
  Metadata metadata;
};

struct FvReport {
  FieldState field;
  double kappa;
  ProfileTable profile;
  ConservationDefect defect;
  double l1_error;
  Metadata metadata;
};

/// Exact solve at the configured kappa; writes exact_profile.csv and metadata.txt.
ExactReport cmd_exact(const ExperimentConfig& config);
/// Finite-volume run; writes fv_profile.csv and metadata.txt.
FvReport cmd_fv(const ExperimentConfig& config);
/// Kappa sweep (exact, or exact plus FV max density); writes sweep.csv and metadata.txt.
SweepTable cmd_sweep(const ExperimentConfig& config);

enum class FigureSelection { Vacuum = 1, DeltaShock = 2, Both = 3 };

/// Profiles for the vacuum-formation (data 1.0,0.8 | 0.5,1.0) and
/// delta-shock (data 0.2,1.5 | 0.7,1.0) figures at kappa = 0.6, critical,
/// 0.001: per figure an FV and an exact profile for each kappa, plus a
/// gnuplot script. Grid spacing defaults to 1e-3 on the configured domain
/// unless the config was put at paper resolution first. Returns the
/// written files.
std::vector<std::filesystem::path> cmd_figures(const ExperimentConfig& config,
                                               FigureSelection which = FigureSelection::Both,
                                               bool paper_resolution = false);

/// Riemann data of the two published experiments.
RiemannProblem vacuum_figure_data();
RiemannProblem delta_figure_data();

}  // namespace isoriemann::experiments
