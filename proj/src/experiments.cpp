#include "isoriemann/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "isoriemann/errors.hpp"

namespace isoriemann::experiments {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<KappaValue> parse_schedule(std::string_view text) {
  std::vector<KappaValue> schedule;
  if (trim(text).empty()) throw ConfigError("kappa schedule is empty");
  for (const auto part : split(text, ',')) schedule.push_back(parse_kappa(part));
  return schedule;
}

std::string format_schedule(const std::vector<KappaValue>& schedule) {
  std::string out;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_kappa(schedule[i]);
  }
  return out;
}

std::string_view sweep_mode_name(SweepMode mode) {
  return mode == SweepMode::Exact ? "exact" : "fv";
}

SweepMode parse_sweep_mode(std::string_view s) {
  if (s == "exact") return SweepMode::Exact;
  if (s == "fv") return SweepMode::Fv;
  throw ConfigError("sweep_mode must be 'exact' or 'fv', got '" + std::string(s) + "'");
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
}

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void finish_write(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

std::optional<double> parse_optional(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  return parse_double(token);
}

void add(Metadata& md, std::string key, std::string value) {
  md.emplace_back(std::move(key), std::move(value));
}

void add(Metadata& md, std::string key, double value) {
  md.emplace_back(std::move(key), format_double(value));
}

void add_critical(Metadata& md, const RiemannProblem& problem, double gamma) {
  if (const auto crit = critical_kappa(problem, gamma)) {
    add(md, "critical_kind", crit->kind == CriticalKind::SR ? "kappa_sr" : "kappa_rs");
    add(md, "critical_kappa", crit->value);
  } else {
    add(md, "critical_kind", "none");
  }
}

// Strength |rho* - rho_anchor| / rho_anchor of each wave family.
std::pair<double, double> wave_strengths(const ExactSolution& sol) {
  if (!sol.star()) return {1.0, 1.0};
  const double rs = sol.star()->rho;
  const auto& p = sol.problem();
  return {std::abs(rs - p.left.rho) / p.left.rho, std::abs(rs - p.right.rho) / p.right.rho};
}

void describe_solution(Metadata& md, const ExactSolution& sol) {
  add(md, "pattern", std::string(to_string(sol.pattern())));
  if (sol.star()) {
    add(md, "rho_star", sol.star()->rho);
    add(md, "v_star", sol.star()->v);
  } else {
    add(md, "rho_star", 0.0);
    add(md, "v_star", "vacuum");
  }
  for (const Wave& w : sol.waves()) {
    const std::string key = "wave" + std::to_string(w.family);
    if (w.kind == WaveKind::Shock) {
      add(md, key + "_shock_speed", w.speed_lo);
    } else {
      add(md, key + "_fan_from", w.speed_lo);
      add(md, key + "_fan_to", w.speed_hi);
    }
  }
  const auto [s1, s2] = wave_strengths(sol);
  if (sol.waves().size() == 2) {
    const int weak = s1 <= s2 ? 1 : 2;
    const double strength = std::min(s1, s2);
    add(md, "weakest_wave_family", std::to_string(weak));
    add(md, "weakest_wave_strength", strength);
    add(md, "near_degenerate", strength < 1e-2 ? "true" : "false");
  }
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

std::vector<double> resolved_schedule(const ExperimentConfig& config) {
  std::vector<double> schedule;
  if (config.kappa_schedule.empty()) {
    double kappa0 = 0.6;
    if (const auto crit = critical_kappa(config.problem, config.gamma)) {
      kappa0 = std::max(kappa0, 2.0 * crit->value);
    }
    return geometric_schedule(kappa0);
  }
  for (const auto& k : config.kappa_schedule) {
    schedule.push_back(resolve_kappa(k, config.problem, config.gamma));
  }
  return schedule;
}

}  // namespace

KappaValue parse_kappa(std::string_view token) {
  token = trim(token);
  if (token == "crit" || token == "critical") return KappaValue::critical_value();
  return KappaValue::literal(parse_double(token));
}

std::string format_kappa(const KappaValue& kappa) {
  return kappa.critical ? std::string("crit") : format_double(kappa.value);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw DomainError("cannot format value");
  return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ConfigError("expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.problem == b.problem && a.gamma == b.gamma && a.kappa == b.kappa &&
         a.kappa_schedule == b.kappa_schedule && a.x_min == b.x_min && a.x_max == b.x_max &&
         a.nx == b.nx && a.t_final == b.t_final && a.scheme.dt == b.scheme.dt &&
         a.scheme.cfl == b.scheme.cfl && a.scheme.theta == b.scheme.theta &&
         a.scheme.vacuum_floor == b.scheme.vacuum_floor &&
         a.scheme.boundary == b.scheme.boundary && a.out_dir == b.out_dir &&
         a.sweep_mode == b.sweep_mode;
}

void ExperimentConfig::validate() const {
  try {
    problem.validate();
    PolytropicEos(1.0, gamma);
    if (kappa && !kappa->critical) PolytropicEos(kappa->value, gamma);
    if (kappa && kappa->critical) resolve_kappa(*kappa, problem, gamma);
    if (!kappa_schedule.empty()) {
      std::vector<double> resolved;
      for (const auto& k : kappa_schedule) resolved.push_back(resolve_kappa(k, problem, gamma));
      validate_schedule(resolved);
    }
    const Grid1D g = grid();
    if (!(x_min < 0.0 && x_max > 0.0)) throw ConfigError("x = 0 must lie inside the grid");
    const double edges_left = -x_min / g.dx();
    if (std::abs(edges_left - std::round(edges_left)) > 1e-9 * std::max(1.0, edges_left)) {
      throw ConfigError("x = 0 must coincide with a cell edge (adjust nx or the domain)");
    }
    if (!(t_final > 0.0) || !std::isfinite(t_final)) throw ConfigError("t_final must be positive");
    scheme.validate();
    if (out_dir.empty()) throw ConfigError("output directory must not be empty");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  static const std::map<std::string, std::set<std::string>> kKeys{
      {"problem", {"rho_l", "v_l", "rho_r", "v_r"}},
      {"gas", {"gamma", "kappa", "kappa_schedule"}},
      {"grid", {"x_min", "x_max", "nx"}},
      {"run", {"t_final"}},
      {"scheme", {"dt", "cfl", "theta", "vacuum_floor", "boundary"}},
      {"output", {"dir", "sweep_mode"}},
  };

  std::string section;
  std::set<std::string> seen;
  int line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kKeys.contains(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (!kKeys.at(section).contains(key)) {
      throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
    }
    if (!seen.insert(section + "." + key).second) {
      throw ConfigError(where + "duplicate key '" + key + "'");
    }

    if (key == "rho_l") cfg.problem.left.rho = parse_double(value);
    else if (key == "v_l") cfg.problem.left.v = parse_double(value);
    else if (key == "rho_r") cfg.problem.right.rho = parse_double(value);
    else if (key == "v_r") cfg.problem.right.v = parse_double(value);
    else if (key == "gamma") cfg.gamma = parse_double(value);
    else if (key == "kappa") cfg.kappa = parse_kappa(value);
    else if (key == "kappa_schedule") cfg.kappa_schedule = parse_schedule(value);
    else if (key == "x_min") cfg.x_min = parse_double(value);
    else if (key == "x_max") cfg.x_max = parse_double(value);
    else if (key == "nx") cfg.nx = parse_int(value);
    else if (key == "t_final") cfg.t_final = parse_double(value);
    else if (key == "dt") cfg.scheme.dt = parse_double(value);
    else if (key == "cfl") cfg.scheme.cfl = parse_double(value);
    else if (key == "theta") cfg.scheme.theta = parse_double(value);
    else if (key == "vacuum_floor") cfg.scheme.vacuum_floor = parse_double(value);
    else if (key == "boundary") {
      if (value != "outflow") throw ConfigError(where + "only 'outflow' boundaries are supported");
    } else if (key == "dir") cfg.out_dir = std::string(value);
    else if (key == "sweep_mode") cfg.sweep_mode = parse_sweep_mode(value);
  }
  // A fixed dt replaces the default Courant number unless both were given.
  if (seen.contains("scheme.dt") && !seen.contains("scheme.cfl")) cfg.scheme.cfl.reset();
  cfg.validate();
  return cfg;
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[problem]\n"
      << "rho_l = " << format_double(c.problem.left.rho) << '\n'
      << "v_l = " << format_double(c.problem.left.v) << '\n'
      << "rho_r = " << format_double(c.problem.right.rho) << '\n'
      << "v_r = " << format_double(c.problem.right.v) << '\n'
      << "\n[gas]\n"
      << "gamma = " << format_double(c.gamma) << '\n';
  if (c.kappa) out << "kappa = " << format_kappa(*c.kappa) << '\n';
  if (!c.kappa_schedule.empty()) {
    out << "kappa_schedule = " << format_schedule(c.kappa_schedule) << '\n';
  }
  out << "\n[grid]\n"
      << "x_min = " << format_double(c.x_min) << '\n'
      << "x_max = " << format_double(c.x_max) << '\n'
      << "nx = " << c.nx << '\n'
      << "\n[run]\n"
      << "t_final = " << format_double(c.t_final) << '\n'
      << "\n[scheme]\n";
  if (c.scheme.dt) out << "dt = " << format_double(*c.scheme.dt) << '\n';
  if (c.scheme.cfl) out << "cfl = " << format_double(*c.scheme.cfl) << '\n';
  out << "theta = " << format_double(c.scheme.theta) << '\n'
      << "vacuum_floor = " << format_double(c.scheme.vacuum_floor) << '\n'
      << "boundary = outflow\n"
      << "\n[output]\n"
      << "dir = " << c.out_dir << '\n'
      << "sweep_mode = " << sweep_mode_name(c.sweep_mode) << '\n';
  return out.str();
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void apply_paper_resolution(ExperimentConfig& config) {
  config.nx = static_cast<int>(std::lround((config.x_max - config.x_min) / 1e-4));
  config.scheme.dt = 2e-5;
  config.scheme.cfl.reset();
}

double resolve_kappa(const KappaValue& kappa, const RiemannProblem& problem, double gamma) {
  if (!kappa.critical) return kappa.value;
  const auto crit = critical_kappa(problem, gamma);
  if (!crit) {
    throw RegimeError("data have no critical kappa (need a 1-shock/2-rarefaction or "
                      "1-rarefaction/2-shock configuration)");
  }
  return crit->value;
}

void ProfileTable::validate() const {
  const std::size_t n = x.size();
  if (rho.size() != n || v.size() != n || momentum.size() != n) {
    throw DomainError("profile columns differ in length");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError("profile x must be strictly increasing");
  }
}

void SweepTable::validate() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].kappa < rows[i - 1].kappa)) {
      throw DomainError("sweep kappa must be strictly decreasing");
    }
  }
}

ProfileTable profile_from_field(const FieldState& field, const Grid1D& grid,
                                double vacuum_floor) {
  ProfileTable t;
  t.x = grid.centers();
  t.rho = field.rho;
  t.v = field.velocity(vacuum_floor);
  t.momentum = field.momentum;
  return t;
}

ProfileTable profile_from_exact(const ExactSolution& exact, const Grid1D& grid, double t) {
  if (!(t > 0.0)) throw DomainError("exact profile needs t > 0");
  ProfileTable p;
  p.x = grid.centers();
  for (const double x : p.x) {
    const GasState w = sample(exact, x / t);
    p.rho.push_back(w.rho);
    p.v.push_back(w.v);
    p.momentum.push_back(w.rho * w.v);
  }
  return p;
}

void write_profile_csv(const fs::path& path, const ProfileTable& table) {
  table.validate();
  auto out = open_for_write(path);
  out << kProfileHeader << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << format_double(table.x[i]) << ',' << format_double(table.rho[i]) << ','
        << format_double(table.v[i]) << ',' << format_double(table.momentum[i]) << '\n';
  }
  finish_write(out, path);
}

ProfileTable read_profile_csv(const fs::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines.front() != kProfileHeader) {
    throw IoError("'" + path.string() + "' is not a profile table");
  }
  ProfileTable t;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto cells = split(lines[i], ',');
    if (cells.size() != 4) throw IoError("profile row " + std::to_string(i) + " malformed");
    t.x.push_back(parse_double(cells[0]));
    t.rho.push_back(parse_double(cells[1]));
    t.v.push_back(parse_double(cells[2]));
    t.momentum.push_back(parse_double(cells[3]));
  }
  t.validate();
  return t;
}

void write_sweep_csv(const fs::path& path, const SweepTable& table) {
  table.validate();
  auto out = open_for_write(path);
  out << kSweepHeader << '\n';
  for (const SweepRecord& r : table.rows) {
    out << format_double(r.kappa) << ','
        << (r.error ? std::string_view("Error") : to_string(r.pattern)) << ','
        << format_optional(r.rho_star) << ',' << format_optional(r.v_star) << ','
        << format_optional(r.max_density) << '\n';
  }
  finish_write(out, path);
}

SweepTable read_sweep_csv(const fs::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines.front() != kSweepHeader) {
    throw IoError("'" + path.string() + "' is not a sweep table");
  }
  SweepTable t;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto cells = split(lines[i], ',');
    if (cells.size() != 5) throw IoError("sweep row " + std::to_string(i) + " malformed");
    SweepRecord r;
    r.kappa = parse_double(cells[0]);
    if (trim(cells[1]) == "Error") {
      r.error = "";
    } else {
      r.pattern = pattern_from_string(trim(cells[1]));
    }
    r.vacuum = !r.error && r.pattern == WavePattern::VacuumTwoRarefaction;
    r.rho_star = parse_optional(cells[2]);
    r.v_star = parse_optional(cells[3]);
    r.max_density = parse_optional(cells[4]);
    t.rows.push_back(std::move(r));
  }
  t.validate();
  return t;
}

void write_metadata(const fs::path& path, const ExperimentConfig& config,
                    const Metadata& results) {
  auto out = open_for_write(path);
  out << serialize_config(config) << "\n[results]\n";
  for (const auto& [key, value] : results) out << key << " = " << value << '\n';
  finish_write(out, path);
}

ExactReport cmd_exact(const ExperimentConfig& config) {
  config.validate();
  if (!config.kappa) throw ConfigError("exact needs a single kappa (--kappa)");
  const double kappa = resolve_kappa(*config.kappa, config.problem, config.gamma);
  const PolytropicEos eos(kappa, config.gamma);
  ExactSolution sol = solve(eos, config.problem);
  ProfileTable profile = profile_from_exact(sol, config.grid(), config.t_final);

  Metadata md;
  add(md, "command", "exact");
  add(md, "kappa_resolved", kappa);
  add_critical(md, config.problem, config.gamma);
  describe_solution(md, sol);

  const fs::path dir(config.out_dir);
  ensure_directory(dir);
  write_profile_csv(dir / "exact_profile.csv", profile);
  write_metadata(dir / "metadata.txt", config, md);
  return {std::move(sol), kappa, std::move(profile), std::move(md)};
}

FvReport cmd_fv(const ExperimentConfig& config) {
  config.validate();
  if (!config.kappa) throw ConfigError("fv needs a single kappa (--kappa)");
  const double kappa = resolve_kappa(*config.kappa, config.problem, config.gamma);
  const PolytropicEos eos(kappa, config.gamma);
  const Grid1D grid = config.grid();
  FieldState field = run(grid, config.problem, eos, config.scheme, config.t_final);
  const ConservationDefect defect = conservation_defect(field, grid);
  const ExactSolution exact = solve(eos, config.problem);
  const double l1 = l1_error(field, grid, exact, config.t_final);
  ProfileTable profile = profile_from_field(field, grid, config.scheme.vacuum_floor);

  Metadata md;
  add(md, "command", "fv");
  add(md, "kappa_resolved", kappa);
  add_critical(md, config.problem, config.gamma);
  add(md, "exact_pattern", std::string(to_string(exact.pattern())));
  add(md, "steps", std::to_string(field.audit.steps));
  add(md, "final_time", field.time);
  add(md, "initial_mass", field.audit.initial_mass);
  add(md, "final_mass", field.total_mass(grid));
  add(md, "boundary_mass_inflow", field.audit.boundary_mass_inflow);
  add(md, "floor_mass_added", field.audit.floor_mass_added);
  add(md, "initial_momentum", field.audit.initial_momentum);
  add(md, "final_momentum", field.total_momentum(grid));
  add(md, "boundary_momentum_inflow", field.audit.boundary_momentum_inflow);
  add(md, "floor_momentum_added", field.audit.floor_momentum_added);
  add(md, "mass_defect_relative", defect.mass);
  add(md, "momentum_defect_relative", defect.momentum);
  add(md, "l1_error", l1);
  add(md, "max_density", max_of(field.rho));
  add(md, "min_density", min_of(field.rho));

  const fs::path dir(config.out_dir);
  ensure_directory(dir);
  write_profile_csv(dir / "fv_profile.csv", profile);
  write_metadata(dir / "metadata.txt", config, md);
  return {std::move(field), kappa, std::move(profile), defect, l1, std::move(md)};
}

SweepTable cmd_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::vector<double> schedule = resolved_schedule(config);
  SweepTable table{sweep(config.problem, config.gamma, schedule)};

  if (config.sweep_mode == SweepMode::Fv) {
    const Grid1D grid = config.grid();
    for (SweepRecord& rec : table.rows) {
      try {
        const FieldState f = run(grid, config.problem, PolytropicEos(rec.kappa, config.gamma),
                                 config.scheme, config.t_final);
        rec.max_density = max_of(f.rho);
      } catch (const Error& e) {
        rec.error = e.what();
      }
    }
  }

  Metadata md;
  add(md, "command", "sweep");
  add(md, "mode", std::string(sweep_mode_name(config.sweep_mode)));
  add_critical(md, config.problem, config.gamma);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].error) {
      add(md, "error_" + std::to_string(i), *table.rows[i].error);
    }
  }

  const fs::path dir(config.out_dir);
  ensure_directory(dir);
  write_sweep_csv(dir / "sweep.csv", table);
  write_metadata(dir / "metadata.txt", config, md);
  return table;
}

RiemannProblem vacuum_figure_data() { return {{1.0, 0.8}, {0.5, 1.0}}; }
RiemannProblem delta_figure_data() { return {{0.2, 1.5}, {0.7, 1.0}}; }

std::vector<fs::path> cmd_figures(const ExperimentConfig& config, FigureSelection which,
                                  bool paper_resolution) {
  struct Figure {
    int number;
    RiemannProblem data;
    std::string title;
  };
  std::vector<Figure> figures;
  if (which == FigureSelection::Vacuum || which == FigureSelection::Both) {
    figures.push_back({1, vacuum_figure_data(), "vacuum formation"});
  }
  if (which == FigureSelection::DeltaShock || which == FigureSelection::Both) {
    figures.push_back({2, delta_figure_data(), "delta-shock formation"});
  }

  const fs::path dir(config.out_dir);
  ensure_directory(dir);
  std::vector<fs::path> written;
  Metadata md;
  add(md, "command", "figures");

  for (const Figure& fig : figures) {
    ExperimentConfig cfg = config;
    cfg.problem = fig.data;
    cfg.kappa.reset();
    cfg.kappa_schedule.clear();
    if (paper_resolution) {
      apply_paper_resolution(cfg);
    } else {
      cfg.nx = static_cast<int>(std::lround((cfg.x_max - cfg.x_min) / 1e-3));
    }
    cfg.validate();
    const Grid1D grid = cfg.grid();
    const std::string stem = "figure" + std::to_string(fig.number);
    const std::vector<std::pair<std::string, KappaValue>> columns{
        {"0.6", KappaValue::literal(0.6)},
        {"crit", KappaValue::critical_value()},
        {"0.001", KappaValue::literal(0.001)},
    };

    std::vector<std::pair<std::string, double>> panel_kappas;
    for (const auto& [label, kv] : columns) {
      const double kappa = resolve_kappa(kv, cfg.problem, cfg.gamma);
      const PolytropicEos eos(kappa, cfg.gamma);
      const FieldState field = run(grid, cfg.problem, eos, cfg.scheme, cfg.t_final);
      const ExactSolution exact = solve(eos, cfg.problem);

      const fs::path fv_path = dir / (stem + "_kappa_" + label + "_fv.csv");
      const fs::path ex_path = dir / (stem + "_kappa_" + label + "_exact.csv");
      write_profile_csv(fv_path, profile_from_field(field, grid, cfg.scheme.vacuum_floor));
      write_profile_csv(ex_path, profile_from_exact(exact, grid, cfg.t_final));
      written.push_back(fv_path);
      written.push_back(ex_path);
      panel_kappas.emplace_back(label, kappa);

      add(md, stem + "_kappa_" + label, kappa);
      add(md, stem + "_kappa_" + label + "_pattern", std::string(to_string(exact.pattern())));
      add(md, stem + "_kappa_" + label + "_max_density", max_of(field.rho));
      add(md, stem + "_kappa_" + label + "_min_density", min_of(field.rho));
    }

    const fs::path script = dir / (stem + ".gp");
    auto out = open_for_write(script);
    out << "# " << fig.title << ": rho (top) and v (bottom), finite volume vs exact, t = "
        << format_double(cfg.t_final) << "\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 1500,900\n"
        << "set output '" << stem << ".png'\n"
        << "set multiplot layout 2,3 title '" << fig.title << "'\n";
    for (const int column : {2, 3}) {
      for (const auto& [label, kappa] : panel_kappas) {
        const std::string base = stem + "_kappa_" + label;
        out << "set title 'kappa = " << format_double(kappa) << "'\n"
            << "set ylabel '" << (column == 2 ? "rho" : "v") << "'\n"
            << "plot '" << base << "_fv.csv' skip 1 using 1:" << column
            << " with lines title 'finite volume', '" << base << "_exact.csv' skip 1 using 1:"
            << column << " with lines dt 2 title 'exact'\n";
      }
    }
    out << "unset multiplot\n";
    finish_write(out, script);
    written.push_back(script);
  }

  write_metadata(dir / "metadata.txt", config, md);
  written.push_back(dir / "metadata.txt");
  return written;
}

}  // namespace isoriemann::experiments
