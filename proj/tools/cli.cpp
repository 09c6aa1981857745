#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "sppde/error.hpp"
#include "sppde/harness.hpp"

namespace sppde::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw ConfigError("out: cannot write '" + path.string() + "'");
  return os;
}

std::string mode_name(bool subtract) { return subtract ? "subtract" : "nosubtract"; }

SweepConfig sweep_config(const RunConfig& rc) {
  const Coupling coupling = rc.coupling == "equal" ? Coupling::Equal : Coupling::M16;
  SweepConfig cfg;
  cfg.ladder = rc.N > 0 || rc.M > 0 ? doubling_ladder({rc.N, rc.M}, rc.steps) : default_ladder(coupling, rc.steps);
  cfg.eps_exponents = eps_exponents(rc.eps_max_exp);
  cfg.mu = rc.mu;
  cfg.subtract_singularity = rc.subtract;
  cfg.threads = rc.threads;
  return cfg;
}

int converge(const RunConfig& rc, const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
  if ((rc.N > 0) != (rc.M > 0)) throw ConfigError("N/M: give both to override the ladder start");
  const ConvergenceTable table = uniform_sweep(spec, sweep_config(rc));
  err << "sweep: " << table.D.size() * table.ladder.size() << " cells in " << table.wall_seconds << " s\n";
  const bool csv = rc.output == "csv";
  if (rc.out_path.empty()) {
    if (csv)
      write_csv(table, out);
    else
      out << format_table(table);
    return 0;
  }
  const auto path = std::filesystem::path(rc.out_path) /
                    ("table_" + std::to_string(rc.example) + "_" + mode_name(rc.subtract) + (csv ? ".csv" : ".txt"));
  auto os = open_output(path);
  if (csv)
    write_csv(table, os);
  else
    os << format_table(table);
  out << path.string() << '\n';
  return 0;
}

GridFunction solve_for(const RunConfig& rc, const ProblemSpec& spec) {
  SweepConfig cfg;
  cfg.mu = rc.mu;
  cfg.subtract_singularity = rc.subtract;
  return solve_cell(spec, std::ldexp(1.0, -rc.eps_exp), rc.N > 0 ? rc.N : 64, rc.M > 0 ? rc.M : 64, cfg);
}

int solve(const RunConfig& rc, const ProblemSpec& spec, std::ostream& out) {
  const GridFunction Y = solve_for(rc, spec);
  if (rc.out_path.empty()) {
    write_field_csv(nodal_field(Y), out);
    return 0;
  }
  const auto path = std::filesystem::path(rc.out_path) / ("field_" + std::to_string(rc.example) + "_y.csv");
  auto os = open_output(path);
  write_field_csv(nodal_field(Y), os);
  out << path.string() << '\n';
  return 0;
}

int figures(const RunConfig& rc, const ProblemSpec& spec, std::ostream& out) {
  if (!rc.subtract) throw ConfigError("subtract: figures need the singular part, drop --no-subtract");
  const double eps = std::ldexp(1.0, -rc.eps_exp);
  const GridFunction Y = solve_for(rc, spec);
  const auto dir = std::filesystem::path(rc.out_path.empty() ? "." : rc.out_path);
  const auto y_path = dir / ("field_" + std::to_string(rc.example) + "_y.csv");
  const auto u_path = dir / ("field_" + std::to_string(rc.example) + "_u.csv");
  {
    auto os = open_output(y_path);
    write_field_csv(nodal_field(Y), os);
  }
  {
    auto os = open_output(u_path);
    write_field_csv(reconstruct_solution(spec, eps, Y, Y.mesh().points(), Y.grid().points()), os);
  }
  out << y_path.string() << '\n' << u_path.string() << '\n';
  return 0;
}

int compat(const RunConfig& rc, const ProblemSpec& spec, std::ostream& out) {
  const double eps = std::ldexp(1.0, -rc.eps_exp);
  const CompatReport report = check_compatibility(spec, eps, rc.compat_order);
  out << spec.name << ": compatibility up to order " << rc.compat_order << " with eps=2^-" << rc.eps_exp << '\n';
  for (const auto& c : report.conditions) {
    char line[256];
    std::snprintf(line, sizeof line, "  [%s] order %d at (%g,0): residual % .6e  %s\n",
                  c.satisfied ? "ok" : "VIOLATED", c.order, c.corner_x, c.residual, c.name.c_str());
    out << line;
  }
  out << (report.all_satisfied() ? "all conditions satisfied\n" : "some conditions violated\n");
  return 0;
}

}  // namespace

int run(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  try {
    if (rc.eps_exp < 0) throw ConfigError("eps-exp: must be >= 0");
    if (rc.eps_max_exp < 0) throw ConfigError("eps-max-exp: must be >= 0");
    if (rc.steps < 1) throw ConfigError("steps: must be >= 1");
    const ProblemSpec spec = builtin_example(rc.example);
    switch (rc.command) {
      case Command::Converge: return converge(rc, spec, out, err);
      case Command::Solve: return solve(rc, spec, out);
      case Command::Figures: return figures(rc, spec, out);
      case Command::Compat: return compat(rc, spec, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularly perturbed reaction-diffusion solver with singularity subtraction", "sppde"};
  RunConfig rc;
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");
  app.add_option("--example", rc.example, "Built-in example 1..4")->check(CLI::Range(1, 4));
  app.add_option("--eps-exp", rc.eps_exp, "eps = 2^-E for solve/figures/compat");
  app.add_option("--N", rc.N, "Space elements (converge: ladder start)");
  app.add_option("--M", rc.M, "Time steps (converge: ladder start)");
  app.add_option("--steps", rc.steps, "Number of ladder steps for converge");
  app.add_option("--mu", rc.mu, "Shishkin transition parameter mu");
  app.add_flag("--subtract,!--no-subtract", rc.subtract, "Subtract the singular part (default on)");
  app.add_option("--nm-coupling", rc.coupling, "Default ladder: M16 (N = 16 M) or equal (N = M)")
      ->check(CLI::IsMember({"M16", "equal"}));
  app.add_option("--output", rc.output, "Table format")->check(CLI::IsMember({"csv", "table"}));
  app.add_option("--out", rc.out_path, "Output directory");
  app.add_option("--eps-max-exp", rc.eps_max_exp, "Sweep eps over 2^0 .. 2^-E");
  app.add_option("--threads", rc.threads, "Worker threads for converge (0 = auto)");
  app.add_option("--order", rc.compat_order, "Highest compatibility order to check")->check(CLI::Range(0, 2));

  auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and write Y as CSV")->fallthrough();
  auto* converge_cmd = app.add_subcommand("converge", "Two-mesh convergence table over the eps set")->fallthrough();
  auto* figures_cmd = app.add_subcommand("figures", "Write the y and s+Y fields as CSV")->fallthrough();
  auto* compat_cmd = app.add_subcommand("compat", "Corner compatibility report")->fallthrough();
  app.require_subcommand(1);

  if (argc <= 1) {
    err << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (solve_cmd->parsed()) rc.command = Command::Solve;
  if (converge_cmd->parsed()) rc.command = Command::Converge;
  if (figures_cmd->parsed()) rc.command = Command::Figures;
  if (compat_cmd->parsed()) rc.command = Command::Compat;
  return run(rc, out, err);
}

}  // namespace sppde::cli
