#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "fracfem/errors.hpp"
#include "fracfem/experiment.hpp"
#include "fracfem/special_functions.hpp"

namespace fs = std::filesystem;
using namespace fracfem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

struct TableFlags {
  std::string config;
  std::optional<std::string> example, method, levels, format, projection, out;
  std::vector<double> alphas, times;
  std::optional<double> l1_tau;
  bool recovered_gradient = false;
};

void add_table_flags(CLI::App* cmd, TableFlags& f, bool config_required) {
  auto* c = cmd->add_option("--config", f.config, "JSON experiment manifest");
  if (config_required) c->required();
  cmd->add_option("--example", f.example, "a, b, c1, c2, c3, d or e");
  cmd->add_option("--method", f.method, "galerkin, lumped or l1");
  cmd->add_option("--alpha", f.alphas, "fractional order(s)");
  cmd->add_option("--t", f.times, "time(s)");
  cmd->add_option("--levels", f.levels, "exponent range min:max with h = 2^-k");
  cmd->add_option("--projection", f.projection, "ritz, l2, interpolation or dirac");
  cmd->add_option("--format", f.format, "csv or markdown");
  cmd->add_option("--out", f.out, "output file (one table) or directory");
  cmd->add_option("--l1-tau", f.l1_tau, "time step for the L1 scheme");
  cmd->add_flag("--recovered-gradient", f.recovered_gradient, "add the G_h column");
}

ExperimentConfig resolve(const TableFlags& f) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  const auto wrap = [](const char* what, auto fn) {
    try {
      return fn();
    } catch (const DomainError& e) {
      throw ConfigError(std::string("--") + what + ": " + e.what());
    }
  };
  if (f.example) cfg.example = *f.example;
  if (f.method) cfg.method = wrap("method", [&] { return method_from_string(*f.method); });
  if (!f.alphas.empty()) cfg.alphas = f.alphas;
  if (!f.times.empty()) cfg.times = f.times;
  if (f.levels) std::tie(cfg.level_min, cfg.level_max) = parse_level_range(*f.levels);
  if (f.projection) cfg.projection = wrap("projection", [&] { return projection_from_string(*f.projection); });
  if (f.format) cfg.format = wrap("format", [&] { return output_format_from_string(*f.format); });
  if (f.out) cfg.output = fs::path(*f.out);
  if (f.l1_tau) cfg.l1_tau = *f.l1_tau;
  if (f.recovered_gradient) cfg.recovered_gradient = true;
  cfg.validate();
  return cfg;
}

std::string table_file_name(const ConvergenceTable& t, OutputFormat format) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "table_%s_%s_alpha%g_t%g.%s", t.example.c_str(), t.method.c_str(), t.alpha, t.t,
                format == OutputFormat::csv ? "csv" : "md");
  return buf;
}

int run_table(const TableFlags& f) {
  const ExperimentConfig cfg = resolve(f);
  const ExperimentResult res = run_experiment(cfg);
  const bool single_file = cfg.output && res.tables.size() == 1 && cfg.output->has_extension();
  for (const auto& t : res.tables) {
    if (!cfg.output) {
      std::cout << "## example " << t.example << ", " << t.method << ", projection " << t.projection << ", alpha "
                << t.alpha << ", t " << t.t << "\n\n";
      if (cfg.format == OutputFormat::csv) emit_csv(t, std::cout);
      else emit_markdown(t, std::cout);
      std::cout << '\n';
      continue;
    }
    const fs::path path = single_file ? *cfg.output : *cfg.output / table_file_name(t, cfg.format);
    emit(t, cfg.format, path);
    spdlog::info("wrote {}", path.string());
  }
  return 0;
}

int run_plotdata(const TableFlags& f) {
  const ExperimentConfig cfg = resolve(f);
  const ExperimentResult res = run_experiment(cfg);
  emit_plot_data(res.tables, std::cout);
  return 0;
}

int run_ml(double alpha, double beta, const std::vector<double>& zs, const std::optional<std::string>& grid) {
  std::vector<double> points = zs;
  if (grid) {
    double lo = 0, hi = 0;
    int n = 0;
    char tail = 0;
    if (std::sscanf(grid->c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &tail) != 3 || n < 1)
      throw ConfigError("--grid must look like zmin:zmax:n");
    for (int i = 0; i < n; ++i) points.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  }
  if (points.empty()) throw ConfigError("ml: give --z or --grid");
  for (double z : points) {
    const double v = mittag_leffler({alpha, beta}, z);
    std::printf("%.17g,%.17g\n", z, v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite element solver for time-fractional diffusion on (0,1)"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");

  TableFlags table_flags;
  auto* table = app.add_subcommand("table", "compute convergence tables");
  add_table_flags(table, table_flags, false);

  TableFlags plot_flags;
  auto* plot = app.add_subcommand("plotdata", "emit log2(1/h),log10(error) curves");
  add_table_flags(plot, plot_flags, true);

  double ml_alpha = 0.5, ml_beta = 1.0;
  std::vector<double> ml_z;
  std::optional<std::string> ml_grid;
  auto* ml = app.add_subcommand("ml", "evaluate E_{alpha,beta}(z) for z <= 0");
  ml->add_option("--alpha", ml_alpha)->required();
  ml->add_option("--beta", ml_beta);
  ml->add_option("--z", ml_z);
  ml->add_option("--grid", ml_grid, "zmin:zmax:n");

  ReferenceOptions ref_opt;
  auto* ref = app.add_subcommand("reference-e", "build the cached fine reference for example e");
  ref->add_flag("--force", ref_opt.force, "rebuild even if cached");
  ref->add_option("--alpha", ref_opt.alpha, "fractional order")->capture_default_str();
  ref->add_option("--t", ref_opt.t_end, "final time")->capture_default_str();
  ref->add_option("--tau", ref_opt.tau, "L1 time step")->capture_default_str();
  ref->add_option("--n-cells", ref_opt.n_cells, "cells of the fine mesh")->capture_default_str();
  ref->add_option("--cache-dir", ref_opt.cache_dir, "cache directory (default $FRACFEM_OUT or ./fracfem_out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }
  spdlog::set_default_logger(spdlog::stderr_color_mt("fracfem"));
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
  spdlog::set_pattern("[%l] %v");

  try {
    if (*table) return run_table(table_flags);
    if (*plot) return run_plotdata(plot_flags);
    if (*ml) return run_ml(ml_alpha, ml_beta, ml_z, ml_grid);
    if (*ref) {
      const ReferenceResult r = build_reference_e(ref_opt);
      std::cout << r.cache_file.string() << (r.from_cache ? " (cached)" : "") << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const DomainError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const NumericalInvariantError& e) {
    spdlog::error("{}", e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
