#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracfem/analysis.hpp"

namespace fracfem {

enum class OutputFormat { csv, markdown };

OutputFormat output_format_from_string(std::string_view s);

/// One experiment manifest: every (alpha, t) pair yields a table.
struct ExperimentConfig {
  std::string example = "a";
  Method method = Method::lumped;
  std::vector<double> alphas{0.5};
  std::vector<double> times{1.0};
  int level_min = 3;
  int level_max = 7;
  std::optional<Projection> projection;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> output;
  std::optional<double> l1_tau;  ///< defaults to t / 1000
  bool recovered_gradient = false;

  /// Throws ConfigError describing the first offending field.
  void validate() const;
  int l1_steps_for(double t) const;
};

/// Parses a JSON manifest. Unknown keys and malformed values raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// "3:7" -> {3, 7}
std::pair<int, int> parse_level_range(const std::string& s);

struct ReferenceOptions {
  int n_cells = 512;
  double tau = 1e-5;
  double t_end = 0.01;
  double alpha = 0.5;
  bool force = false;
  std::filesystem::path cache_dir;  ///< empty: default_output_dir()
};

struct ReferenceResult {
  FineReference reference;
  std::filesystem::path cache_file;
  bool from_cache = false;
  /// L2 gap (relative to ||v||) between the L1 endpoint and the spectral solve on the same mesh.
  double spectral_gap_l2 = 0.0;
  double spectral_gap_mid = 0.0;  ///< |difference| at x = 1/2
};

/// $FRACFEM_OUT or ./fracfem_out
std::filesystem::path default_output_dir();

/// Lumped-mass L1 solution of example e on the fine mesh, cached as CSV `x,value`.
ReferenceResult build_reference_e(const ReferenceOptions& opt);

void write_reference_csv(const std::filesystem::path& path, const Mesh1D& mesh, const NodalVector& values);
FineReference read_reference_csv(const std::filesystem::path& path);

struct ExperimentResult {
  std::vector<ConvergenceTable> tables;
  std::vector<TableDiagnostics> diagnostics;
};

/// Runs every (alpha, t) table. Throws NumericalInvariantError if an eigensystem check fails.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// 3 significant digits, exponent without padding: 8.08e-4.
std::string format_sci3(double v);

void emit_csv(const ConvergenceTable& table, std::ostream& os);
void emit_markdown(const ConvergenceTable& table, std::ostream& os);
void emit(const ConvergenceTable& table, OutputFormat format, const std::filesystem::path& path);

/// Parses a CSV produced by emit_csv; metadata fields are left empty.
ConvergenceTable read_table_csv(const std::filesystem::path& path);
ConvergenceTable parse_table_csv(std::istream& is);

/// Lines `log2(1/h),log10(error)` per curve, each curve preceded by a `# ...` header.
void emit_plot_data(const std::vector<ConvergenceTable>& tables, std::ostream& os);

}  // namespace fracfem
