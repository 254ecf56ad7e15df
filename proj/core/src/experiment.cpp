#include "fracfem/experiment.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fracfem/errors.hpp"
#include "fracfem/spectral.hpp"

namespace fracfem {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kInvariantTol = 1e-10;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> number_list(const json& j, const char* key) {
  std::vector<double> out;
  const auto take = [&](const json& x) {
    if (!x.is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number or a list of numbers");
    out.push_back(x.get<double>());
  };
  if (j.is_array()) {
    for (const auto& x : j) take(x);
  } else {
    take(j);
  }
  if (out.empty()) throw ConfigError(std::string("config: '") + key + "' is empty");
  return out;
}

std::string string_field(const json& j, const char* key) {
  if (!j.is_string()) throw ConfigError(std::string("config: '") + key + "' must be a string");
  return j.get<std::string>();
}

template <class F>
auto wrap_config(const char* key, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: '") + key + "': " + e.what());
  }
}

std::string table_label(const ConvergenceTable& t) {
  std::ostringstream os;
  os << "example=" << t.example << " method=" << t.method << " projection=" << t.projection << " alpha=" << t.alpha
     << " t=" << t.t;
  return os.str();
}

std::string reference_file_name(const ReferenceOptions& opt) {
  std::ostringstream os;
  os << "reference_e_n" << opt.n_cells << "_tau" << opt.tau << "_t" << opt.t_end << "_alpha" << opt.alpha << ".csv";
  return os.str();
}

/// Exclusive lock file held for the lifetime of the object.
class LockFile {
public:
  explicit LockFile(fs::path path) : path_(std::move(path)) {
    const auto start = std::chrono::steady_clock::now();
    for (;;) {
      if (std::FILE* f = std::fopen(path_.string().c_str(), "wx")) {
        std::fclose(f);
        return;
      }
      std::error_code ec;
      const auto age = fs::file_time_type::clock::now() - fs::last_write_time(path_, ec);
      if (!ec && age > std::chrono::minutes(30)) {
        spdlog::warn("removing stale lock {}", path_.string());
        fs::remove(path_, ec);
        continue;
      }
      if (std::chrono::steady_clock::now() - start > std::chrono::minutes(20))
        throw std::runtime_error("timed out waiting for lock " + path_.string());
      std::this_thread::sleep_for(std::chrono::milliseconds(200));
    }
  }
  ~LockFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;

private:
  fs::path path_;
};

}  // namespace

OutputFormat output_format_from_string(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  throw DomainError("unknown format '" + std::string(s) + "' (expected csv or markdown)");
}

std::pair<int, int> parse_level_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int k = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {k, k};
    }
    const std::string a = s.substr(0, colon);
    const std::string b = s.substr(colon + 1);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("config: levels '" + s + "' must look like 3:7");
  }
}

void ExperimentConfig::validate() const {
  const Example ex = wrap_config("example", [&] { return example_from_string(example); });
  if (level_min < 2 || level_max > 12 || level_min > level_max) {
    std::ostringstream os;
    os << "config: levels " << level_min << ":" << level_max << " must satisfy 2 <= min <= max <= 12";
    throw ConfigError(os.str());
  }
  if (alphas.empty()) throw ConfigError("config: 'alpha' is empty");
  if (times.empty()) throw ConfigError("config: 't' is empty");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("config: alpha = " + fmt17(a) + " outside (0, 1]");
    if ((method == Method::l1 || !ex.has_series()) && !(a < 1.0))
      throw ConfigError("config: the L1 scheme needs alpha < 1, got " + fmt17(a));
  }
  const bool smooth = InitialData{ex.data}.series_at_zero();
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) throw ConfigError("config: t = " + fmt17(t) + " must be nonnegative");
    if (t == 0.0 && (!smooth || !ex.has_series()))
      throw ConfigError("config: t = 0 is not admissible for example '" + example + "'");
  }
  if (projection) {
    const Projection p = *projection;
    if (p == Projection::ritz && !InitialData{ex.data}.in_h10())
      throw ConfigError("config: the Ritz projection needs H^1_0 data; example '" + example + "' is not");
    if ((p == Projection::dirac) != (ex.data == InitialDataKind::dirac_d))
      throw ConfigError(std::string("config: projection '") + to_string(p) + "' does not fit example '" + example + "'");
  }
  if (l1_tau && !(*l1_tau > 0.0)) throw ConfigError("config: l1_tau must be positive");
}

int ExperimentConfig::l1_steps_for(double t) const {
  const bool fine_default = example == "e";
  const double tau = l1_tau.value_or(fine_default ? 1e-5 : t / 1000.0);
  return std::max(1, static_cast<int>(std::lround(t / tau)));
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "example") {
      cfg.example = string_field(value, "example");
    } else if (key == "method") {
      const std::string s = string_field(value, "method");
      cfg.method = wrap_config("method", [&] { return method_from_string(s); });
    } else if (key == "alpha") {
      cfg.alphas = number_list(value, "alpha");
    } else if (key == "t") {
      cfg.times = number_list(value, "t");
    } else if (key == "levels") {
      if (value.is_string()) {
        std::tie(cfg.level_min, cfg.level_max) = parse_level_range(value.get<std::string>());
      } else if (value.is_array() && value.size() == 2 && value[0].is_number_integer() &&
                 value[1].is_number_integer()) {
        cfg.level_min = value[0].get<int>();
        cfg.level_max = value[1].get<int>();
      } else {
        throw ConfigError("config: 'levels' must be \"min:max\" or [min, max]");
      }
    } else if (key == "projection") {
      const std::string s = string_field(value, "projection");
      cfg.projection = wrap_config("projection", [&] { return projection_from_string(s); });
    } else if (key == "format") {
      const std::string s = string_field(value, "format");
      cfg.format = wrap_config("format", [&] { return output_format_from_string(s); });
    } else if (key == "output") {
      cfg.output = fs::path(string_field(value, "output"));
    } else if (key == "l1_tau") {
      if (!value.is_number()) throw ConfigError("config: 'l1_tau' must be a number");
      cfg.l1_tau = value.get<double>();
    } else if (key == "recovered_gradient") {
      if (!value.is_boolean()) throw ConfigError("config: 'recovered_gradient' must be true or false");
      cfg.recovered_gradient = value.get<bool>();
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

fs::path default_output_dir() {
  if (const char* env = std::getenv("FRACFEM_OUT"); env && *env) return fs::path(env);
  return fs::path("fracfem_out");
}

void write_reference_csv(const fs::path& path, const Mesh1D& mesh, const NodalVector& values) {
  validate_mesh_vector(mesh, values, "write_reference_csv");
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << "x,value\n";
    for (int k = 0; k <= mesh.n_cells(); ++k) {
      const double v = (k == 0 || k == mesh.n_cells()) ? 0.0 : values[k - 1];
      out << fmt17(mesh.node(k)) << ',' << fmt17(v) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

FineReference read_reference_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "x,value")
    throw std::runtime_error(path.string() + ": expected header 'x,value'");
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path.string() + ": malformed line '" + line + "'");
    xs.push_back(std::stod(line.substr(0, comma)));
    vs.push_back(std::stod(line.substr(comma + 1)));
  }
  if (xs.size() < 3) throw std::runtime_error(path.string() + ": too few nodes");
  const Mesh1D mesh(static_cast<int>(xs.size()) - 1);
  for (int k = 0; k <= mesh.n_cells(); ++k)
    if (std::abs(xs[k] - mesh.node(k)) > 1e-12) throw std::runtime_error(path.string() + ": nodes are not uniform");
  return {mesh, NodalVector(vs.begin() + 1, vs.end() - 1)};
}

ReferenceResult build_reference_e(const ReferenceOptions& opt) {
  const Example ex = example_from_string("e");
  const Mesh1D mesh(opt.n_cells);
  ReferenceResult res;
  const fs::path dir = opt.cache_dir.empty() ? default_output_dir() : opt.cache_dir;
  res.cache_file = dir / reference_file_name(opt);
  if (opt.t_end == 0.0) {
    res.reference = {mesh, initial_projection(mesh, ex, Projection::interpolation)};
    return res;
  }
  fs::create_directories(dir);
  const LockFile lock(res.cache_file.string() + ".lock");
  if (!opt.force && fs::exists(res.cache_file)) {
    res.reference = read_reference_csv(res.cache_file);
    res.from_cache = true;
    spdlog::info("reference e: loaded {}", res.cache_file.string());
    return res;
  }
  const int steps = std::max(1, static_cast<int>(std::lround(opt.t_end / opt.tau)));
  spdlog::info("reference e: building h=1/{} tau={} steps={} alpha={}", opt.n_cells, opt.tau, steps, opt.alpha);
  const NodalVector l1 =
      discrete_solution(mesh, ex, Method::l1, Projection::interpolation, opt.alpha, opt.t_end, steps);
  const NodalVector spectral = discrete_solution(mesh, ex, Method::lumped, Projection::interpolation, opt.alpha, opt.t_end);
  const ErrorNorms gap = fe_reference_errors(mesh, spectral, mesh, l1, initial_l2_norm(ex.data));
  res.spectral_gap_l2 = gap.l2;
  res.spectral_gap_mid = std::abs(l1[opt.n_cells / 2 - 1] - spectral[opt.n_cells / 2 - 1]);
  spdlog::info("reference e: L1 vs spectral gap L2={:.3e} mid={:.3e}", res.spectral_gap_l2, res.spectral_gap_mid);
  write_reference_csv(res.cache_file, mesh, l1);
  res.reference = {mesh, l1};
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Example ex = example_from_string(cfg.example);
  ExperimentResult result;
  for (double alpha : cfg.alphas) {
    for (double t : cfg.times) {
      TableRequest req;
      req.example = cfg.example;
      req.method = cfg.method;
      req.alpha = alpha;
      req.t = t;
      req.levels.clear();
      for (int k = cfg.level_min; k <= cfg.level_max; ++k) req.levels.push_back(k);
      req.projection = cfg.projection;
      req.l1_steps = cfg.l1_steps_for(t);
      req.recovered_gradient = cfg.recovered_gradient;

      std::optional<ReferenceResult> ref;
      if (!ex.has_series()) {
        ReferenceOptions ro;
        ro.alpha = alpha;
        ro.t_end = t;
        ro.tau = cfg.l1_tau.value_or(1e-5);
        ref = build_reference_e(ro);
      }
      TableDiagnostics diag;
      ConvergenceTable table = build_table(req, ref ? &ref->reference : nullptr, &diag);
      const auto& rc = diag.regions.counts;
      spdlog::info("table {} levels={}:{} modes={} eig_residual={:.2e} orthonormality={:.2e}", table_label(table),
                   cfg.level_min, cfg.level_max, diag.series_modes, diag.max_eigen_residual,
                   diag.max_orthonormality_defect);
      spdlog::info("  ml regions closed_form={} taylor={} integral={} asymptotic={}", rc[0], rc[1], rc[2], rc[3]);
      if (cfg.method == Method::galerkin)
        spdlog::info("  galerkin vs lumped eigenvalue formula: max relative gap {:.3e}", diag.max_eigenvalue_gap);
      if (cfg.method == Method::l1) spdlog::info("  l1 steps={} tau={:.3e}", req.l1_steps, t / req.l1_steps);
      if (diag.max_eigen_residual > kInvariantTol || diag.max_orthonormality_defect > kInvariantTol) {
        std::ostringstream os;
        os << "eigensystem check failed for " << table_label(table) << ": residual " << diag.max_eigen_residual
           << ", orthonormality " << diag.max_orthonormality_defect;
        throw NumericalInvariantError(os.str());
      }
      result.tables.push_back(std::move(table));
      result.diagnostics.push_back(diag);
    }
  }
  return result;
}

std::string format_sci3(double v) {
  if (!std::isfinite(v)) return fmt17(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  const std::string mant = s.substr(0, e);
  const int ex = std::stoi(s.substr(e + 1));
  if (ex == 0 && mant.find("e") == std::string::npos) return mant + "e0";
  return mant + "e" + std::to_string(ex);
}

void emit_csv(const ConvergenceTable& table, std::ostream& os) {
  os << "h,l2_error,h1_error,gh_error,l2_ratio,h1_ratio\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ErrorRecord& r = table.rows[i];
    os << fmt17(r.h) << ',' << fmt17(r.l2_error) << ',' << fmt17(r.h1_error) << ',';
    if (r.gh_error) os << fmt17(*r.gh_error);
    os << ',';
    if (i > 0 && i - 1 < table.l2_ratios.size()) os << fmt17(table.l2_ratios[i - 1]);
    os << ',';
    if (i > 0 && i - 1 < table.h1_ratios.size()) os << fmt17(table.h1_ratios[i - 1]);
    os << '\n';
  }
}

void emit_markdown(const ConvergenceTable& table, std::ostream& os) {
  const bool gh = !table.rows.empty() && table.rows.front().gh_error.has_value();
  os << "| h | L2-error | H1-error |" << (gh ? " G_h-error |" : "") << " L2 ratio | H1 ratio |\n";
  os << "|---|---|---|" << (gh ? "---|" : "") << "---|---|\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ErrorRecord& r = table.rows[i];
    os << "| 1/" << std::lround(1.0 / r.h) << " | " << format_sci3(r.l2_error) << " | " << format_sci3(r.h1_error)
       << " |";
    if (gh) os << ' ' << (r.gh_error ? format_sci3(*r.gh_error) : "") << " |";
    const auto ratio = [&](const std::vector<double>& v) {
      if (i == 0 || i - 1 >= v.size()) return std::string();
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.2f", v[i - 1]);
      return std::string(buf);
    };
    os << ' ' << ratio(table.l2_ratios) << " | " << ratio(table.h1_ratios) << " |\n";
  }
  if (table.rows.size() > 1) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "\nratio (geometric mean): L2 %.2f, H1 %.2f\n", table.l2_ratio(), table.h1_ratio());
    os << buf;
  }
}

void emit(const ConvergenceTable& table, OutputFormat format, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (format == OutputFormat::csv) emit_csv(table, out);
  else emit_markdown(table, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ConvergenceTable parse_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "h,l2_error,h1_error,gh_error,l2_ratio,h1_ratio")
    throw std::runtime_error("table csv: unexpected header");
  ConvergenceTable table;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    while (cells.size() < 6) cells.emplace_back();
    ErrorRecord r;
    r.h = std::stod(cells[0]);
    r.l2_error = std::stod(cells[1]);
    r.h1_error = std::stod(cells[2]);
    if (!cells[3].empty()) r.gh_error = std::stod(cells[3]);
    if (!cells[4].empty()) table.l2_ratios.push_back(std::stod(cells[4]));
    if (!cells[5].empty()) table.h1_ratios.push_back(std::stod(cells[5]));
    table.rows.push_back(r);
  }
  return table;
}

ConvergenceTable read_table_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_table_csv(in);
}

void emit_plot_data(const std::vector<ConvergenceTable>& tables, std::ostream& os) {
  for (const auto& t : tables) {
    const auto curve = [&](const char* norm, auto get) {
      os << "# " << table_label(t) << " norm=" << norm << '\n';
      for (const auto& r : t.rows) {
        const std::optional<double> e = get(r);
        if (!e) continue;
        os << fmt17(std::log2(1.0 / r.h)) << ',' << fmt17(std::log10(*e)) << '\n';
      }
    };
    curve("l2", [](const ErrorRecord& r) { return std::optional<double>(r.l2_error); });
    curve("h1", [](const ErrorRecord& r) { return std::optional<double>(r.h1_error); });
    if (!t.rows.empty() && t.rows.front().gh_error) curve("gh", [](const ErrorRecord& r) { return r.gh_error; });
  }
}

}  // namespace fracfem
