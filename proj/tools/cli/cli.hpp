#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qwalk/harness.hpp>
#include <qwalk/limit_law.hpp>
#include <qwalk/types.hpp>

namespace qwalk::cli {

enum class Command { simulate, density, compare, sweep };
enum class Format { csv, json };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Format f) noexcept;

struct Grid {
  int rho_steps = 9;
  int nu_steps = 17;
  double nu_min = -std::numbers::pi;
  double nu_max = std::numbers::pi;
  // When absent, rho runs over i / (rho_steps + 1), i = 1..rho_steps.
  std::optional<double> rho_min;
  std::optional<double> rho_max;

  std::vector<double> rho_values() const;
  std::vector<double> nu_values() const;
};

struct RunConfig {
  Command command = Command::simulate;
  double rho = std::numbers::sqrt2 / 2.0;
  double nu = std::numbers::pi / 2.0;
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
  std::int64_t t = 100;
  Variant variant = Variant::full;
  LawTag law = LawTag::theorem1;
  int n = 0;
  Grid grid;
  std::string out = "-";
  Format format = Format::csv;

  CoinSpinor coin() const { return {alpha, beta}; }
  LawKind law_kind() const;
};

/// Angle token: raw radians or [-][k][*]pi[/d], e.g. "pi/2", "-pi/4", "3pi/2".
double parse_angle(std::string_view s);
/// Real token: a number, or one of "1/sqrt(2)", "sqrt(2)/2" (with optional sign).
double parse_real(std::string_view s);
/// "re,im" with each part a real token.
cplx parse_complex(std::string_view s);
/// "rho_steps,nu_steps,nu_min,nu_max[,rho_min,rho_max]".
Grid parse_grid(std::string_view s);

/// Reads a flat key=value file; '#' starts a comment. Keys are the long flag
/// names without dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Parses argv into a config. Config-file entries are applied first so that
/// flags override them. Throws ValidationError on any bad input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Checks every precondition of the selected command without doing any of
/// the work. Throws ValidationError.
void validate(const RunConfig& cfg);

/// Renders the command output in memory. Throws ValidationError.
std::string render(const RunConfig& cfg);

std::string render_simulate(const RunConfig& cfg);
std::string render_density(const RunConfig& cfg);
std::string render_compare(const RunConfig& cfg);
std::string render_sweep(const RunConfig& cfg);

/// Density grid: 2001 points over the support padded by 5% on each side.
std::vector<std::pair<double, double>> density_table(const LimitDensity& law);

struct SweepRow {
  double rho;
  double nu;
  double h_star;
};
/// Rows in rho-major order, computed on up to `threads` worker threads.
std::vector<SweepRow> sweep_rows(const Grid& grid, unsigned threads = 0);

ComparisonReport report_from_json(std::string_view text);
std::string report_to_json(const ComparisonReport& rep);

/// Full command-line entry point; returns the process exit code
/// (0 success, 2 validation failure, 1 I/O failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats a double with 17 significant digits.
std::string fmt_double(double v);

}  // namespace qwalk::cli
