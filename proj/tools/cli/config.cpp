#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace qwalk::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

double parse_number(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t parse_integer(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Command parse_command(std::string_view s) {
  if (s == "simulate") return Command::simulate;
  if (s == "density") return Command::density;
  if (s == "compare") return Command::compare;
  if (s == "sweep") return Command::sweep;
  throw ValidationError("unknown command '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ValidationError("unknown format '" + std::string(s) + "'");
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {"rho", "nu",  "alpha", "beta", "t",   "variant",
                                                "law", "n",   "grid",  "out",  "format"};
  return keys;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::simulate: return "simulate";
    case Command::density: return "density";
    case Command::compare: return "compare";
    case Command::sweep: return "sweep";
  }
  return "?";
}

std::string_view to_string(Format f) noexcept { return f == Format::csv ? "csv" : "json"; }

LawKind RunConfig::law_kind() const {
  switch (law) {
    case LawTag::theorem1: return LawKind::theorem1();
    case LawTag::standard: return LawKind::standard(n);
    case LawTag::cmv_only: return LawKind::cmv_only();
  }
  return LawKind::theorem1();
}

double parse_angle(std::string_view s) {
  const std::string tok = lower(s);
  const auto pi_pos = tok.find("pi");
  if (pi_pos == std::string::npos) return parse_number(tok, "angle");

  std::string_view head = std::string_view(tok).substr(0, pi_pos);
  std::string_view tail = std::string_view(tok).substr(pi_pos + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  const double mult = head.empty() ? 1.0 : parse_number(head, "angle");
  double div = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw ValidationError("invalid angle '" + std::string(s) + "'");
    div = parse_number(tail.substr(1), "angle");
    if (div == 0.0) throw ValidationError("invalid angle '" + std::string(s) + "'");
  }
  return sign * (mult * std::numbers::pi) / div;
}

double parse_real(std::string_view s) {
  std::string tok = lower(s);
  double sign = 1.0;
  if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
    sign = tok.front() == '-' ? -1.0 : 1.0;
    tok.erase(0, 1);
  }
  if (tok == "1/sqrt(2)" || tok == "sqrt(2)/2" || tok == "1/sqrt2" || tok == "sqrt2/2") {
    return sign * std::numbers::sqrt2 / 2.0;
  }
  return sign * parse_number(tok, "number");
}

cplx parse_complex(std::string_view s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) {
    throw ValidationError("complex value must be 're,im', got '" + std::string(s) + "'");
  }
  return {parse_real(parts[0]), parse_real(parts[1])};
}

Grid parse_grid(std::string_view s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4 && parts.size() != 6) {
    throw ValidationError("grid must be 'rho_steps,nu_steps,nu_min,nu_max[,rho_min,rho_max]'");
  }
  Grid g;
  g.rho_steps = static_cast<int>(parse_integer(parts[0], "grid rho_steps"));
  g.nu_steps = static_cast<int>(parse_integer(parts[1], "grid nu_steps"));
  g.nu_min = parse_angle(parts[2]);
  g.nu_max = parse_angle(parts[3]);
  if (parts.size() == 6) {
    g.rho_min = parse_real(parts[4]);
    g.rho_max = parse_real(parts[5]);
  }
  return g;
}

std::vector<double> Grid::rho_values() const {
  std::vector<double> v;
  for (int i = 0; i < rho_steps; ++i) {
    if (rho_min && rho_max) {
      const double u = rho_steps == 1 ? 0.0 : static_cast<double>(i) / (rho_steps - 1);
      v.push_back(std::lerp(*rho_min, *rho_max, u));
    } else {
      v.push_back(static_cast<double>(i + 1) / (rho_steps + 1));
    }
  }
  return v;
}

std::vector<double> Grid::nu_values() const {
  std::vector<double> v;
  for (int i = 0; i < nu_steps; ++i) {
    const double u = nu_steps == 1 ? 0.0 : static_cast<double>(i) / (nu_steps - 1);
    v.push_back(std::lerp(nu_min, nu_max, u));
  }
  return v;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key(trim(v.substr(0, eq)));
    std::string value(trim(v.substr(eq + 1)));
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  // A config file is spliced in ahead of the real flags; with "take last"
  // semantics the command line then wins.
  std::vector<std::string> tokens;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw ValidationError("--config needs a path");
      for (auto& [k, v] : read_config_file(args[++i])) tokens.push_back("--" + k + "=" + v);
    } else if (a.rfind("--config=", 0) == 0) {
      for (auto& [k, v] : read_config_file(a.substr(9))) tokens.push_back("--" + k + "=" + v);
    } else {
      rest.push_back(a);
    }
  }
  tokens.insert(tokens.end(), rest.begin(), rest.end());

  CLI::App app{"qwalk: five-diagonal quantum walk simulator", "qwalk"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.allow_extras(false);

  std::string command, rho, nu, alpha, beta, variant, law, grid, format;
  std::string t_str, n_str, out = "-";
  app.add_option("command", command, "simulate | density | compare | sweep")->required();
  app.add_option("--rho", rho, "rho in (0,1); accepts 1/sqrt(2)");
  app.add_option("--nu", nu, "phase in radians; accepts pi/2, -pi/4, 3pi/2, ...");
  app.add_option("--alpha", alpha, "coin amplitude on |0> as re,im");
  app.add_option("--beta", beta, "coin amplitude on |1> as re,im");
  app.add_option("--t", t_str, "time steps");
  app.add_option("--variant", variant, "full | cmv_only");
  app.add_option("--law", law, "theorem1 | standard | cmv_only");
  app.add_option("--n", n_str, "index n of the standard law");
  app.add_option("--grid", grid, "rho_steps,nu_steps,nu_min,nu_max[,rho_min,rho_max]");
  app.add_option("--out", out, "output path, - for stdout");
  app.add_option("--format", format, "csv | json");

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  RunConfig cfg;
  cfg.command = parse_command(command);
  if (!rho.empty()) cfg.rho = parse_real(rho);
  if (!nu.empty()) cfg.nu = parse_angle(nu);
  if (!alpha.empty()) cfg.alpha = parse_complex(alpha);
  if (!beta.empty()) cfg.beta = parse_complex(beta);
  if (!t_str.empty()) cfg.t = parse_integer(t_str, "t");
  if (!variant.empty()) cfg.variant = parse_variant(variant);
  if (!law.empty()) cfg.law = parse_law(law);
  if (!n_str.empty()) cfg.n = static_cast<int>(parse_integer(n_str, "n"));
  if (!grid.empty()) cfg.grid = parse_grid(grid);
  cfg.out = out;
  if (!format.empty()) cfg.format = parse_format(format);
  return cfg;
}

}  // namespace qwalk::cli
