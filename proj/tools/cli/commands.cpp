#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <qwalk/walk.hpp>

#include "cli.hpp"

namespace qwalk::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kDensityPoints = 2001;
constexpr double kDensityPad = 1.05;

void append_row(std::string& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out.push_back(',');
    out += c;
    first = false;
  }
  out.push_back('\n');
}

std::string fmt_int(std::int64_t v) { return std::to_string(v); }

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json config_json(const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = std::string(to_string(cfg.command));
  return j;
}

void add_walk_fields(json& j, const RunConfig& cfg) {
  j["rho"] = cfg.rho;
  j["nu"] = cfg.nu;
  j["alpha"] = complex_json(cfg.alpha);
  j["beta"] = complex_json(cfg.beta);
}

void add_law_fields(json& j, const LawKind& kind) {
  j["law"] = std::string(to_string(kind.tag));
  j["n"] = kind.n;
}

void write_report_json(json& j, const ComparisonReport& rep) {
  j["t"] = rep.t;
  j["variant"] = std::string(to_string(rep.variant));
  add_law_fields(j, rep.law);
  j["ks_distance"] = rep.ks_distance;
  j["smoothing_width"] = rep.smoothing_width;
  j["envelope_deviation"] = rep.envelope_deviation;
  json moments = json::array();
  for (const auto& m : rep.moment_errors) {
    moments.push_back(
        {{"r", m.r}, {"empirical", m.empirical}, {"limit", m.limit}, {"abs_error", m.abs_error}});
  }
  j["moment_errors"] = std::move(moments);
  json points = json::array();
  for (const auto& p : rep.rescaled_points) {
    points.push_back({{"x", p.x}, {"simulated", p.simulated}, {"approx", p.approx}});
  }
  j["rescaled_points"] = std::move(points);
}

ComparisonReport compute_report(const RunConfig& cfg) {
  const WalkParams params(cfg.rho, cfg.nu);
  return run_comparison(params, cfg.coin(), cfg.t, cfg.variant, cfg.law_kind());
}

}  // namespace

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate(const RunConfig& cfg) {
  if (cfg.command == Command::sweep) {
    if (cfg.grid.rho_steps < 2 || cfg.grid.nu_steps < 2) {
      throw ValidationError("sweep grid needs at least 2 steps in each direction");
    }
    if (cfg.grid.rho_min.has_value() != cfg.grid.rho_max.has_value()) {
      throw ValidationError("sweep grid needs both rho_min and rho_max");
    }
    for (double rho : cfg.grid.rho_values()) WalkParams(rho, 0.0);
    return;
  }
  const WalkParams params(cfg.rho, cfg.nu);
  const CoinSpinor coin = cfg.coin();
  require_normalized(coin);
  if (cfg.command == Command::simulate || cfg.command == Command::compare) {
    if (cfg.t < 0) throw ValidationError("t must be nonnegative, got " + std::to_string(cfg.t));
  }
  if (cfg.command == Command::density || cfg.command == Command::compare) {
    LimitDensity law(cfg.law_kind(), params, coin);
    (void)law;
  }
  if (cfg.command == Command::compare) require_compatible(cfg.variant, cfg.law_kind());
}

std::string render_simulate(const RunConfig& cfg) {
  validate(cfg);
  const WalkParams params(cfg.rho, cfg.nu);
  const WaveState state = evolve(cfg.coin(), params, cfg.t, cfg.variant);
  const Distribution dist = distribution(state);

  if (cfg.format == Format::json) {
    json j = config_json(cfg);
    add_walk_fields(j, cfg);
    j["t"] = cfg.t;
    j["variant"] = std::string(to_string(cfg.variant));
    json rows = json::array();
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
      const auto& a = state.amps[i];
      rows.push_back({{"x", state.x_min + static_cast<std::int64_t>(i)},
                      {"prob", dist.probs[i]},
                      {"amp0_re", a.a0.real()},
                      {"amp0_im", a.a0.imag()},
                      {"amp1_re", a.a1.real()},
                      {"amp1_im", a.a1.imag()}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }

  std::string out;
  append_row(out, {"x", "prob", "amp0_re", "amp0_im", "amp1_re", "amp1_im"});
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    const auto& a = state.amps[i];
    append_row(out, {fmt_int(state.x_min + static_cast<std::int64_t>(i)), fmt_double(dist.probs[i]),
                     fmt_double(a.a0.real()), fmt_double(a.a0.imag()), fmt_double(a.a1.real()),
                     fmt_double(a.a1.imag())});
  }
  return out;
}

std::vector<std::pair<double, double>> density_table(const LimitDensity& law) {
  const double half = kDensityPad * law.support_hi();
  std::vector<std::pair<double, double>> rows;
  rows.reserve(kDensityPoints);
  for (int i = 0; i < kDensityPoints; ++i) {
    const double x = std::lerp(-half, half, static_cast<double>(i) / (kDensityPoints - 1));
    rows.emplace_back(x, law(x));
  }
  return rows;
}

std::string render_density(const RunConfig& cfg) {
  validate(cfg);
  const WalkParams params(cfg.rho, cfg.nu);
  const LimitDensity law(cfg.law_kind(), params, cfg.coin());
  const auto rows = density_table(law);

  if (cfg.format == Format::json) {
    json j = config_json(cfg);
    add_walk_fields(j, cfg);
    add_law_fields(j, law.kind());
    j["support_hi"] = law.support_hi();
    j["coeff"] = law.coeff();
    json arr = json::array();
    for (const auto& [x, d] : rows) arr.push_back({{"x", x}, {"density", d}});
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::string out;
  append_row(out, {"x", "density"});
  for (const auto& [x, d] : rows) append_row(out, {fmt_double(x), fmt_double(d)});
  return out;
}

std::string render_compare(const RunConfig& cfg) {
  validate(cfg);
  const ComparisonReport rep = compute_report(cfg);

  if (cfg.format == Format::json) {
    json j = config_json(cfg);
    add_walk_fields(j, cfg);
    write_report_json(j, rep);
    return j.dump(2) + "\n";
  }

  std::string out;
  auto kv = [&out](const std::string& k, const std::string& v) { out += "# " + k + "," + v + "\n"; };
  kv("t", fmt_int(rep.t));
  kv("variant", std::string(to_string(rep.variant)));
  kv("law", std::string(to_string(rep.law.tag)));
  kv("n", fmt_int(rep.law.n));
  kv("ks_distance", fmt_double(rep.ks_distance));
  kv("smoothing_width", fmt_int(rep.smoothing_width));
  kv("envelope_deviation", fmt_double(rep.envelope_deviation));
  for (const auto& m : rep.moment_errors) {
    const std::string prefix = "moment_" + std::to_string(m.r) + "_";
    kv(prefix + "empirical", fmt_double(m.empirical));
    kv(prefix + "limit", fmt_double(m.limit));
    kv(prefix + "abs_error", fmt_double(m.abs_error));
  }
  append_row(out, {"x", "simulated", "approx"});
  for (const auto& p : rep.rescaled_points) {
    append_row(out, {fmt_int(p.x), fmt_double(p.simulated), fmt_double(p.approx)});
  }
  return out;
}

std::vector<SweepRow> sweep_rows(const Grid& grid, unsigned threads) {
  const auto rhos = grid.rho_values();
  const auto nus = grid.nu_values();
  std::vector<SweepRow> rows(rhos.size() * nus.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rhos.size()));

  // Each worker owns a strided set of rho rows and writes into its own slots,
  // so the output order does not depend on scheduling.
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < rhos.size(); i += threads) {
      for (std::size_t j = 0; j < nus.size(); ++j) {
        const WalkParams p(rhos[i], nus[j]);
        rows[i * nus.size() + j] = {rhos[i], nus[j], support_hstar(p)};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();
  return rows;
}

std::string render_sweep(const RunConfig& cfg) {
  validate(cfg);
  const auto rows = sweep_rows(cfg.grid);

  if (cfg.format == Format::json) {
    json j = config_json(cfg);
    j["grid"] = {{"rho_steps", cfg.grid.rho_steps},
                 {"nu_steps", cfg.grid.nu_steps},
                 {"nu_min", cfg.grid.nu_min},
                 {"nu_max", cfg.grid.nu_max}};
    if (cfg.grid.rho_min) {
      j["grid"]["rho_min"] = *cfg.grid.rho_min;
      j["grid"]["rho_max"] = *cfg.grid.rho_max;
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"rho", r.rho}, {"nu", r.nu}, {"h_star", r.h_star}});
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::string out;
  append_row(out, {"rho", "nu", "h_star"});
  for (const auto& r : rows) append_row(out, {fmt_double(r.rho), fmt_double(r.nu), fmt_double(r.h_star)});
  return out;
}

std::string render(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::simulate: return render_simulate(cfg);
    case Command::density: return render_density(cfg);
    case Command::compare: return render_compare(cfg);
    case Command::sweep: return render_sweep(cfg);
  }
  throw ValidationError("unknown command");
}

std::string report_to_json(const ComparisonReport& rep) {
  json j;
  j["schema_version"] = kSchemaVersion;
  write_report_json(j, rep);
  return j.dump(2) + "\n";
}

ComparisonReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw ValidationError("unsupported report schema_version");
  }
  try {
    ComparisonReport rep;
    rep.t = j.at("t").get<std::int64_t>();
    rep.variant = parse_variant(j.at("variant").get<std::string>());
    rep.law.tag = parse_law(j.at("law").get<std::string>());
    rep.law.n = j.at("n").get<int>();
    rep.ks_distance = j.at("ks_distance").get<double>();
    rep.smoothing_width = j.at("smoothing_width").get<int>();
    rep.envelope_deviation = j.at("envelope_deviation").get<double>();
    for (const auto& m : j.at("moment_errors")) {
      rep.moment_errors.push_back({m.at("r").get<int>(), m.at("empirical").get<double>(),
                                   m.at("limit").get<double>(), m.at("abs_error").get<double>()});
    }
    for (const auto& p : j.at("rescaled_points")) {
      rep.rescaled_points.push_back(
          {p.at("x").get<std::int64_t>(), p.at("approx").get<double>(), p.at("simulated").get<double>()});
    }
    return rep;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string text;
  try {
    cfg = parse_args(args);
    text = render(cfg);
  } catch (const CLI::CallForHelp&) {
    out << "usage: qwalk simulate|density|compare|sweep [--rho R] [--nu NU] [--alpha RE,IM]\n"
           "             [--beta RE,IM] [--t T] [--variant full|cmv_only]\n"
           "             [--law theorem1|standard|cmv_only] [--n N]\n"
           "             [--grid RS,NS,NU_MIN,NU_MAX[,RHO_MIN,RHO_MAX]]\n"
           "             [--out PATH] [--format csv|json] [--config FILE]\n";
    return 0;
  } catch (const ValidationError& e) {
    err << "qwalk: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "qwalk: " << e.what() << "\n";
    return 2;
  }

  if (cfg.out == "-") {
    out << text;
    out.flush();
    if (!out) {
      err << "qwalk: failed writing to stdout\n";
      return 1;
    }
    return 0;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "qwalk: cannot open '" << cfg.out << "' for writing: " << std::strerror(errno) << "\n";
    return 1;
  }
  file << text;
  file.close();
  if (!file) {
    err << "qwalk: failed writing '" << cfg.out << "': " << std::strerror(errno) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qwalk::cli
