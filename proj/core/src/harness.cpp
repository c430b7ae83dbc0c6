#include "qwalk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/quadrature.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

LimitCdfTable::LimitCdfTable(const LimitDensity& law, std::size_t grid_points)
    : half_width_(law.support_hi()),
      values_(quad::cumulative_arcsine([&](double y) { return law(y); }, law.support_hi(),
                                       std::max<std::size_t>(grid_points, 2))) {}

double LimitCdfTable::operator()(double x) const noexcept {
  if (x <= -half_width_) return 0.0;
  if (x >= half_width_) return values_.back();
  const double theta = std::asin(x / half_width_);
  const double u = (theta / std::numbers::pi + 0.5) * static_cast<double>(values_.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(u), values_.size() - 2);
  const double frac = u - static_cast<double>(i);
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double empirical_moment(const Distribution& dist, std::int64_t t, int r) {
  if (t < 1) throw ValidationError("empirical_moment needs t >= 1");
  if (r < 0) throw ValidationError("moment order must be nonnegative");
  const double inv_t = 1.0 / static_cast<double>(t);
  double s = 0.0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    const double y = static_cast<double>(dist.x_min + static_cast<std::int64_t>(i)) * inv_t;
    s += std::pow(y, r) * dist.probs[i];
  }
  return s;
}

double kolmogorov_distance(const Distribution& dist, std::int64_t t, const LimitCdfTable& limit) {
  if (t < 1) throw ValidationError("kolmogorov_distance needs t >= 1");
  const double inv_t = 1.0 / static_cast<double>(t);
  double running = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    running += dist.probs[i];
    const double y = static_cast<double>(dist.x_min + static_cast<std::int64_t>(i)) * inv_t;
    sup = std::max(sup, std::abs(running - limit(y)));
  }
  return std::min(sup, 1.0);
}

double kolmogorov_distance(const Distribution& dist, std::int64_t t, const LimitDensity& law) {
  return kolmogorov_distance(dist, t, LimitCdfTable(law));
}

std::vector<std::pair<std::int64_t, double>> rescaled_density_points(const LimitDensity& law,
                                                                     std::int64_t t) {
  if (t < 1) throw ValidationError("rescaled_density_points needs t >= 1");
  const double inv_t = 1.0 / static_cast<double>(t);
  std::vector<std::pair<std::int64_t, double>> pts;
  pts.reserve(static_cast<std::size_t>(2 * t + 1));
  for (std::int64_t x = -t; x <= t; ++x) {
    pts.emplace_back(x, law(static_cast<double>(x) * inv_t) * inv_t);
  }
  return pts;
}

std::vector<double> moving_average(const Distribution& dist, int width) {
  if (width < 1 || width % 2 == 0) throw ValidationError("smoothing width must be odd and positive");
  const auto n = static_cast<std::int64_t>(dist.probs.size());
  const std::int64_t half = width / 2;
  std::vector<double> out(dist.probs.size(), 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::int64_t j = std::max<std::int64_t>(0, i - half); j <= std::min(n - 1, i + half); ++j) {
      s += dist.probs[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = s / width;
  }
  return out;
}

void require_compatible(Variant variant, LawKind law) {
  const bool ok = variant == Variant::full ? law.tag != LawTag::cmv_only : law.tag == LawTag::cmv_only;
  if (!ok) {
    throw ValidationError("law '" + std::string(to_string(law.tag)) +
                          "' does not describe the '" + std::string(to_string(variant)) + "' walk");
  }
}

ComparisonReport compare_distribution(const Distribution& dist, std::int64_t t,
                                      const LimitDensity& law, Variant variant,
                                      const std::vector<int>& moment_orders, int smoothing_width) {
  require_compatible(variant, law.kind());
  if (t < 0) throw ValidationError("time must be nonnegative");
  ComparisonReport rep;
  rep.t = t;
  rep.variant = variant;
  rep.law = law.kind();
  rep.smoothing_width = smoothing_width;

  const LimitCdfTable table(law);
  if (t == 0) {
    // Point mass at the origin against the continuous limit CDF.
    const double f0 = table(0.0);
    rep.ks_distance = std::max(f0, 1.0 - f0);
  } else {
    rep.ks_distance = kolmogorov_distance(dist, t, table);
  }

  for (int r : moment_orders) {
    MomentError e;
    e.r = r;
    e.empirical = t == 0 ? (r == 0 ? 1.0 : 0.0) : empirical_moment(dist, t, r);
    e.limit = moment(law, r);
    e.abs_error = std::abs(e.empirical - e.limit);
    rep.moment_errors.push_back(e);
  }

  const std::vector<double> smooth = moving_average(dist, smoothing_width);
  const double inv_t = t == 0 ? 0.0 : 1.0 / static_cast<double>(t);
  double dev = 0.0;
  rep.rescaled_points.reserve(dist.probs.size());
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    const std::int64_t x = dist.x_min + static_cast<std::int64_t>(i);
    const double approx = t == 0 ? 0.0 : law(static_cast<double>(x) * inv_t) * inv_t;
    rep.rescaled_points.push_back({x, approx, dist.probs[i]});
    dev += std::abs(approx - smooth[i]);
  }
  rep.envelope_deviation = dist.probs.empty() ? 0.0 : dev / static_cast<double>(dist.probs.size());
  return rep;
}

ComparisonReport run_comparison(const WalkParams& params, const CoinSpinor& coin, std::int64_t t,
                                Variant variant, LawKind law_kind,
                                const std::vector<int>& moment_orders, int smoothing_width) {
  require_compatible(variant, law_kind);
  const LimitDensity law(law_kind, params, coin);
  const Distribution dist = distribution(evolve(coin, params, t, variant));
  return compare_distribution(dist, t, law, variant, moment_orders, smoothing_width);
}

}  // namespace qwalk
