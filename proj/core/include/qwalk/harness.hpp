#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qwalk/limit_law.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Limit CDF tabulated on a uniform grid in theta (x = h sin theta) and
/// interpolated linearly in theta, which keeps it monotone and resolves the
/// inverse-square-root ends.
class LimitCdfTable {
 public:
  explicit LimitCdfTable(const LimitDensity& law, std::size_t grid_points = 4096);

  double operator()(double x) const noexcept;
  double support_hi() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  double half_width_;
  std::vector<double> values_;
};

/// sum_x (x/t)^r P(X_t = x). Throws ValidationError for t < 1 or r < 0.
double empirical_moment(const Distribution& dist, std::int64_t t, int r);

/// max over lattice sites x of |sum_{y <= x} P(y) - F(x / t)|.
double kolmogorov_distance(const Distribution& dist, std::int64_t t, const LimitCdfTable& limit);
double kolmogorov_distance(const Distribution& dist, std::int64_t t, const LimitDensity& law);

/// (x, density(x / t) / t) for every site x in [-t, t].
std::vector<std::pair<std::int64_t, double>> rescaled_density_points(const LimitDensity& law,
                                                                     std::int64_t t);

/// Centered moving average of width `width` (odd), zero outside the window.
std::vector<double> moving_average(const Distribution& dist, int width);

struct MomentError {
  int r = 0;
  double empirical = 0.0;
  double limit = 0.0;
  double abs_error = 0.0;

  friend bool operator==(const MomentError&, const MomentError&) = default;
};

struct RescaledPoint {
  std::int64_t x = 0;
  double approx = 0.0;
  double simulated = 0.0;

  friend bool operator==(const RescaledPoint&, const RescaledPoint&) = default;
};

struct ComparisonReport {
  std::int64_t t = 0;
  Variant variant = Variant::full;
  LawKind law{};
  double ks_distance = 0.0;
  std::vector<MomentError> moment_errors;
  std::vector<RescaledPoint> rescaled_points;
  int smoothing_width = 5;
  /// Mean |approx - moving average of simulated| over rescaled_points.
  double envelope_deviation = 0.0;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

/// Throws ValidationError unless the law belongs to the walk variant
/// (theorem1 or standard for the full walk, cmv_only for the V-only walk).
void require_compatible(Variant variant, LawKind law);

/// Evolves the walk to time t and scores it against the limit law.
/// At t = 0 the rescaled position is taken to be 0, so the Kolmogorov distance
/// is the size of the point-mass step against the limit CDF at 0.
ComparisonReport run_comparison(const WalkParams& params, const CoinSpinor& coin, std::int64_t t,
                                Variant variant, LawKind law,
                                const std::vector<int>& moment_orders = {1, 2, 3},
                                int smoothing_width = 5);

/// Same, scoring an already evolved distribution.
ComparisonReport compare_distribution(const Distribution& dist, std::int64_t t,
                                      const LimitDensity& law, Variant variant,
                                      const std::vector<int>& moment_orders = {1, 2, 3},
                                      int smoothing_width = 5);

}  // namespace qwalk
