#include "qwalk/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

namespace qwalk::quad {
namespace {
constexpr unsigned kOrder = 20;
using Rule = boost::math::quadrature::gauss<double, kOrder>;
}  // namespace

double integrate_arcsine(const std::function<double(double)>& f, double half_width, double upper,
                         int panels) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (upper <= -half_width) return 0.0;
  const double theta_hi = upper >= half_width ? kHalfPi : std::asin(upper / half_width);
  const double span = theta_hi + kHalfPi;
  const int n = std::max(1, static_cast<int>(std::ceil(panels * span / std::numbers::pi)));
  const double width = span / n;
  auto g = [&](double theta) { return f(half_width * std::sin(theta)) * half_width * std::cos(theta); };
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = -kHalfPi + width * i;
    total += Rule::integrate(g, a, i + 1 == n ? theta_hi : a + width);
  }
  return total;
}

double integrate_arcsine(const std::function<double(double)>& f, double half_width, int panels) {
  return integrate_arcsine(f, half_width, half_width, panels);
}

std::vector<double> cumulative_arcsine(const std::function<double(double)>& f, double half_width,
                                       std::size_t n) {
  using Cell = boost::math::quadrature::gauss<double, 7>;
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  const double step = std::numbers::pi / static_cast<double>(n - 1);
  auto g = [&](double theta) { return f(half_width * std::sin(theta)) * half_width * std::cos(theta); };
  for (std::size_t i = 1; i < n; ++i) {
    const double a = -std::numbers::pi / 2.0 + step * static_cast<double>(i - 1);
    out[i] = out[i - 1] + Cell::integrate(g, a, a + step);
  }
  return out;
}

int arcsine_node_count(int panels) { return panels * static_cast<int>(kOrder); }

}  // namespace qwalk::quad
