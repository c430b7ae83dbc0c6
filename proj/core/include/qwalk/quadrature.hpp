#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qwalk::quad {

/// Integrates f over (-half_width, upper] where f may blow up like an inverse
/// square root at both ends of (-half_width, half_width). The substitution
/// y = half_width * sin(theta) turns the integrand smooth; the theta range is
/// then covered by 20-point Gauss-Legendre panels, `panels` of them per pi.
double integrate_arcsine(const std::function<double(double)>& f, double half_width, double upper,
                         int panels = 64);

/// Same over the whole interval (-half_width, half_width).
double integrate_arcsine(const std::function<double(double)>& f, double half_width,
                         int panels = 64);

/// Cumulative integrals of f from -half_width up to half_width * sin(theta_i) on
/// the uniform grid theta_i = -pi/2 + pi i / (n - 1), i = 0..n-1. Each cell is
/// integrated with a 7-point Gauss-Legendre rule.
std::vector<double> cumulative_arcsine(const std::function<double(double)>& f, double half_width,
                                       std::size_t n);

/// Number of integrand evaluations used for the full interval.
int arcsine_node_count(int panels = 64);

}  // namespace qwalk::quad
