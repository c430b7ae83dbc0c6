#include "qwalk/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

WalkParams::WalkParams(double rho, double nu) : rho_(rho), nu_(nu) {
  if (!std::isfinite(rho) || !(rho > 0.0 && rho < 1.0)) {
    throw ValidationError("rho must lie in the open interval (0,1), got " + std::to_string(rho));
  }
  if (!std::isfinite(nu)) {
    throw ValidationError("nu must be finite");
  }
  // (1-rho)(1+rho) keeps full relative precision as rho -> 1.
  rho0_ = std::sqrt((1.0 - rho) * (1.0 + rho));
  alpha0_ = std::polar(rho, nu);
}

bool WalkParams::is_special() const noexcept {
  constexpr double kTol = 1e-12;
  if (std::abs(rho_ - std::numbers::sqrt2 / 2.0) > kTol) return false;
  return std::abs(std::abs(std::sin(nu_)) - 1.0) < kTol;
}

void require_normalized(const CoinSpinor& coin, double tol) {
  const double n = coin.norm_sq();
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
    throw ValidationError("coin state must satisfy |alpha|^2 + |beta|^2 = 1 (got " +
                          std::to_string(n) + ")");
  }
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::full:
      return "full";
    case Variant::cmv_only:
      return "cmv_only";
  }
  return "full";
}

Variant parse_variant(std::string_view s) {
  if (s == "full") return Variant::full;
  if (s == "cmv_only" || s == "cmv-only" || s == "cmv") return Variant::cmv_only;
  throw ValidationError("unknown variant '" + std::string(s) + "' (expected full|cmv_only)");
}

double WaveState::norm_sq() const noexcept {
  double s = 0.0;
  for (const auto& a : amps) s += a.norm_sq();
  return s;
}

double Distribution::at(std::int64_t x) const noexcept {
  if (x < x_min || x > x_max()) return 0.0;
  return probs[static_cast<std::size_t>(x - x_min)];
}

double Distribution::total() const noexcept {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

}  // namespace qwalk
