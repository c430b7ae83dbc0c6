#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

/// Raised when an input violates a documented precondition (bad rho, an
/// unnormalized coin, a negative time, an inconsistent walk/law pairing).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by functions that are only defined strictly inside the support of
/// a limit density.
class OutOfSupport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an eigenvector normalization factor collapses to zero, which
/// happens at isolated momenta for rho = 1/sqrt(2).
class DegenerateNormalization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters of the five-diagonal evolution: rho in (0,1) and a phase nu.
/// rho0 = sqrt(1 - rho^2) and alpha0 = rho e^{i nu} are cached on construction.
class WalkParams {
 public:
  WalkParams(double rho, double nu);

  double rho() const noexcept { return rho_; }
  double nu() const noexcept { return nu_; }
  double rho0() const noexcept { return rho0_; }
  cplx alpha0() const noexcept { return alpha0_; }

  /// rho * rho0, the coupling that appears in every dispersion formula.
  double coupling() const noexcept { return rho_ * rho0_; }

  /// True at rho = 1/sqrt(2), nu = pi/2 + n pi, where the walk reduces to a
  /// two-step standard coined walk.
  bool is_special() const noexcept;

 private:
  double rho_;
  double nu_;
  double rho0_;
  cplx alpha0_;
};

/// Internal (coin) state alpha|0> + beta|1>. Also used for the per-site
/// amplitude pair of a WaveState.
struct CoinSpinor {
  cplx a0{};
  cplx a1{};

  double norm_sq() const noexcept { return std::norm(a0) + std::norm(a1); }

  friend bool operator==(const CoinSpinor&, const CoinSpinor&) = default;
};

/// Throws ValidationError when |a0|^2 + |a1|^2 deviates from 1 by more than
/// `tol`.
void require_normalized(const CoinSpinor& coin, double tol = 1e-9);

enum class Variant { full, cmv_only };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view s);

/// Amplitudes on the contiguous window [x_min, x_min + amps.size()).
struct WaveState {
  std::int64_t time = 0;
  std::int64_t x_min = 0;
  std::vector<CoinSpinor> amps;

  std::int64_t x_max() const noexcept {
    return x_min + static_cast<std::int64_t>(amps.size()) - 1;
  }
  const CoinSpinor& at(std::int64_t x) const { return amps.at(static_cast<std::size_t>(x - x_min)); }
  double norm_sq() const noexcept;
};

struct Distribution {
  std::int64_t x_min = 0;
  std::vector<double> probs;

  std::int64_t x_max() const noexcept {
    return x_min + static_cast<std::int64_t>(probs.size()) - 1;
  }
  double at(std::int64_t x) const noexcept;
  double total() const noexcept;
};

}  // namespace qwalk
