#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "qwalk/types.hpp"

namespace qwalk {

enum class Sign { plus, minus };

enum class LawTag { theorem1, standard, cmv_only };

std::string_view to_string(LawTag tag) noexcept;
LawTag parse_law(std::string_view s);

/// Which closed-form law to evaluate. `n` is only meaningful for `standard`.
struct LawKind {
  LawTag tag = LawTag::theorem1;
  int n = 0;

  static LawKind theorem1() { return {LawTag::theorem1, 0}; }
  static LawKind standard(int n) { return {LawTag::standard, n}; }
  static LawKind cmv_only() { return {LawTag::cmv_only, 0}; }

  friend bool operator==(const LawKind&, const LawKind&) = default;
};

/// For rho = 1/sqrt(2), nu = pi/2 + n pi returns n mod 2 (0 or 1).
std::optional<int> special_index(const WalkParams& params);

// --- scalar building blocks of the full-walk density -----------------------

/// xi(x) = (rho^2 - x^2)(rho0^2 - x^2) - rho^2 rho0^2 cos^2(nu) x^2,
/// evaluated through its factorization (h*^2 - x^2)(H^2 - x^2).
double xi(double x, const WalkParams& params);

/// eta_{+/-}(x) = 1 - rho^2 rho0^2 (1 + sin^2 nu) - (1 - rho^2 rho0^2 cos^2 nu) x^2
///                +/- 2 rho rho0 sin(nu) sqrt(xi(x)).
/// The smaller root is recovered from eta_+ eta_- = (1 - x^2)^2 A B, which is
/// exact where it vanishes identically. Throws OutOfSupport for |x| > h*.
double eta_pm(double x, const WalkParams& params, Sign sign);

/// Linear coefficient c of gamma(x) = 1 + c x:
/// |alpha|^2 - |beta|^2 - (2 rho0 / rho)(Re(alpha conj beta) cos nu - Im(alpha conj beta) sin nu).
double gamma_coefficient(const WalkParams& params, const CoinSpinor& coin);
double gamma_weight(double x, const WalkParams& params, const CoinSpinor& coin);

/// |alpha|^2 - |beta|^2 + (-1)^n 2 Im(alpha conj beta), the weight of the
/// reduced law at rho = 1/sqrt(2), nu = pi/2 + n pi.
double standard_coefficient(int n, const CoinSpinor& coin);

/// |alpha|^2 - |beta|^2 - (2 rho / rho0)(Re(alpha conj beta) cos nu + Im(alpha conj beta) sin nu),
/// the weight of the V-only law.
double cmv_only_coefficient(const WalkParams& params, const CoinSpinor& coin);

/// Half-width of the support, 1/2 {sqrt(A) - sqrt(B)} with
/// A = (1 + rho rho0)^2 - rho^2 rho0^2 sin^2 nu, B = (1 - rho rho0)^2 - rho^2 rho0^2 sin^2 nu.
double support_hstar(const WalkParams& params);

/// Momentum in [-pi/2, pi/2] where h(nu; k) attains h*.
double kstar(const WalkParams& params);

/// k_{+/-}(x) = arcsin((-rho rho0 sin(nu) x^2 +/- sqrt(xi)) / (rho rho0 (1 - x^2))) for
/// 0 <= x < h*. Negative x maps to pi - k_{+/-}(|x|) so that h(nu; k_{+/-}(x)) = x on
/// the whole of (-h*, h*). Throws OutOfSupport for |x| >= h*.
double k_pm(double x, const WalkParams& params, Sign branch);

/// dk_{+/-}/dx = -/+ sqrt(eta_{+/-}(x)) / ((1 - x^2) sqrt(xi(x))).
double dk_pm_dx(double x, const WalkParams& params, Sign branch);

/// F_{i,+/-}(nu_arg; k), i in 0..3: the weights that expand |<v_j(k)|phi_tilde>|^2 over
/// |alpha|^2, |beta|^2, Re(alpha conj beta e^{i nu}) and Im(alpha conj beta e^{i nu}).
/// Throws std::domain_error when J(nu_arg; k) <= 0.
double f_helper(int i, Sign sign, double nu_arg, double k, const WalkParams& params);

// --- limit densities --------------------------------------------------------

/// One of the closed-form limit laws of X_t / t with its support and weight
/// coefficient precomputed.
class LimitDensity {
 public:
  /// Throws ValidationError for an unnormalized coin or for `standard` away from
  /// rho = 1/sqrt(2), nu = pi/2 + n pi.
  LimitDensity(LawKind kind, const WalkParams& params, const CoinSpinor& coin);

  const LawKind& kind() const noexcept { return kind_; }
  const WalkParams& params() const noexcept { return params_; }
  const CoinSpinor& coin() const noexcept { return coin_; }

  /// Right end of the symmetric support (-support_hi, support_hi).
  double support_hi() const noexcept { return support_hi_; }
  /// Linear coefficient of the weight (gamma, Theta_n or Delta).
  double coeff() const noexcept { return coeff_; }

  /// Copy with the linear weight coefficient replaced.
  LimitDensity with_coefficient(double c) const;

  double operator()(double x) const noexcept;

 private:
  LawKind kind_;
  WalkParams params_;
  CoinSpinor coin_;
  double support_hi_ = 0.0;
  double coeff_ = 0.0;
  double outer_root_ = 0.0;   // H, the larger root of xi in |x|
  double sqrt_ab_ = 0.0;      // sqrt(A B)
  double num_slope_ = 0.0;    // 1 - rho^2 rho0^2 cos^2 nu + sqrt(A B)
};

double density(const LimitDensity& law, double x) noexcept;

/// Limit CDF, integral of the density up to x.
double cdf(const LimitDensity& law, double x);

/// r-th moment of the limit law. Throws ValidationError for r < 0.
double moment(const LimitDensity& law, int r);

/// sum_j int_{-pi}^{pi} (i lambda_j'/lambda_j)^r |<v_j(k)|phi_tilde>|^2 dk / 2 pi,
/// by the trapezoid rule on `nodes` equispaced momenta (spectrally accurate
/// for the smooth periodic integrand). Throws DegenerateNormalization at
/// rho = 1/sqrt(2), nu = pi/2 + n pi.
double asymptotic_moment_fourier(int r, const WalkParams& params, const CoinSpinor& coin,
                                 std::size_t nodes = 4096);

}  // namespace qwalk
