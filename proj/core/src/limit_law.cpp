#include "qwalk/limit_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/fourier.hpp"
#include "qwalk/quadrature.hpp"

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;

// A = (1+p)^2 - p^2 s^2 and B = (1-p)^2 - p^2 s^2 in factored form; at the
// special parameters B is exactly zero.
struct SupportRoots {
  double p;
  double sqrt_a;
  double sqrt_b;
  double inner;  // h* = (sqrt A - sqrt B) / 2 = 2p / (sqrt A + sqrt B)
  double outer;  // H = (sqrt A + sqrt B) / 2
};

SupportRoots support_roots(const WalkParams& params) {
  const double p = params.coupling();
  const double ps = p * std::abs(std::sin(params.nu()));
  const double a = (1.0 + p - ps) * (1.0 + p + ps);
  const double b = std::max(0.0, (1.0 - p - ps) * (1.0 - p + ps));
  SupportRoots r{};
  r.p = p;
  r.sqrt_a = std::sqrt(a);
  r.sqrt_b = std::sqrt(b);
  // (sqrt A - sqrt B)(sqrt A + sqrt B) = 4p; take the difference form only
  // where it does not cancel, so that h* = sqrt(2)/2 exactly at the special set.
  r.inner = r.sqrt_b <= 0.5 * r.sqrt_a ? 0.5 * (r.sqrt_a - r.sqrt_b)
                                        : 2.0 * p / (r.sqrt_a + r.sqrt_b);
  r.outer = 0.5 * (r.sqrt_a + r.sqrt_b);
  return r;
}

double xi_from_roots(double ax, double inner, double outer) {
  return (inner - ax) * (inner + ax) * (outer - ax) * (outer + ax);
}

// 1 - p^2 (1 + s^2) - (1 - p^2 c^2) x^2, the common part of eta_+ and eta_-.
double eta_base(double x, const WalkParams& params) {
  const double p = params.coupling();
  const double s = std::sin(params.nu());
  const double c = std::cos(params.nu());
  return 1.0 - p * p * (1.0 + s * s) - (1.0 - p * p * c * c) * x * x;
}

void require_inside(double x, double hstar, const char* what) {
  if (!(std::abs(x) < hstar)) {
    throw OutOfSupport(std::string(what) + ": |x| = " + std::to_string(std::abs(x)) +
                       " is outside the support half-width " + std::to_string(hstar));
  }
}

}  // namespace

std::string_view to_string(LawTag tag) noexcept {
  switch (tag) {
    case LawTag::theorem1:
      return "theorem1";
    case LawTag::standard:
      return "standard";
    case LawTag::cmv_only:
      return "cmv_only";
  }
  return "theorem1";
}

LawTag parse_law(std::string_view s) {
  if (s == "theorem1") return LawTag::theorem1;
  if (s == "standard") return LawTag::standard;
  if (s == "cmv_only" || s == "cmv-only" || s == "cmv") return LawTag::cmv_only;
  throw ValidationError("unknown law '" + std::string(s) + "' (expected theorem1|standard|cmv_only)");
}

std::optional<int> special_index(const WalkParams& params) {
  if (!params.is_special()) return std::nullopt;
  return std::sin(params.nu()) > 0.0 ? 0 : 1;
}

double xi(double x, const WalkParams& params) {
  const SupportRoots r = support_roots(params);
  return xi_from_roots(std::abs(x), r.inner, r.outer);
}

double eta_pm(double x, const WalkParams& params, Sign sign) {
  const SupportRoots r = support_roots(params);
  if (std::abs(x) > r.inner) {
    throw OutOfSupport("eta_pm: |x| = " + std::to_string(std::abs(x)) +
                       " is outside the support half-width " + std::to_string(r.inner));
  }
  const double ax = std::abs(x);
  const double root_xi = std::sqrt(std::max(0.0, xi_from_roots(ax, r.inner, r.outer)));
  const double s = std::sin(params.nu());
  const double big = eta_base(x, params) + 2.0 * r.p * std::abs(s) * root_xi;
  const double one_minus = (1.0 - ax) * (1.0 + ax);
  const double product = one_minus * one_minus * (r.sqrt_a * r.sqrt_b) * (r.sqrt_a * r.sqrt_b);
  const double small = big > 0.0 ? product / big : 0.0;
  const bool plus_is_big = s >= 0.0;
  return (sign == Sign::plus) == plus_is_big ? big : small;
}

double gamma_coefficient(const WalkParams& params, const CoinSpinor& coin) {
  const cplx ab = coin.a0 * std::conj(coin.a1);
  const double nu = params.nu();
  return std::norm(coin.a0) - std::norm(coin.a1) -
         2.0 * params.rho0() / params.rho() * (ab.real() * std::cos(nu) - ab.imag() * std::sin(nu));
}

double gamma_weight(double x, const WalkParams& params, const CoinSpinor& coin) {
  return 1.0 + gamma_coefficient(params, coin) * x;
}

double standard_coefficient(int n, const CoinSpinor& coin) {
  const cplx ab = coin.a0 * std::conj(coin.a1);
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  return std::norm(coin.a0) - std::norm(coin.a1) + parity * 2.0 * ab.imag();
}

double cmv_only_coefficient(const WalkParams& params, const CoinSpinor& coin) {
  const cplx ab = coin.a0 * std::conj(coin.a1);
  const double nu = params.nu();
  return std::norm(coin.a0) - std::norm(coin.a1) -
         2.0 * params.rho() / params.rho0() * (ab.real() * std::cos(nu) + ab.imag() * std::sin(nu));
}

double support_hstar(const WalkParams& params) { return support_roots(params).inner; }

double kstar(const WalkParams& params) {
  const SupportRoots r = support_roots(params);
  const double s = std::sin(params.nu());
  const double p2 = r.p * r.p;
  // The textbook numerator -1 + p^2(1+s^2) + sqrt(AB) cancels as s -> 0;
  // multiplying through by its conjugate gives this form, which is exactly 0 at s = 0.
  const double denom = r.sqrt_a * r.sqrt_b + 1.0 - p2 * (1.0 + s * s);
  const double arg = -2.0 * p2 * s / denom;
  return std::asin(std::clamp(arg, -1.0, 1.0));
}

double k_pm(double x, const WalkParams& params, Sign branch) {
  const SupportRoots r = support_roots(params);
  require_inside(x, r.inner, "k_pm");
  const double ax = std::abs(x);
  const double root_xi = std::sqrt(std::max(0.0, xi_from_roots(ax, r.inner, r.outer)));
  const double s = std::sin(params.nu());
  const double pm = branch == Sign::plus ? root_xi : -root_xi;
  const double arg = (-r.p * s * ax * ax + pm) / (r.p * (1.0 - ax) * (1.0 + ax));
  // sin k = arg and, from h(nu; k) = |x|, cos k = |x| sqrt(J(k)) / (rho rho0);
  // atan2 stays accurate where arg is close to +-1 (x near 0).
  const double sin_k = std::clamp(arg, -1.0, 1.0);
  const double d = r.p * (sin_k - s);
  const double cos_k = ax * std::sqrt(std::max(0.0, 1.0 - d * d)) / r.p;
  const double principal = std::atan2(sin_k, cos_k);
  return x >= 0.0 ? principal : kPi - principal;
}

double dk_pm_dx(double x, const WalkParams& params, Sign branch) {
  const SupportRoots r = support_roots(params);
  require_inside(x, r.inner, "dk_pm_dx");
  const double ax = std::abs(x);
  const double root_xi = std::sqrt(xi_from_roots(ax, r.inner, r.outer));
  const double root_eta = std::sqrt(std::max(0.0, eta_pm(x, params, branch)));
  const double mag = root_eta / ((1.0 - ax) * (1.0 + ax) * root_xi);
  return branch == Sign::plus ? -mag : mag;
}

double f_helper(int i, Sign sign, double nu_arg, double k, const WalkParams& params) {
  const double j = dispersion_J(nu_arg, k, params);
  if (!(j > 0.0)) {
    throw std::domain_error("f_helper: J(nu; k) must be positive");
  }
  const double root_j = std::sqrt(j);
  const double pm = sign == Sign::plus ? 1.0 : -1.0;
  const double rho_sq = params.rho() * params.rho();
  const double rho0_sq = params.rho0() * params.rho0();
  const double split = params.coupling() * (std::cos(k) + std::cos(nu_arg)) / (2.0 * root_j);
  switch (i) {
    case 0:
      return 0.5 - pm * split;
    case 1:
      return 0.5 + pm * split;
    case 2:
      return pm * (rho0_sq * std::cos(k) - rho_sq * std::cos(nu_arg)) / root_j;
    case 3:
      return pm * (rho0_sq * std::sin(k) + rho_sq * std::sin(nu_arg)) / root_j;
    default:
      throw ValidationError("f_helper index must be 0..3, got " + std::to_string(i));
  }
}

LimitDensity::LimitDensity(LawKind kind, const WalkParams& params, const CoinSpinor& coin)
    : kind_(kind), params_(params), coin_(coin) {
  require_normalized(coin);
  switch (kind.tag) {
    case LawTag::theorem1: {
      const SupportRoots r = support_roots(params);
      support_hi_ = r.inner;
      outer_root_ = r.outer;
      sqrt_ab_ = r.sqrt_a * r.sqrt_b;
      {
        const double pc = r.p * std::cos(params.nu());
        num_slope_ = (1.0 - pc) * (1.0 + pc) + sqrt_ab_;
      }
      coeff_ = gamma_coefficient(params, coin);
      break;
    }
    case LawTag::standard: {
      const auto idx = special_index(params);
      if (!idx || *idx != ((kind.n % 2) + 2) % 2) {
        throw ValidationError("the standard law needs rho = 1/sqrt(2) and nu = pi/2 + n pi with n = " +
                              std::to_string(kind.n));
      }
      support_hi_ = std::numbers::sqrt2 / 2.0;
      coeff_ = standard_coefficient(kind.n, coin);
      break;
    }
    case LawTag::cmv_only:
      support_hi_ = params.rho0();
      coeff_ = cmv_only_coefficient(params, coin);
      break;
  }
}

LimitDensity LimitDensity::with_coefficient(double c) const {
  LimitDensity copy = *this;
  copy.coeff_ = c;
  return copy;
}

double LimitDensity::operator()(double x) const noexcept {
  const double ax = std::abs(x);
  if (!(ax < support_hi_)) return 0.0;
  const double one_minus = (1.0 - ax) * (1.0 + ax);
  const double weight = 1.0 + coeff_ * x;
  switch (kind_.tag) {
    case LawTag::theorem1: {
      // (sqrt(eta_+) + sqrt(eta_-))^2 = 2 base + 2 (1 - x^2) sqrt(A B), expanded
      // about the end point: base(h*) = sqrt(A B) (1 - h*^2), so
      //   = 4 sqrt(A B)(1 - h*^2) + 2 (1 - p^2 cos^2 nu + sqrt(A B)) (h*^2 - x^2).
      // The first term is exactly zero at the special parameters, where the
      // numerator has to vanish at the same rounded h* as xi does.
      const double h = support_hi_;
      const double gap = (h - ax) * (h + ax);
      const double num_sq = 4.0 * sqrt_ab_ * (1.0 - h) * (1.0 + h) + 2.0 * num_slope_ * gap;
      const double root_xi = std::sqrt(gap * (outer_root_ - ax) * (outer_root_ + ax));
      return std::sqrt(std::max(0.0, num_sq)) / (2.0 * kPi * one_minus * root_xi) * weight;
    }
    case LawTag::standard: {
      // sqrt(1 - 2x^2) = sqrt(2) sqrt((h - x)(h + x)) with h = 1/sqrt(2); the
      // difference h - x is exact near the end point.
      const double h = support_hi_;
      return weight / (kPi * one_minus * std::numbers::sqrt2 * std::sqrt((h - ax) * (h + ax)));
    }
    case LawTag::cmv_only: {
      const double r0 = params_.rho0();
      return params_.rho() * weight / (kPi * one_minus * std::sqrt((r0 - ax) * (r0 + ax)));
    }
  }
  return 0.0;
}

double density(const LimitDensity& law, double x) noexcept { return law(x); }

double cdf(const LimitDensity& law, double x) {
  return quad::integrate_arcsine([&](double y) { return law(y); }, law.support_hi(), x);
}

double moment(const LimitDensity& law, int r) {
  if (r < 0) throw ValidationError("moment order must be nonnegative");
  return quad::integrate_arcsine([&](double y) { return std::pow(y, r) * law(y); },
                                 law.support_hi());
}

double asymptotic_moment_fourier(int r, const WalkParams& params, const CoinSpinor& coin,
                                 std::size_t nodes) {
  if (r < 0) throw ValidationError("moment order must be nonnegative");
  require_normalized(coin);
  if (params.is_special()) {
    throw DegenerateNormalization(
        "eigenvector normalization degenerates at rho = 1/sqrt(2), nu = pi/2 + n pi");
  }
  const CoinSpinor phi = transformed_spinor(coin, params);
  double total = 0.0;
  for (std::size_t m = 0; m < nodes; ++m) {
    const double k = -kPi + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(nodes);
    const double h = group_velocity_h(k, params);
    const auto w = overlap_weights(k, params, phi);
    // i lambda_j'/lambda_j = (-1)^j h: j = 1 moves with -h, j = 2 with +h.
    total += std::pow(-h, r) * w[0] + std::pow(h, r) * w[1];
  }
  return total / static_cast<double>(nodes);
}

}  // namespace qwalk
