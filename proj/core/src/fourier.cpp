#include "qwalk/fourier.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;
// Below this the closed-form eigenvectors lose digits; switch to a route that
// does not divide by N_j.
constexpr double kNearDegenerateN = 1e-8;

cplx unit_power(cplx lambda, std::int64_t t) {
  return std::polar(1.0, static_cast<double>(t) * std::arg(lambda));
}

struct RawEigen {
  double J;
  double sqrt_J;
  std::array<cplx, 2> lambda;
  std::array<CoinSpinor, 2> vectors;  // unnormalized
  std::array<double, 2> N;
};

RawEigen raw_eigen(double k, const WalkParams& p) {
  const double c = p.coupling();
  const double d = std::sin(k) - std::sin(p.nu());
  RawEigen e{};
  e.J = 1.0 - (c * d) * (c * d);
  e.sqrt_J = std::sqrt(std::max(e.J, 0.0));
  const double rho_sq = p.rho() * p.rho();
  const double rho0_sq = p.rho0() * p.rho0();
  const cplx top = -rho_sq * std::polar(1.0, p.nu()) + rho0_sq * std::polar(1.0, -k);
  const double real_part = c * (std::cos(k) + std::cos(p.nu()));
  for (int j = 0; j < 2; ++j) {
    // sign (-1)^j with j = 1, 2 numbered from one
    const double sgn = j == 0 ? -1.0 : 1.0;
    e.lambda[j] = cplx{-sgn * e.sqrt_J, c * d};
    e.vectors[j] = {top, cplx{real_part - sgn * e.sqrt_J, 0.0}};
    e.N[j] = 2.0 * (e.J - sgn * real_part * e.sqrt_J);
  }
  return e;
}

// A^t through the spectral projectors of a 2x2 unitary; repeated squaring when
// the two eigenvalues (nearly) coincide.
Matrix2 spectral_power(const Matrix2& a, std::int64_t t) {
  const cplx tr = a.trace();
  const cplx disc = std::sqrt(tr * tr - 4.0 * a.det());
  const cplx l1 = (tr + disc) / 2.0;
  const cplx l2 = (tr - disc) / 2.0;
  if (std::abs(l1 - l2) < 1e-6) return power(a, t);
  const Matrix2 id = Matrix2::identity();
  const Matrix2 p1 = (1.0 / (l1 - l2)) * (a - l2 * id);
  const Matrix2 p2 = (1.0 / (l2 - l1)) * (a - l1 * id);
  return unit_power(l1, t) * p1 + unit_power(l2, t) * p2;
}

CoinSpinor htilde_power_apply(double k, const WalkParams& p, std::int64_t t,
                              const CoinSpinor& phi) {
  const RawEigen e = raw_eigen(k, p);
  if (e.J <= 0.0 || std::min(e.N[0], e.N[1]) < kNearDegenerateN) {
    return power(shifted_matrix_Htilde(k, p), t) * phi;
  }
  CoinSpinor out{};
  for (int j = 0; j < 2; ++j) {
    const cplx w = unit_power(e.lambda[j], t) * inner(e.vectors[j], phi) / e.N[j];
    out.a0 += w * e.vectors[j].a0;
    out.a1 += w * e.vectors[j].a1;
  }
  return out;
}

Matrix2 cmv_two_step(double k, const WalkParams& p) {
  const double rho_sq = p.rho() * p.rho();
  const double rho0_sq = p.rho0() * p.rho0();
  const double c = p.coupling();
  const cplx em = std::polar(1.0, -k);
  const cplx ep = std::polar(1.0, k);
  return {{rho0_sq * em - rho_sq, -c * em - c, c * ep + c, rho0_sq * ep - rho_sq}};
}

}  // namespace

Matrix2 rotation_R(double phi) { return Matrix2::diag(std::polar(1.0, phi), std::polar(1.0, -phi)); }

Matrix2 coin_matrix_H(double k, const WalkParams& p) {
  const double nu = p.nu();
  const double c = p.coupling();
  const double rho_sq = p.rho() * p.rho();
  const double rho0_sq = p.rho0() * p.rho0();
  return {{-c * (std::polar(1.0, nu) + std::polar(1.0, -(k - nu))),
           -rho_sq * std::polar(1.0, nu) + rho0_sq * std::polar(1.0, -(k - nu)),
           -rho_sq * std::polar(1.0, -nu) + rho0_sq * std::polar(1.0, k - nu),
           c * (std::polar(1.0, -nu) + std::polar(1.0, k - nu))}};
}

Matrix2 shifted_matrix_Htilde(double k, const WalkParams& p) {
  const double nu = p.nu();
  const double c = p.coupling();
  const double rho_sq = p.rho() * p.rho();
  const double rho0_sq = p.rho0() * p.rho0();
  return {{-c * (std::polar(1.0, nu) + std::polar(1.0, -k)),
           -rho_sq * std::polar(1.0, nu) + rho0_sq * std::polar(1.0, -k),
           -rho_sq * std::polar(1.0, -nu) + rho0_sq * std::polar(1.0, k),
           c * (std::polar(1.0, -nu) + std::polar(1.0, k))}};
}

Matrix2 symbol_full(double k, const WalkParams& p) {
  return rotation_R(-p.nu() / 2.0) * coin_matrix_H(k, p) * rotation_R(p.nu() / 2.0);
}

Matrix2 symbol_cmv_only(double k, const WalkParams& p) {
  const Matrix2 q{{cplx{p.rho0()}, cplx{-p.rho()}, cplx{p.rho()}, cplx{p.rho0()}}};
  const Matrix2 half = rotation_R(-k / 2.0) * q;
  return rotation_R(p.nu() / 2.0) * half * half * rotation_R(-p.nu() / 2.0);
}

CoinSpinor transformed_spinor(const CoinSpinor& coin, const WalkParams& p) {
  return rotation_R(p.nu() / 2.0) * coin;
}

double dispersion_J(double nu_arg, double k, const WalkParams& p) {
  const double cd = p.coupling() * (std::sin(k) - std::sin(nu_arg));
  return 1.0 - cd * cd;
}

std::array<double, 2> normalization_factors(double k, const WalkParams& p) {
  return raw_eigen(k, p).N;
}

EigenSystem eigensystem(double k, const WalkParams& p) {
  const RawEigen e = raw_eigen(k, p);
  if (e.N[0] < 1e-14 || e.N[1] < 1e-14) {
    throw DegenerateNormalization("eigenvector normalization N_j(k) vanishes at k = " +
                                  std::to_string(k));
  }
  EigenSystem es;
  es.k = k;
  es.J = e.J;
  es.N = e.N;
  es.lambda = e.lambda;
  for (int j = 0; j < 2; ++j) {
    const double s = 1.0 / std::sqrt(e.N[j]);
    es.vectors[j] = {s * e.vectors[j].a0, s * e.vectors[j].a1};
  }
  return es;
}

double group_velocity_h(double k, const WalkParams& p) { return group_velocity_h(p.nu(), k, p); }

double group_velocity_h(double nu_arg, double k, const WalkParams& p) {
  return p.coupling() * std::cos(k) / std::sqrt(dispersion_J(nu_arg, k, p));
}

std::array<double, 2> overlap_weights(double k, const WalkParams& p, const CoinSpinor& phi) {
  const RawEigen e = raw_eigen(k, p);
  std::array<double, 2> w{};
  if (std::min(e.N[0], e.N[1]) >= kNearDegenerateN) {
    for (int j = 0; j < 2; ++j) w[j] = std::norm(inner(e.vectors[j], phi)) / e.N[j];
    return w;
  }
  if (e.sqrt_J < 1e-7) {
    throw DegenerateNormalization("eigenvalues of Htilde coincide at k = " + std::to_string(k));
  }
  const Matrix2 h = shifted_matrix_Htilde(k, p);
  const Matrix2 id = Matrix2::identity();
  for (int j = 0; j < 2; ++j) {
    const cplx other = e.lambda[1 - j];
    const Matrix2 proj = (1.0 / (e.lambda[j] - other)) * (h - other * id);
    w[j] = std::real(inner(phi, proj * phi));
  }
  return w;
}

std::size_t fourier_node_count(std::int64_t t) {
  return std::bit_ceil(static_cast<std::size_t>(2 * t + 3));
}

WaveState evolve_fourier(const CoinSpinor& coin, const WalkParams& p, std::int64_t t,
                         Variant variant, std::int64_t padding) {
  if (t < 0) throw ValidationError("time must be nonnegative, got " + std::to_string(t));
  require_normalized(coin);
  const std::size_t m_nodes = fourier_node_count(t);
  const auto m_int = static_cast<std::int64_t>(m_nodes);
  if (padding < 0 || 2 * t + padding >= m_int) {
    throw ValidationError("reconstruction window would alias");
  }

  // Sampled momentum-space state at k_m = -pi + 2 pi m / M.
  std::vector<CoinSpinor> samples(m_nodes);
  const CoinSpinor phi_tilde = transformed_spinor(coin, p);
  const CoinSpinor phi_cmv = rotation_R(-p.nu() / 2.0) * coin;
  const Matrix2 rot_back_cmv = rotation_R(p.nu() / 2.0);
  for (std::size_t m = 0; m < m_nodes; ++m) {
    const double k = -kPi + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(m_nodes);
    if (variant == Variant::full) {
      samples[m] = htilde_power_apply(k, p, t, phi_tilde);
    } else {
      samples[m] = rot_back_cmv * (spectral_power(cmv_two_step(k, p), t) * phi_cmv);
    }
  }

  std::vector<cplx> twiddle(m_nodes);
  for (std::size_t j = 0; j < m_nodes; ++j) {
    twiddle[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m_nodes));
  }

  WaveState out;
  out.time = t;
  out.x_min = -t - padding;
  const std::int64_t width = 2 * (t + padding) + 1;
  out.amps.resize(static_cast<std::size_t>(width));
  const Matrix2 rot_back_full = rotation_R(-p.nu() / 2.0);
  const double inv_m = 1.0 / static_cast<double>(m_nodes);
  for (std::int64_t i = 0; i < width; ++i) {
    const std::int64_t x = out.x_min + i;
    // e^{i k_m x} = (-1)^x e^{2 pi i m x / M}
    const std::int64_t step = ((x % m_int) + m_int) % m_int;
    std::int64_t idx = 0;
    CoinSpinor acc{};
    for (std::size_t m = 0; m < m_nodes; ++m) {
      const cplx w = twiddle[static_cast<std::size_t>(idx)];
      acc.a0 += w * samples[m].a0;
      acc.a1 += w * samples[m].a1;
      idx += step;
      if (idx >= m_int) idx -= m_int;
    }
    const double sign = (x % 2 == 0) ? inv_m : -inv_m;
    acc = {sign * acc.a0, sign * acc.a1};
    if (variant == Variant::full) {
      // Undo the nu shift of the momentum variable and the outer rotation.
      acc = rot_back_full * acc;
      const cplx phase = std::polar(1.0, p.nu() * static_cast<double>(x));
      acc = {phase * acc.a0, phase * acc.a1};
    }
    out.amps[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace qwalk
