#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "qwalk/matrix2.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// diag(e^{i phi}, e^{-i phi}).
Matrix2 rotation_R(double phi);

/// Momentum symbol H(k) of the full walk; the one-step symbol is
/// R(-nu/2) H(k) R(nu/2).
Matrix2 coin_matrix_H(double k, const WalkParams& params);

/// H(k + nu), the symbol after shifting the momentum variable by nu.
Matrix2 shifted_matrix_Htilde(double k, const WalkParams& params);

/// One-step momentum symbol of the full walk, R(-nu/2) H(k) R(nu/2).
Matrix2 symbol_full(double k, const WalkParams& params);

/// One-step momentum symbol of the V-only walk,
/// R(nu/2) {R(-k/2) [[rho0, -rho], [rho, rho0]]}^2 R(-nu/2).
Matrix2 symbol_cmv_only(double k, const WalkParams& params);

/// R(nu/2) phi: the initial spinor seen by Htilde.
CoinSpinor transformed_spinor(const CoinSpinor& coin, const WalkParams& params);

/// J(nu_arg; k) = 1 - rho^2 rho0^2 (sin k - sin nu_arg)^2.
double dispersion_J(double nu_arg, double k, const WalkParams& params);

/// Closed-form eigen-system of Htilde(k). Index 0 holds j = 1, index 1 holds j = 2,
/// with lambda_j = i rho rho0 (sin k - sin nu) - (-1)^j sqrt(J).
struct EigenSystem {
  double k = 0.0;
  std::array<cplx, 2> lambda{};
  std::array<CoinSpinor, 2> vectors{};
  double J = 0.0;
  std::array<double, 2> N{};
};

/// Normalization factors N_j(k) = 2 {J - (-1)^j rho rho0 (cos k + cos nu) sqrt(J)}.
std::array<double, 2> normalization_factors(double k, const WalkParams& params);

/// Throws DegenerateNormalization if either N_j(k) < 1e-14.
EigenSystem eigensystem(double k, const WalkParams& params);

/// h(nu; k) = rho rho0 cos k / sqrt(J(nu; k)), i.e. i lambda_2'(k) / lambda_2(k).
double group_velocity_h(double k, const WalkParams& params);
double group_velocity_h(double nu_arg, double k, const WalkParams& params);

/// |<v_j(k)|phi_tilde>|^2 for j = 1, 2. Falls back to the spectral projectors
/// (Htilde - lambda_other) / (lambda_j - lambda_other) where N_j is tiny.
std::array<double, 2> overlap_weights(double k, const WalkParams& params,
                                      const CoinSpinor& phi_tilde);

/// Smallest power of two >= 2t + 3.
std::size_t fourier_node_count(std::int64_t t);

/// Exact amplitudes at time t reconstructed from momentum space: the symbol
/// power is sampled on fourier_node_count(t) equispaced nodes in [-pi, pi)
/// and inverted by a discrete sum. Because the integrand is a trigonometric
/// polynomial the discrete sum equals the integral. The window is
/// [-t - padding, t + padding]; padding <= 1 stays alias-free.
WaveState evolve_fourier(const CoinSpinor& coin, const WalkParams& params, std::int64_t t,
                         Variant variant, std::int64_t padding = 0);

}  // namespace qwalk
