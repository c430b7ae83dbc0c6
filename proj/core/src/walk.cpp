#include "qwalk/walk.hpp"

#include <string>
#include <utility>

#include "qwalk/matrix2.hpp"

namespace qwalk {
namespace {

// Left coin of the product form (applied second).
Matrix2 outer_coin(const WalkParams& p) {
  const cplx e = std::polar(1.0, p.nu() / 2.0);
  const cplx ec = std::conj(e);
  return {{p.rho0() * e, p.rho() * e, p.rho() * ec, -p.rho0() * ec}};
}

// Right coin of the product form (applied first).
Matrix2 inner_coin(const WalkParams& p) {
  const cplx e = std::polar(1.0, p.nu() / 2.0);
  const cplx ec = std::conj(e);
  return {{-p.rho() * e, p.rho0() * ec, -p.rho0() * e, -p.rho() * ec}};
}

}  // namespace

WaveState initial_state(const CoinSpinor& coin) {
  require_normalized(coin);
  WaveState s;
  s.time = 0;
  s.x_min = 0;
  s.amps = {coin};
  return s;
}

WaveState step_full(const WaveState& state, const WalkParams& params) {
  const Matrix2 first = inner_coin(params);
  const Matrix2 second = outer_coin(params);
  const std::size_t n = state.amps.size();

  // b(x) = [ (first psi)_0(x-1), (first psi)_1(x) ], on the window [x_min, x_max + 1].
  std::vector<CoinSpinor> mid(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const CoinSpinor a = first * state.amps[i];
    mid[i + 1].a0 = a.a0;
    mid[i].a1 = a.a1;
  }
  for (auto& v : mid) v = second * v;

  // d(x) = [ c_0(x), c_1(x+1) ], on the window [x_min - 1, x_max + 1].
  WaveState out;
  out.time = state.time + 1;
  out.x_min = state.x_min - 1;
  out.amps.assign(n + 2, CoinSpinor{});
  for (std::size_t i = 0; i < n + 1; ++i) {
    out.amps[i + 1].a0 = mid[i].a0;
    out.amps[i].a1 = mid[i].a1;
  }
  return out;
}

WaveState step_cmv_only(const WaveState& state, const WalkParams& params) {
  const double rho_sq = params.rho() * params.rho();
  const double rho0_sq = params.rho0() * params.rho0();
  const cplx up = params.alpha0() * params.rho0();             // alpha0 rho0
  const cplx down = std::conj(params.alpha0()) * params.rho0();  // rho0 conj(alpha0)
  const std::size_t n = state.amps.size();

  WaveState out;
  out.time = state.time + 1;
  out.x_min = state.x_min - 1;
  out.amps.assign(n + 2, CoinSpinor{});
  for (std::size_t i = 0; i < n; ++i) {
    const CoinSpinor& a = state.amps[i];
    // input site i sits at output index i + 1
    out.amps[i + 1].a0 += -rho_sq * a.a0 - up * a.a1;
    out.amps[i + 1].a1 += down * a.a0 - rho_sq * a.a1;
    out.amps[i + 2].a0 += rho0_sq * a.a0 - up * a.a1;
    out.amps[i].a1 += down * a.a0 + rho0_sq * a.a1;
  }
  return out;
}

void swap_coin(WaveState& state) noexcept {
  for (auto& a : state.amps) std::swap(a.a0, a.a1);
}

WaveState step(const WaveState& state, const WalkParams& params, Variant variant) {
  return variant == Variant::full ? step_full(state, params) : step_cmv_only(state, params);
}

WaveState evolve(const CoinSpinor& coin, const WalkParams& params, std::int64_t t,
                 Variant variant) {
  if (t < 0) throw ValidationError("time must be nonnegative, got " + std::to_string(t));
  WaveState s = initial_state(coin);
  for (std::int64_t i = 0; i < t; ++i) s = step(s, params, variant);
  return s;
}

Distribution distribution(const WaveState& state) {
  Distribution d;
  d.x_min = state.x_min;
  d.probs.reserve(state.amps.size());
  for (const auto& a : state.amps) d.probs.push_back(a.norm_sq());
  return d;
}

}  // namespace qwalk
