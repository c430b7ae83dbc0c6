#pragma once

#include <cstdint>

#include "qwalk/types.hpp"

namespace qwalk {

/// Walker localized at the origin with internal state `coin`.
/// Throws ValidationError if the coin is not normalized to within 1e-9.
WaveState initial_state(const CoinSpinor& coin);

/// One application of U = V U_f, applied as the four local factors
///   (shift |1> left) (coin) (shift |0> right) (coin)
/// right to left. The window grows by one site on each side.
WaveState step_full(const WaveState& state, const WalkParams& params);

/// One application of the three-band CMV operator V alone.
WaveState step_cmv_only(const WaveState& state, const WalkParams& params);

/// Exchanges the two coin components at every site (the operator U_f).
void swap_coin(WaveState& state) noexcept;

WaveState step(const WaveState& state, const WalkParams& params, Variant variant);

/// t-fold iteration from initial_state(coin). Throws ValidationError for t < 0.
WaveState evolve(const CoinSpinor& coin, const WalkParams& params, std::int64_t t,
                 Variant variant);

/// P(X_t = x) = |amp0(x)|^2 + |amp1(x)|^2 on the state's window.
Distribution distribution(const WaveState& state);

}  // namespace qwalk
