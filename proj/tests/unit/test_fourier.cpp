#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <qwalk/fourier.hpp>
#include <qwalk/limit_law.hpp>
#include <qwalk/walk.hpp>

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// psi_hat(k) = sum_x e^{-ikx} psi(x)
CoinSpinor transform(const WaveState& s, double k) {
  CoinSpinor out{};
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    const double x = static_cast<double>(s.x_min + static_cast<std::int64_t>(i));
    const cplx ph = std::polar(1.0, -k * x);
    out.a0 += ph * s.amps[i].a0;
    out.a1 += ph * s.amps[i].a1;
  }
  return out;
}

double total_variation(const Distribution& a, const Distribution& b) {
  const auto lo = std::min(a.x_min, b.x_min);
  const auto hi = std::max(a.x_max(), b.x_max());
  double s = 0.0;
  for (auto x = lo; x <= hi; ++x) s += std::abs(a.at(x) - b.at(x));
  return 0.5 * s;
}

}  // namespace

TEST_CASE("rotation R") {
  CHECK(max_abs_diff(rotation_R(0.0), Matrix2::identity()) == 0.0);
  CHECK(max_abs_diff(rotation_R(kPi / 2), Matrix2::diag(cplx{0, 1}, cplx{0, -1})) < 1e-15);
  CHECK(max_abs_diff(rotation_R(0.3) * rotation_R(-1.1), rotation_R(-0.8)) < 1e-15);
}

TEST_CASE("symbols are unitary") {
  const WalkParams p(0.3, 2.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> k(-kPi, kPi);
  for (int i = 0; i < 64; ++i) {
    const double kk = k(rng);
    CHECK(unitarity_defect(coin_matrix_H(kk, p)) < 1e-12);
    CHECK(unitarity_defect(shifted_matrix_Htilde(kk, p)) < 1e-12);
    CHECK(unitarity_defect(symbol_cmv_only(kk, p)) < 1e-12);
    CHECK(std::abs(std::abs(shifted_matrix_Htilde(kk, p).det()) - 1.0) < 1e-12);
    CHECK(max_abs_diff(coin_matrix_H(kk + p.nu(), p), shifted_matrix_Htilde(kk, p)) < 1e-12);
  }
}

TEST_CASE("one-step symbols match the position-space steps") {
  const WalkParams p(0.55, -1.3);
  for (int c = 0; c < 2; ++c) {
    const CoinSpinor e = c == 0 ? CoinSpinor{1.0, 0.0} : CoinSpinor{0.0, 1.0};
    const WaveState full = step_full(initial_state(e), p);
    const WaveState cmv = step_cmv_only(initial_state(e), p);
    for (double k : {-2.9, -1.0, 0.0, 0.4, 2.2}) {
      const CoinSpinor a = symbol_full(k, p) * e;
      const CoinSpinor b = transform(full, k);
      CHECK(std::abs(a.a0 - b.a0) + std::abs(a.a1 - b.a1) < 1e-13);
      const CoinSpinor a2 = symbol_cmv_only(k, p) * e;
      const CoinSpinor b2 = transform(cmv, k);
      CHECK(std::abs(a2.a0 - b2.a0) + std::abs(a2.a1 - b2.a1) < 1e-13);
    }
  }
}

TEST_CASE("Htilde reduces to a two-step coined walk at rho = 1/sqrt2, nu = pi/2 + n pi") {
  for (int n : {0, 1}) {
    const WalkParams p(kInvSqrt2, kPi / 2 + n * kPi);
    const double s = n == 0 ? 1.0 : -1.0;
    const cplx em = std::polar(1.0, -s * kPi / 4);
    const cplx ep = std::polar(1.0, s * kPi / 4);
    const Matrix2 v = kInvSqrt2 * Matrix2{{em, -em, -ep, -ep}};
    for (double k = -kPi; k < kPi; k += 0.05) {
      const Matrix2 half = rotation_R(-k / 2) * v;
      const Matrix2 expected = cplx{0.0, -s} * (half * half);
      CHECK(max_abs_diff(shifted_matrix_Htilde(k, p), expected) < 1e-12);
    }
  }
}

TEST_CASE("Htilde(0) at rho = 0.6, nu = 0") {
  const Matrix2 h = shifted_matrix_Htilde(0.0, WalkParams(0.6, 0.0));
  CHECK(std::abs(h(0, 0) - cplx{-0.96, 0.0}) < 1e-15);
  CHECK(std::abs(h(0, 1) - cplx{0.28, 0.0}) < 1e-15);
  CHECK(std::abs(h(1, 0) - cplx{0.28, 0.0}) < 1e-15);
  CHECK(std::abs(h(1, 1) - cplx{0.96, 0.0}) < 1e-15);
}

TEST_CASE("eigensystem on a 1000-point grid") {
  const WalkParams p(0.45, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const double k = -kPi + 2 * kPi * i / 1000.0;
    const EigenSystem es = eigensystem(k, p);
    const Matrix2 h = shifted_matrix_Htilde(k, p);
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(std::abs(es.lambda[j]) - 1.0) < 1e-12);
      const CoinSpinor hv = h * es.vectors[j];
      const double res = std::abs(hv.a0 - es.lambda[j] * es.vectors[j].a0) +
                         std::abs(hv.a1 - es.lambda[j] * es.vectors[j].a1);
      CHECK(res <= 1e-10);
      CHECK(es.N[j] > 0.0);
      CHECK(std::abs(es.vectors[j].norm_sq() - 1.0) < 1e-12);
    }
    CHECK(std::abs(inner(es.vectors[0], es.vectors[1])) < 1e-10);
    CHECK(std::abs(std::abs(es.lambda[0] * es.lambda[1]) - 1.0) < 1e-12);
    CHECK(std::abs(es.lambda[0] * es.lambda[1] - h.det()) < 1e-12);
    CHECK(std::abs(es.J - (1.0 - std::imag(es.lambda[0]) * std::imag(es.lambda[0]))) < 1e-14);
    CHECK(std::abs(es.J - dispersion_J(p.nu(), k, p)) < 1e-15);

    // spectral identity
    Matrix2 recon{};
    for (int j = 0; j < 2; ++j) {
      const CoinSpinor& v = es.vectors[j];
      const Matrix2 proj{{v.a0 * std::conj(v.a0), v.a0 * std::conj(v.a1), v.a1 * std::conj(v.a0),
                          v.a1 * std::conj(v.a1)}};
      recon = recon + es.lambda[j] * proj;
    }
    CHECK(max_abs_diff(recon, h) < 1e-10);
  }
}

TEST_CASE("normalization collapses at rho = 1/sqrt2, k = -nu") {
  const WalkParams p(kInvSqrt2, 0.8);
  const auto n = normalization_factors(-0.8, p);
  CHECK(std::min(n[0], n[1]) < 1e-14);
  CHECK_THROWS_AS(eigensystem(-0.8, p), DegenerateNormalization);
  // the overlap weights stay finite through the projector route
  const auto w = overlap_weights(-0.8, p, transformed_spinor({kInvSqrt2, cplx{0, kInvSqrt2}}, p));
  CHECK(w[0] + w[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("group velocity") {
  const WalkParams p(0.6, 1.0);
  CHECK(std::abs(group_velocity_h(kPi / 2, p)) < 1e-15);
  CHECK(std::abs(group_velocity_h(-kPi / 2, p)) < 1e-15);
  const WalkParams p0(0.3, 0.0);
  CHECK(group_velocity_h(0.0, p0) == doctest::Approx(p0.coupling()).epsilon(1e-15));
  // agrees with i lambda_2' / lambda_2 by finite differences
  const double k = 0.37, d = 1e-6;
  const cplx lp = eigensystem(k + d, p).lambda[1];
  const cplx lm = eigensystem(k - d, p).lambda[1];
  const cplx l0 = eigensystem(k, p).lambda[1];
  const double fd = std::real(cplx{0, 1} * (lp - lm) / (2 * d) / l0);
  CHECK(fd == doctest::Approx(group_velocity_h(k, p)).epsilon(1e-8));
}

TEST_CASE("max of h over k is the support half-width") {
  for (auto [rho, nu] : {std::pair{0.3, 1.1}, {0.45, 0.9}, {0.6, 1.0}, {0.8, 2.5}, {kInvSqrt2, kPi / 4}}) {
    const WalkParams p(rho, nu);
    double best = -1.0, best_k = 0.0;
    const int grid = 20000;
    for (int i = 0; i < grid; ++i) {
      const double k = -kPi + 2 * kPi * i / grid;
      const double h = group_velocity_h(k, p);
      if (h > best) best = h, best_k = k;
    }
    // golden-section refinement
    double a = best_k - 2 * kPi / grid, b = best_k + 2 * kPi / grid;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 200; ++it) {
      const double c = b - g * (b - a), e = a + g * (b - a);
      if (group_velocity_h(c, p) > group_velocity_h(e, p)) b = e; else a = c;
    }
    CHECK(std::abs(group_velocity_h((a + b) / 2, p) - support_hstar(p)) < 1e-8);
  }
}

TEST_CASE("transformed spinor stays normalized") {
  const CoinSpinor c{cplx{0.6, 0.0}, cplx{0.0, 0.8}};
  const CoinSpinor t = transformed_spinor(c, WalkParams(0.4, 2.7));
  CHECK(t.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(t.a0 - std::polar(1.0, 1.35) * c.a0) < 1e-15);
  CHECK(std::abs(t.a1 - std::polar(1.0, -1.35) * c.a1) < 1e-15);
}

TEST_CASE("Fourier reconstruction") {
  SUBCASE("t = 0") {
    const WaveState s = evolve_fourier({1.0, 0.0}, WalkParams(0.5, 0.5), 0, Variant::full);
    REQUIRE(s.amps.size() == 1);
    CHECK(std::abs(s.amps[0].a0 - 1.0) < 1e-15);
    CHECK(std::abs(s.amps[0].a1) < 1e-15);
  }
  SUBCASE("t = 50 at rho = 1/sqrt2, nu = pi/4") {
    const WalkParams p(kInvSqrt2, kPi / 4);
    for (Variant v : {Variant::full, Variant::cmv_only}) {
      const auto a = distribution(evolve({1.0, 0.0}, p, 50, v));
      const auto b = distribution(evolve_fourier({1.0, 0.0}, p, 50, v));
      CHECK(total_variation(a, b) <= 1e-10);
    }
  }
  SUBCASE("amplitudes match, including the special set") {
    const CoinSpinor c{kInvSqrt2, cplx{0.0, kInvSqrt2}};
    for (auto [rho, nu] : {std::pair{kInvSqrt2, kPi / 2}, {kInvSqrt2, 0.3}, {0.2, -2.0}}) {
      const WalkParams p(rho, nu);
      for (Variant v : {Variant::full, Variant::cmv_only}) {
        const WaveState a = evolve(c, p, 37, v);
        const WaveState b = evolve_fourier(c, p, 37, v);
        double err = 0.0;
        for (std::size_t i = 0; i < a.amps.size(); ++i) {
          err = std::max({err, std::abs(a.amps[i].a0 - b.amps[i].a0), std::abs(a.amps[i].a1 - b.amps[i].a1)});
        }
        CHECK(err < 1e-11);
      }
    }
  }
  SUBCASE("nothing outside [-t, t]") {
    const WaveState s = evolve_fourier({0.6, cplx{0, 0.8}}, WalkParams(0.3, 1.0), 25, Variant::full, 1);
    CHECK(s.x_min == -26);
    CHECK(std::abs(s.amps.front().a0) + std::abs(s.amps.front().a1) < 1e-12);
    CHECK(std::abs(s.amps.back().a0) + std::abs(s.amps.back().a1) < 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(evolve_fourier({1.0, 0.0}, WalkParams(0.5, 0.5), -1, Variant::full), ValidationError);
    CHECK(fourier_node_count(0) == 4);
    CHECK(fourier_node_count(200) == 512);
  }
}
