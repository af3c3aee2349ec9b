#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "saft/convolution.hpp"
#include "saft/params.hpp"
#include "saft/sampling.hpp"
#include "saft/signal.hpp"
#include "saft/transform.hpp"
#include "saft/zak_poisson.hpp"

using namespace saft;

namespace {
cplx gauss(double t) { return cplx{std::exp(-t * t / 2.0), 0.0}; }
cplx chirped_gauss(double t) {
  return std::exp(-t * t / 2.0) * std::polar(1.0, 0.25 * t * t + 0.3 * t);
}
}  // namespace

TEST_CASE("zak of zero and of a compact one-period function") {
  SaftParams m = preset("experiment");
  CHECK(zak(m, [](double) { return cplx{}; }, 0.3, 1.1, 16) == cplx{});

  // supported in [0,1): only the k=0 term survives at t in [0,1)
  auto f = [](double t) {
    return t >= 0.0 && t < 1.0 ? cplx{std::sin(3.0 * t) + 0.5, 0.2} : cplx{};
  };
  const double t = 0.37, w = 2.1;
  const double oc = derived(m).omega_cap;
  const cplx want = f(t) * std::polar(1.0, (m.d * w * w + oc * w) / (2.0 * m.b)) /
                    std::sqrt(2.0 * std::numbers::pi * m.b);
  CHECK(std::abs(zak(m, f, t, w, 32) - want) < 1e-14);
}

TEST_CASE("zak requires b > 0") {
  SaftParams m{0, -1, 1, 0, 0, 0};
  CHECK_THROWS_AS(zak(m, [](double) { return cplx{}; }, 0.0, 0.0, 4), NegativeB);
}

TEST_CASE("zak modulus and quasi-period in omega") {
  SaftParams m = preset("experiment");
  const double delta = derived(m).delta;
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ut(0.0, 1.0), uw(0.0, delta);
  for (int i = 0; i < 20; ++i) {
    const double t = ut(rng), w = uw(rng);
    const cplx z = zak(m, chirped_gauss, t, w, 32);
    const cplx zs = zak(m, chirped_gauss, t, w + delta, 32);
    CHECK(std::abs(std::abs(zs) - std::abs(z)) < 1e-12);
    const cplx factor = zak_quasiperiod_factor(m, w);
    CHECK(std::abs(factor) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(zs - factor * z) < 1e-10);
  }
  SaftParams plain{1, 1, -1, 0, 0, 0};  // d = 0, offsets 0 => Omega = 0
  CHECK(std::abs(zak_quasiperiod_factor(plain, 0.7) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("zak isometry for a Gaussian") {
  SaftParams m = preset("experiment");
  CHECK(zak_isometry_residual(m, gauss, 64, 96, 128, 10.0) < 1e-3);
}

TEST_CASE("zak at t = 0 is the discrete-time transform of the integer samples") {
  SaftParams m = preset("experiment");
  const int K = 12;
  SampleSeq s{-K, std::vector<cplx>(2 * K + 1)};
  for (int k = -K; k <= K; ++k) s.ref(k) = chirped_gauss(k);
  for (double w : {0.0, 0.8, 3.3, 11.0})
    CHECK(std::abs(zak(m, chirped_gauss, 0.0, w, K) - dtsaft(m, s, w)) < 1e-10);
}

TEST_CASE("energy of the zero-time Zak slice over one period") {
  SaftParams m = preset("experiment");
  const double delta = derived(m).delta;
  const int N = 4096;
  double lhs = 0.0;
  for (int i = 0; i < N; ++i)
    lhs += std::norm(zak(m, chirped_gauss, 0.0, delta * i / N, 16));
  lhs *= delta / N;
  double rhs = 0.0;
  for (int k = -16; k <= 16; ++k) rhs += std::norm(chirped_gauss(k));
  CHECK(std::abs(lhs - rhs) / rhs < 1e-6);
}

TEST_CASE("poisson summation for a chirped Gaussian") {
  SaftParams m = preset("experiment");
  const double delta = derived(m).delta;
  UniformGrid tg{0.0, delta / 64.0, 64};
  CHECK(poisson_residual(m, chirped_gauss, make_grid(-10, 10, 4096), tg, 64) < 1e-3);
}

TEST_CASE("poisson with an interpolating transform") {
  // F vanishes at every nonzero integer and F(0) = 1, so the frequency side
  // collapses to the single term F(0) and the lattice sum is constant.
  SaftParams m{0, 1, -1, 0, 0.4, -0.3};
  UniformGrid wg = make_grid(-12, 12, 4096);
  Spectrum F{wg, {}};
  for (std::size_t i = 0; i < wg.n; ++i) {
    const double w = wg.point(i);
    F.values.emplace_back(sinc(w) * std::exp(-w * w / 8.0), 0.0);
  }
  auto f = [&](double t) { return inverse_at(m, F, t); };
  for (double t : {0.0, 1.3, 2.9, 4.4, 6.0})
    CHECK(std::abs(poisson_lhs(m, f, t, 8) - cplx{1.0, 0.0}) < 1e-3);
}

TEST_CASE("bandlimited energy identity") {
  SaftParams m{0, 1, -1, 0, 0.7, -0.3};
  const double delta = derived(m).delta;  // 2 pi; lattice step for band (-1/2, 1/2)
  SUBCASE("zero signal") {
    CHECK(bandlimited_energy_residual(m, [](double) { return cplx{}; },
                                      make_grid(-10, 10, 512), make_grid(-1, 1, 128),
                                      8) == 0.0);
  }
  SUBCASE("synthesized signal") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampleSeq c{-4, {}};
    for (int k = -4; k <= 4; ++k) c.values.emplace_back(u(rng), u(rng));
    const double T = delta;
    auto g = [&](double t) { return synth_at(m, c, T, t); };
    const double W = 60.0 * T;
    CHECK(bandlimited_energy_residual(m, g, make_grid(-W, W, 16384),
                                      make_grid(-0.75, 0.75, 1024), 128) < 1e-2);
  }
}
