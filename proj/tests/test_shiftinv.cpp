#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "saft/params.hpp"
#include "saft/shiftinv.hpp"
#include "saft/signal.hpp"

using namespace saft;

namespace {
SampleSeq random_seq(long kmin, long kmax, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampleSeq s{kmin, {}};
  for (long k = kmin; k <= kmax; ++k) s.values.emplace_back(u(rng), u(rng));
  return s;
}
}  // namespace

TEST_CASE("power cosine profile") {
  CHECK(power_cosine(0.0) == doctest::Approx(2.0 / 3.0));
  CHECK(power_cosine(1.0) == doctest::Approx(1.0 / 6.0));
  CHECK(power_cosine(-1.0) == doctest::Approx(1.0 / 6.0));
  CHECK(power_cosine(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(power_cosine(3.0) == 0.0);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (int i = 0; i < 20; ++i) {
    const double t = u(rng);
    CHECK(power_cosine(t) == doctest::Approx(power_cosine(-t)));
    CHECK(power_cosine(t) >= 0.0);
  }
}

TEST_CASE("generators record their integer samples") {
  Generator pc = power_cosine_generator();
  CHECK(std::abs(pc.integer_samples.at(0) - cplx{2.0 / 3.0, 0.0}) < 1e-14);
  CHECK(std::abs(pc.integer_samples.at(1) - cplx{1.0 / 6.0, 0.0}) < 1e-14);
  CHECK(std::abs(pc.integer_samples.at(2)) < 1e-14);

  Generator sc = sinc_generator(16);
  CHECK(std::abs(sc.integer_samples.at(0) - cplx{1.0, 0.0}) < 1e-14);
  for (long k = 1; k <= 16; ++k) CHECK(std::abs(sc.integer_samples.at(k)) < 1e-14);
  CHECK(sc.nu(17.5) == 0.0);
}

TEST_CASE("power cosine inverse filter") {
  InverseDiscreteFilter f = power_cosine_filter();
  CHECK(f.kind == FilterKind::exact_geometric);
  CHECK(f.mu == doctest::Approx(std::sqrt(3.0) - 2.0));
  CHECK(std::abs(f.taps.at(0) - cplx{std::sqrt(3.0), 0.0}) < 1e-12);
  CHECK(std::abs(f.taps.at(1) - cplx{3.0 - 2.0 * std::sqrt(3.0), 0.0}) < 1e-12);
  CHECK(std::abs(f.taps.at(-1) - f.taps.at(1)) < 1e-15);

  // interpolation condition against nu's integer samples
  Generator pc = power_cosine_generator();
  SampleSeq conv = discrete_convolve(f.taps, pc.integer_samples);
  for (long mth = -20; mth <= 20; ++mth) {
    const double want = mth == 0 ? 1.0 : 0.0;
    CHECK(std::abs(conv.at(mth) - cplx{want, 0.0}) < 1e-10);
  }
}

TEST_CASE("sinc generator has the identity filter") {
  InverseDiscreteFilter f = inverse_filter(sinc_generator(32));
  CHECK(f.kind == FilterKind::identity);
  CHECK(f.taps.values.size() == 1);
  CHECK(f.taps.at(0) == cplx{1.0, 0.0});
}

TEST_CASE("Fourier condition on the symbol") {
  Generator pc = power_cosine_generator();
  InverseDiscreteFilter f = inverse_filter(pc);
  for (int i = 0; i < 1024; ++i) {
    const double w = 2.0 * std::numbers::pi * i / 1024.0;
    cplx theta_hat{}, nu_hat{};
    for (long k = f.taps.kmin(); k <= f.taps.kmax(); ++k)
      theta_hat += f.taps.at(k) * std::polar(1.0, -w * static_cast<double>(k));
    for (long k = -2; k <= 2; ++k)
      nu_hat += pc.integer_samples.at(k) * std::polar(1.0, -w * static_cast<double>(k));
    CHECK(std::abs(theta_hat * nu_hat - cplx{1.0, 0.0}) < 1e-6);
  }
}

TEST_CASE("dft-derived filter matches the closed form") {
  Generator pc = power_cosine_generator();
  pc.name = "power-cosine-generic";  // force the DFT path
  InverseDiscreteFilter f = inverse_filter(pc);
  CHECK(f.kind == FilterKind::dft_derived);
  InverseDiscreteFilter exact = power_cosine_filter();
  for (long k = -10; k <= 10; ++k) CHECK(std::abs(f.taps.at(k) - exact.taps.at(k)) < 1e-10);
  SampleSeq conv = discrete_convolve(f.taps, pc.integer_samples);
  for (long mth = -20; mth <= 20; ++mth)
    CHECK(std::abs(conv.at(mth) - cplx{mth == 0 ? 1.0 : 0.0, 0.0}) < 1e-10);
}

TEST_CASE("a symbol with a zero is rejected") {
  Generator tri;
  tri.profile = [](double t) { return std::max(0.0, 1.0 - std::abs(t) / 2.0); };
  tri.support = 2.0;
  tri.integer_samples = SampleSeq{-2, {cplx{}, cplx{0.5, 0}, cplx{1, 0}, cplx{0.5, 0}, cplx{}}};
  tri.name = "wide-triangle";
  CHECK_THROWS_AS(inverse_filter(tri), NonInvertibleSymbol);
}

TEST_CASE("compute_weights with the sinc generator is the identity") {
  SaftParams m = preset("experiment");
  SampleSeq s = random_seq(-5, 5, 7);
  SampleSeq p = compute_weights(m, s, sinc_generator(32), 0.35);
  for (long k = -5; k <= 5; ++k) CHECK(std::abs(p.at(k) - s.at(k)) < 1e-13);
}

TEST_CASE("weights reproduce the samples at the lattice") {
  SaftParams m = preset("experiment");
  const double T = 0.3;
  Generator pc = power_cosine_generator();
  SampleSeq s = random_seq(-6, 6, 11);
  SampleSeq p = compute_weights(m, s, pc, T);
  for (long k = -6; k <= 6; ++k)
    CHECK(std::abs(si_value(m, p, pc, T, static_cast<double>(k) * T) - s.at(k)) < 1e-8);
}

TEST_CASE("interpolating with the composite basis equals weighting then interpolating") {
  SaftParams m = preset("experiment");
  const double T = 0.3;
  Generator pc = power_cosine_generator();
  InverseDiscreteFilter f = inverse_filter(pc);
  SampleSeq s = random_seq(-6, 6, 13);
  SampleSeq p = compute_weights(m, s, pc, T);

  Generator composite;
  composite.support = pc.support + static_cast<double>(f.max_lag());
  composite.profile = [pc, f](double t) {
    double v = 0.0;
    for (long j = f.taps.kmin(); j <= f.taps.kmax(); ++j)
      v += f.taps.at(j).real() * pc.nu(t - static_cast<double>(j));
    return v;
  };
  composite.integer_samples = detail::integer_samples_of(composite.profile, composite.support);
  composite.name = "composite";

  for (double t : {-1.7, -0.4, 0.0, 0.21, 1.3}) {
    const cplx lhs = si_value(m, s, composite, T, t);
    const cplx rhs = si_value(m, p, pc, T, t);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("si_interpolate of an impulse with no chirp is the profile shape") {
  SaftParams m{0, 1, -1, 0, 0, 0};
  Generator pc = power_cosine_generator();
  SampleSeq imp{0, {cplx{1.0, 0.0}}};
  const double T = 0.5;
  UniformGrid g = make_grid(-2, 2, 101);
  Signal out = si_interpolate(m, imp, pc, g, T);
  for (std::size_t i = 0; i < g.n; ++i)
    CHECK(std::abs(out.values[i] - cplx{pc.nu(g.point(i) / T), 0.0}) < 1e-13);
}

TEST_CASE("si output vanishes beyond the dilated support") {
  SaftParams m = preset("experiment");
  Generator pc = power_cosine_generator();
  SampleSeq s = random_seq(-3, 3, 17);
  const double T = 0.5;
  CHECK(si_value(m, s, pc, T, 3.0) == cplx{});   // t/T = 6 > 3 + 2
  CHECK(si_value(m, s, pc, T, -2.8) == cplx{});  // t/T = -5.6
}

TEST_CASE("fdf at zero delay returns in-space samples") {
  SaftParams m = preset("experiment");
  const double T = 0.3;
  Generator pc = power_cosine_generator();
  // a signal living in the shift-invariant space: fix weights, read lattice
  SampleSeq w = random_seq(-6, 6, 19);
  SampleSeq s{-10, std::vector<cplx>(21)};
  for (long k = -10; k <= 10; ++k)
    s.ref(k) = si_value(m, w, pc, T, static_cast<double>(k) * T);
  SampleSeq est = fdf(m, s, pc, 0.0, T);
  for (long k = -8; k <= 8; ++k) CHECK(std::abs(est.at(k) - s.at(k)) < 1e-8);
}

TEST_CASE("fdf rejects delays outside [0, T]") {
  SaftParams m = preset("experiment");
  SampleSeq s = random_seq(-3, 3, 23);
  CHECK_THROWS_AS(fdf(m, s, power_cosine_generator(), -0.1, 1.0), DelayOutOfRange);
  CHECK_THROWS_AS(fdf(m, s, power_cosine_generator(), 1.2, 1.0), DelayOutOfRange);
}

TEST_CASE("psnr") {
  SampleSeq ref = random_seq(-10, 10, 29);
  SUBCASE("identical sequences saturate") {
    CHECK(std::isinf(psnr(ref, ref)));
  }
  SUBCASE("uniform error of a tenth of the peak gives 20 dB") {
    double peak = 0.0;
    for (auto v : ref.values) peak = std::max(peak, std::abs(v));
    SampleSeq est = ref;
    for (auto& v : est.values) v += cplx{peak / 10.0, 0.0};
    CHECK(psnr(ref, est) == doctest::Approx(20.0).epsilon(1e-12));
  }
  SUBCASE("zero reference is rejected") {
    SampleSeq z{0, std::vector<cplx>(5, cplx{})};
    CHECK_THROWS_AS(psnr(z, z), ZeroReference);
  }
  SUBCASE("mismatched shapes are rejected") {
    SampleSeq other = random_seq(-9, 11, 31);
    CHECK_THROWS_AS(psnr(ref, other), GridMismatch);
  }
}

TEST_CASE("power cosine transform matches its cardinal expansion") {
  // nu_hat(w) = int nu(t) e^{-jwt} dt versus sum_k rho_k sin(2w-k pi)/(2w-k pi)
  // with rho_k = 4/((2+k)!(2-k)!)
  auto nu_hat = [](double w) {
    const int n = 8001;
    UniformGrid g = make_grid(-2.0, 2.0, n);
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i)] =
          power_cosine(g.point(i)) * std::polar(1.0, -w * g.point(i));
    return trapezoid(v, g);
  };
  auto plain_sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
  const double rho[5] = {4.0 / 24.0, 4.0 / 6.0, 1.0, 4.0 / 6.0, 4.0 / 24.0};
  for (double w : {0.0, 0.3, 1.0, std::numbers::pi, 4.0}) {
    cplx series{};
    for (int k = -2; k <= 2; ++k)
      series += rho[k + 2] * plain_sinc(2.0 * w - k * std::numbers::pi);
    CHECK(std::abs(nu_hat(w) - series) < 1e-4);
  }
  // endpoints of the symbol sweep
  CHECK(std::abs(nu_hat(0.0) - cplx{1.0, 0.0}) < 1e-6);
  CHECK(std::abs(nu_hat(std::numbers::pi) - cplx{1.0 / 6.0, 0.0}) < 1e-6);
}
