#pragma once

// Reconstruction with arbitrary generators: generator profiles, inverse
// discrete filters satisfying the interpolation condition (theta * nu)(m) =
// delta_m, expansion weights, shift-invariant interpolation on a T-scaled
// lattice, fractional delay filtering, and PSNR scoring.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "saft/params.hpp"
#include "saft/sampling.hpp"
#include "saft/signal.hpp"

namespace saft {

struct Generator {
  std::function<double(double)> profile;  // nu, real-valued
  double support;                         // nu = 0 outside [-support, support]
  SampleSeq integer_samples;              // nu(k) on the support
  std::string name;

  double nu(double t) const { return std::abs(t) > support ? 0.0 : profile(t); }
};

// nu(t) = (2/3) cos^4(pi t / 4) on [-2, 2]; nu(0) = 2/3, nu(+-1) = 1/6.
inline double power_cosine(double t) {
  if (std::abs(t) > 2.0) return 0.0;
  const double c = std::cos(std::numbers::pi * t / 4.0);
  return (2.0 / 3.0) * c * c * c * c;
}

namespace detail {
inline SampleSeq integer_samples_of(const std::function<double(double)>& nu, double support) {
  const long K = static_cast<long>(std::floor(support));
  SampleSeq s{-K, std::vector<cplx>(static_cast<std::size_t>(2 * K + 1))};
  for (long k = -K; k <= K; ++k) s.ref(k) = nu(static_cast<double>(k));
  return s;
}
}  // namespace detail

inline Generator power_cosine_generator() {
  Generator g;
  g.profile = power_cosine;
  g.support = 2.0;
  g.integer_samples = detail::integer_samples_of(g.profile, g.support);
  g.name = "power-cosine";
  return g;
}

// Truncated sinc; an infinite sinc is unrealizable, so the half-width (in
// lattice steps) is a knob.
inline Generator sinc_generator(long half_width = 64) {
  Generator g;
  g.profile = [](double t) { return sinc(t); };
  g.support = static_cast<double>(half_width);
  g.integer_samples = detail::integer_samples_of(g.profile, g.support);
  g.name = "sinc";
  return g;
}

enum class FilterKind { exact_geometric, identity, dft_derived };

struct InverseDiscreteFilter {
  FilterKind kind;
  double mu = 0.0;  // geometric ratio, exact_geometric only
  SampleSeq taps;   // theta[k]
  long max_lag() const { return taps.kmax(); }
};

// theta for the power-cosine generator: theta[k] = -(6 mu/(1-mu^2)) mu^{|k|}
// with mu = sqrt(3) - 2; theta[0] = sqrt(3) exactly.
inline InverseDiscreteFilter power_cosine_filter() {
  const double mu = std::sqrt(3.0) - 2.0;
  const double gain = -6.0 * mu / (1.0 - mu * mu);
  long K = 1;
  while (gain * std::pow(std::abs(mu), static_cast<double>(K)) >= 1e-12 && K < 64) ++K;
  InverseDiscreteFilter f{FilterKind::exact_geometric, mu,
                          {-K, std::vector<cplx>(static_cast<std::size_t>(2 * K + 1))}};
  for (long k = -K; k <= K; ++k)
    f.taps.ref(k) = gain * std::pow(mu, static_cast<double>(std::labs(k)));
  return f;
}

// Inverse filter of a generator. Power-cosine and sinc use closed forms;
// anything else inverts the integer-sample symbol on a dense DFT grid and
// truncates the resulting impulse response.
inline InverseDiscreteFilter inverse_filter(const Generator& gen) {
  if (gen.name == "power-cosine") return power_cosine_filter();
  if (gen.name == "sinc")
    return {FilterKind::identity, 0.0, {0, {cplx{1.0, 0.0}}}};

  auto symbol = [&](double w) {
    cplx s{};
    for (long k = gen.integer_samples.kmin(); k <= gen.integer_samples.kmax(); ++k)
      s += gen.integer_samples.at(k) * std::polar(1.0, -w * static_cast<double>(k));
    return s;
  };
  for (int i = 0; i < 1024; ++i) {
    const double w = 2.0 * std::numbers::pi * i / 1024.0;
    if (std::abs(symbol(w)) < 1e-8) throw NonInvertibleSymbol{};
  }
  const int N = 4096;
  std::vector<cplx> inv(N);
  for (int i = 0; i < N; ++i) inv[i] = 1.0 / symbol(2.0 * std::numbers::pi * i / N);
  // inverse DFT, indices folded to [-N/2, N/2)
  auto tap = [&](long k) {
    cplx s{};
    for (int i = 0; i < N; ++i)
      s += inv[static_cast<std::size_t>(i)] *
           std::polar(1.0, 2.0 * std::numbers::pi * i * static_cast<double>(k) / N);
    return s / static_cast<double>(N);
  };
  long K = 0;
  while (K + 1 < N / 2 && std::abs(tap(K + 1)) >= 1e-12) ++K;
  InverseDiscreteFilter f{FilterKind::dft_derived, 0.0,
                          {-K, std::vector<cplx>(static_cast<std::size_t>(2 * K + 1))}};
  for (long k = -K; k <= K; ++k) f.taps.ref(k) = tap(k);
  return f;
}

// Plain discrete convolution of two finitely supported sequences.
inline SampleSeq discrete_convolve(const SampleSeq& x, const SampleSeq& y) {
  SampleSeq r{x.kmin() + y.kmin(),
              std::vector<cplx>(x.values.size() + y.values.size() - 1, cplx{})};
  for (long i = x.kmin(); i <= x.kmax(); ++i)
    for (long j = y.kmin(); j <= y.kmax(); ++j) r.ref(i + j) += x.at(i) * y.at(j);
  return r;
}

namespace detail {
inline cplx lattice_phase(const SaftParams& m, double T, long k) {
  const double tk = static_cast<double>(k) * T;
  return std::polar(1.0, m.a * tk * tk / (2.0 * m.b) + m.p * tk / m.b);
}
}  // namespace detail

// Weights p[k] from samples f(kT): demodulate the lattice chirp, convolve
// with theta, remodulate. Under the interpolation condition the resulting
// expansion reproduces f at the lattice.
inline SampleSeq compute_weights(const SaftParams& m, const SampleSeq& samples,
                                 const Generator& gen, double T) {
  validate(m);
  const InverseDiscreteFilter f = inverse_filter(gen);
  SampleSeq q = samples;
  for (long k = q.kmin(); k <= q.kmax(); ++k) q.ref(k) *= detail::lattice_phase(m, T, k);
  SampleSeq p = discrete_convolve(q, f.taps);
  for (long k = p.kmin(); k <= p.kmax(); ++k) p.ref(k) *= std::conj(detail::lattice_phase(m, T, k));
  return p;
}

// f(t) = e^{-j a t^2/2b} sum_k p[k] e^{j a (kT)^2/2b} e^{-j p (t-kT)/b} nu((t-kT)/T)
inline cplx si_value(const SaftParams& m, const SampleSeq& p, const Generator& gen, double T,
                     double t) {
  cplx s{};
  // only lattice points whose dilated support reaches t contribute
  const long klo = std::max(p.kmin(), static_cast<long>(std::ceil(t / T - gen.support - 1)));
  const long khi = std::min(p.kmax(), static_cast<long>(std::floor(t / T + gen.support + 1)));
  for (long k = klo; k <= khi; ++k) {
    const cplx pk = p.at(k);
    if (pk == cplx{}) continue;
    const double tk = static_cast<double>(k) * T;
    const double phase = m.a * tk * tk / (2.0 * m.b) - m.p * (t - tk) / m.b;
    s += pk * std::polar(gen.nu((t - tk) / T), phase);
  }
  return s * std::polar(1.0, -m.a * t * t / (2.0 * m.b));
}

inline Signal si_interpolate(const SaftParams& m, const SampleSeq& p, const Generator& gen,
                             const UniformGrid& tgrid, double T) {
  validate(m);
  return sample_function(tgrid, [&](double t) { return si_value(m, p, gen, T, t); });
}

// Estimate samples of the tau-delayed signal: fit the shift-invariant model
// to `samples`, then read it off at mT - tau.
inline SampleSeq fdf(const SaftParams& m, const SampleSeq& samples, const Generator& gen,
                     double tau, double T) {
  validate(m);
  if (tau < 0.0 || tau > T) throw DelayOutOfRange{};
  const SampleSeq p = compute_weights(m, samples, gen, T);
  SampleSeq out{samples.offset, std::vector<cplx>(samples.values.size())};
  for (long k = out.kmin(); k <= out.kmax(); ++k)
    out.ref(k) = si_value(m, p, gen, T, static_cast<double>(k) * T - tau);
  return out;
}

// 10 log10( max|ref|^2 / mean|est - ref|^2 ); +inf when est == ref exactly.
inline double psnr(const SampleSeq& reference, const SampleSeq& estimate) {
  if (reference.offset != estimate.offset ||
      reference.values.size() != estimate.values.size())
    throw GridMismatch{};
  double peak = 0.0, mse = 0.0;
  for (std::size_t i = 0; i < reference.values.size(); ++i) {
    peak = std::max(peak, std::norm(reference.values[i]));
    mse += std::norm(estimate.values[i] - reference.values[i]);
  }
  if (peak == 0.0) throw ZeroReference{};
  mse /= static_cast<double>(reference.values.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak / mse);
}

}  // namespace saft
