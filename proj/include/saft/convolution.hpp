#pragma once

// Chirp-twisted convolution of signals, the discrete-time transform of a
// sequence, semi-discrete convolution of a sequence with a function, and the
// Grammian machinery behind the Riesz-basis condition.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>

#include "saft/params.hpp"
#include "saft/signal.hpp"
#include "saft/transform.hpp"

namespace saft {

// eta(w) = exp( (j/2b)(d w^2 + Omega w) ), the unit-modulus factor of the
// convolution theorem H = conj(eta) * F * G.
inline cplx eta_factor(const SaftParams& m, double w) {
  const double omega_cap = 2.0 * (m.b * m.q - m.d * m.p);
  return std::polar(1.0, (m.d * w * w + omega_cap * w) / (2.0 * m.b));
}

// (f*g)(t) = (1/sqrt(2pi)) * dt * sum_j f(t - x_j) g(x_j), full overlap;
// output grid starts at f.t0 + g.t0 with length nf + ng - 1.
inline Signal std_convolve(const Signal& f, const Signal& g) {
  if (f.grid.n == 0 || g.grid.n == 0) throw EmptyGrid{};
  if (std::abs(f.grid.dt - g.grid.dt) > 1e-12 * f.grid.dt) throw GridMismatch{};
  const std::size_t nf = f.grid.n, ng = g.grid.n;
  Signal h{{f.grid.t0 + g.grid.t0, f.grid.dt, nf + ng - 1},
           std::vector<cplx>(nf + ng - 1, cplx{})};
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < ng; ++j) h.values[i + j] += f.values[i] * g.values[j];
  const double scale = f.grid.dt / std::sqrt(2.0 * std::numbers::pi);
  for (auto& v : h.values) v *= scale;
  return h;
}

// (f (*)_A g)(t) = conj(Lambda(t))/sqrt(|b|) * (Lambda f * Lambda g)(t)
inline Signal saft_convolve(const SaftParams& m, const Signal& f, const Signal& g) {
  validate(m);
  Signal h = std_convolve(chirp_up(m, f), chirp_up(m, g));
  const double scale = 1.0 / std::sqrt(std::abs(m.b));
  for (std::size_t i = 0; i < h.values.size(); ++i)
    h.values[i] *= scale * std::conj(chirp_factor(m, h.grid.point(i)));
  return h;
}

// Direct evaluation of the twisted convolution at one point, quadrature over
// g's grid. Used where only a few output points are needed.
inline cplx saft_convolve_at(const SaftParams& m, const std::function<cplx(double)>& f,
                             const Signal& g, double t) {
  std::vector<cplx> prod(g.values.size());
  for (std::size_t j = 0; j < prod.size(); ++j) {
    const double x = g.grid.point(j);
    prod[j] = f(t - x) * chirp_factor(m, t - x) * g.values[j] * chirp_factor(m, x);
  }
  cplx s = trapezoid(prod, g.grid);
  return s * std::conj(chirp_factor(m, t)) /
         std::sqrt(2.0 * std::numbers::pi * std::abs(m.b));
}

// || SAFT(f (*)_A g) - conj(eta) F G || / || conj(eta) F G || on wgrid.
inline double convolution_theorem_residual(const SaftParams& m, const Signal& f,
                                           const Signal& g, const UniformGrid& wgrid) {
  validate(m);
  Spectrum H = forward(m, saft_convolve(m, f, g), wgrid);
  Spectrum F = forward(m, f, wgrid);
  Spectrum G = forward(m, g, wgrid);
  std::vector<double> num(wgrid.n), den(wgrid.n);
  for (std::size_t i = 0; i < wgrid.n; ++i) {
    const cplx ref = std::conj(eta_factor(m, wgrid.point(i))) * F.values[i] * G.values[i];
    num[i] = std::norm(H.values[i] - ref);
    den[i] = std::norm(ref);
  }
  const double d2 = trapezoid(den, wgrid);
  if (d2 <= 0.0) throw DivisionByZeroNorm{};
  return std::sqrt(trapezoid(num, wgrid) / d2);
}

// Discrete-time transform of a sequence: exact finite sum, no quadrature.
// Its modulus is periodic with period delta = 2 pi b.
inline cplx dtsaft(const SaftParams& m, const SampleSeq& seq, double w) {
  const double omega_cap = 2.0 * (m.b * m.q - m.d * m.p);
  cplx s{};
  for (long k = seq.kmin(); k <= seq.kmax(); ++k) {
    const double kd = static_cast<double>(k);
    const double phase =
        (m.a * kd * kd + m.d * w * w - 2.0 * w * kd + omega_cap * w + 2.0 * m.p * kd) /
        (2.0 * m.b);
    s += seq.at(k) * std::polar(1.0, phase);
  }
  return s / std::sqrt(2.0 * std::numbers::pi * std::abs(m.b));
}

// Semi-discrete convolution of a sequence with a function phi:
// h(t) = (1/sqrt(2pi|b|)) e^{-jat^2/2b} sum_k e^{jak^2/2b} p(k) e^{ja(t-k)^2/2b} phi(t-k)
inline cplx semidiscrete_at(const SaftParams& m, const SampleSeq& seq,
                            const std::function<cplx(double)>& phi, double t) {
  cplx s{};
  for (long k = seq.kmin(); k <= seq.kmax(); ++k) {
    const cplx pk = seq.at(k);
    if (pk == cplx{}) continue;
    const double kd = static_cast<double>(k);
    s += chirp_factor(m, kd) * pk * chirp_factor(m, t - kd) * phi(t - kd);
  }
  return s * std::conj(chirp_factor(m, t)) / std::sqrt(2.0 * std::numbers::pi * std::abs(m.b));
}

inline Signal semidiscrete(const SaftParams& m, const SampleSeq& seq,
                           const std::function<cplx(double)>& phi, const UniformGrid& tgrid) {
  validate(m);
  return sample_function(tgrid, [&](double t) { return semidiscrete_at(m, seq, phi, t); });
}

// Truncated Grammian G(w) = sum_{|k|<=K} |Phi(w + k*delta)|^2.
inline double grammian(const SaftParams& m, const std::function<cplx(double)>& Phi, double w,
                       int K) {
  const double delta = derived(m).delta;
  double s = 0.0;
  for (int k = -K; k <= K; ++k) s += std::norm(Phi(w + k * delta));
  return s;
}

// Doubles K until the value settles below 1e-10 (cap 4096).
inline double grammian_auto(const SaftParams& m, const std::function<cplx(double)>& Phi,
                            double w, int K0 = 64) {
  double prev = grammian(m, Phi, w, K0);
  for (int K = 2 * K0; K <= 4096; K *= 2) {
    double cur = grammian(m, Phi, w, K);
    if (std::abs(cur - prev) < 1e-10) return cur;
    prev = cur;
  }
  return prev;
}

// (eta1, eta2) = min/max of the Grammian over one period.
inline std::pair<double, double> riesz_bounds(const SaftParams& m,
                                              const std::function<cplx(double)>& Phi, int K,
                                              int sweep_n) {
  validate(m);
  const double delta = derived(m).delta;
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < sweep_n; ++i) {
    const double w = delta * static_cast<double>(i) / static_cast<double>(sweep_n);
    const double g = grammian(m, Phi, w, K);
    if (i == 0) {
      lo = hi = g;
    } else {
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
  }
  if (lo < 1e-12) throw DegenerateGenerator{};
  return {lo, hi};
}

}  // namespace saft
