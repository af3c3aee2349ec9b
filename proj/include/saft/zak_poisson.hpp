#pragma once

// Zak transform (quasi-periodic time-frequency map on [0,1]x[0,delta]),
// Poisson summation, and the bandlimited energy identity. All sums are
// truncated at |k| <= K; callers pick K large enough for the decay of f.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "saft/convolution.hpp"
#include "saft/params.hpp"
#include "saft/signal.hpp"
#include "saft/transform.hpp"

namespace saft {

namespace detail {
inline void require_positive_b(const SaftParams& m) {
  validate(m);
  if (m.b < 0.0) throw NegativeB{};
}
}  // namespace detail

// Z(t,w) = (1/sqrt(2 pi b)) sum_k f(t+k) exp{(j/2b)(d w^2 + a k^2 - 2 k w + Omega w + 2 p k)}
inline cplx zak(const SaftParams& m, const std::function<cplx(double)>& f, double t, double w,
                int K) {
  detail::require_positive_b(m);
  const double omega_cap = 2.0 * (m.b * m.q - m.d * m.p);
  cplx s{};
  for (int k = -K; k <= K; ++k) {
    const double kd = k;
    const double phase = (m.d * w * w + m.a * kd * kd - 2.0 * kd * w + omega_cap * w +
                          2.0 * m.p * kd) /
                         (2.0 * m.b);
    s += f(t + kd) * std::polar(1.0, phase);
  }
  return s / std::sqrt(2.0 * std::numbers::pi * m.b);
}

// Z(t, w + delta) = factor(w) * Z(t, w), factor = exp{(j delta/2b)(d delta + 2 d w + Omega)}
inline cplx zak_quasiperiod_factor(const SaftParams& m, double w) {
  detail::require_positive_b(m);
  const double delta = derived(m).delta;
  const double omega_cap = derived(m).omega_cap;
  return std::polar(1.0, delta * (m.d * delta + 2.0 * m.d * w + omega_cap) / (2.0 * m.b));
}

// | integral of |Z|^2 over [0,1]x[0,delta] - ||f||^2 | / ||f||^2.
// Rectangle rule in w (the modulus is delta-periodic), trapezoid in t.
inline double zak_isometry_residual(const SaftParams& m, const std::function<cplx(double)>& f,
                                    int K, int nt, int nw, double f_support) {
  detail::require_positive_b(m);
  const double delta = derived(m).delta;
  const double dw = delta / nw;

  std::vector<double> tslice(static_cast<std::size_t>(nt));
  const UniformGrid tg = make_grid(0.0, 1.0, static_cast<std::size_t>(nt));
  for (int i = 0; i < nt; ++i) {
    double s = 0.0;
    for (int j = 0; j < nw; ++j) s += std::norm(zak(m, f, tg.point(i), j * dw, K));
    tslice[static_cast<std::size_t>(i)] = s * dw;
  }
  const double lhs = trapezoid(tslice, tg);

  const UniformGrid fg = make_grid(-f_support, f_support, 4096);
  std::vector<double> fv(fg.n);
  for (std::size_t i = 0; i < fg.n; ++i) fv[i] = std::norm(f(fg.point(i)));
  const double rhs = trapezoid(fv, fg);
  return std::abs(lhs - rhs) / rhs;
}

// sqrt(2 pi b) sum_k f(t + k delta) zeta(t + k delta), the time-side of Poisson.
inline cplx poisson_lhs(const SaftParams& m, const std::function<cplx(double)>& f, double t,
                        int K) {
  detail::require_positive_b(m);
  const double delta = derived(m).delta;
  cplx s{};
  for (int k = -K; k <= K; ++k) {
    const double x = t + k * delta;
    s += f(x) * zeta(m, x);
  }
  return s * std::sqrt(2.0 * std::numbers::pi * m.b);
}

// Transform values at the integers, F(n) for |n| <= K.
inline SampleSeq saft_at_integers(const SaftParams& m, const Signal& f, int K) {
  validate(m);
  SampleSeq seq{-K, std::vector<cplx>(static_cast<std::size_t>(2 * K + 1))};
  for (int n = -K; n <= K; ++n) seq.ref(n) = forward_at(m, f, static_cast<double>(n));
  return seq;
}

// sum_n exp{(-j/2b)(d n^2 + Omega n - 2 n t)} F(n), the frequency-side of Poisson.
inline cplx poisson_rhs(const SaftParams& m, const SampleSeq& F_int, double t) {
  const double omega_cap = derived(m).omega_cap;
  cplx s{};
  for (long n = F_int.kmin(); n <= F_int.kmax(); ++n) {
    const double nd = static_cast<double>(n);
    const double phase =
        -(m.d * nd * nd + omega_cap * nd - 2.0 * nd * t) / (2.0 * m.b);
    s += F_int.at(n) * std::polar(1.0, phase);
  }
  return s;
}

// max over tgrid of |LHS - RHS| / max|RHS|; F(n) is computed here by
// quadrature over fgrid.
inline double poisson_residual(const SaftParams& m, const std::function<cplx(double)>& f,
                               const UniformGrid& fgrid, const UniformGrid& tgrid, int K) {
  detail::require_positive_b(m);
  const Signal fs = sample_function(fgrid, f);
  const SampleSeq F_int = saft_at_integers(m, fs, K);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < tgrid.n; ++i) {
    const double t = tgrid.point(i);
    const cplx rhs = poisson_rhs(m, F_int, t);
    num = std::max(num, std::abs(poisson_lhs(m, f, t, K) - rhs));
    den = std::max(den, std::abs(rhs));
  }
  if (den == 0.0) return 0.0;
  return num / den;
}

// Energy identity for signals whose transform vanishes off one period:
// sum_k |g(k delta)|^2 vs (1/2 pi b) * integral of |G|^2 over wgrid.
inline double bandlimited_energy_residual(const SaftParams& m,
                                          const std::function<cplx(double)>& g,
                                          const UniformGrid& fgrid, const UniformGrid& wgrid,
                                          int K) {
  detail::require_positive_b(m);
  const double delta = derived(m).delta;
  const Signal gs = sample_function(fgrid, g);
  const Spectrum G = forward(m, gs, wgrid);
  const double rhs = l2_norm_sq_spectrum(G) / delta;
  double lhs = 0.0;
  for (int k = -K; k <= K; ++k) lhs += std::norm(g(k * delta));
  if (rhs == 0.0) return 0.0;
  return std::abs(lhs - rhs) / rhs;
}

}  // namespace saft
