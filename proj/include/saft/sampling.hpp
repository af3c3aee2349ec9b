#pragma once

// Shannon-type sampling: the orthonormal atom family, the low-pass kernel,
// analysis/synthesis, and the orthogonal projection onto the sampling space.
//
// Inner products against the atoms have O(1/W) truncation error from the
// sinc tails. The default quadrature therefore uses window-halving
// extrapolation: the tail contribution beyond W scales like 1/W, so
// 2*I(W) - I(W/2) cancels the leading tail term. Plain truncated trapezoid
// is available, and is used automatically when the half window would cut
// into the atoms themselves.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "saft/params.hpp"
#include "saft/signal.hpp"

namespace saft {

// sinc(x) = sin(pi x)/(pi x), sinc(0) = 1. Under T*sigma = pi*b the
// alternative display sin(u)/u with u = sigma(t - t_n)/b is the same
// function of t/T - n.
inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

struct BandlimitSpec {
  double sigma;
  double T;
};

inline BandlimitSpec bandlimit_from_sigma(const SaftParams& m, double sigma) {
  return {sigma, std::numbers::pi * m.b / sigma};
}
inline BandlimitSpec bandlimit_from_T(const SaftParams& m, double T) {
  return {std::numbers::pi * m.b / T, T};
}

// phi_n(t) = (1/sqrt(T)) e^{-j(a t^2 - a (nT)^2)/2b} e^{-j p (t-nT)/b} sinc(t/T - n)
inline cplx basis_phi(const SaftParams& m, double T, long n, double t) {
  const double tn = static_cast<double>(n) * T;
  const double phase = -(m.a * (t * t - tn * tn)) / (2.0 * m.b) - m.p * (t - tn) / m.b;
  return std::polar(sinc(t / T - static_cast<double>(n)) / std::sqrt(T), phase);
}

// psi(t) = sqrt(2 pi |b|) e^{-j a t^2/2b} e^{-j p t/b} sinc(t/T); the
// convolution (f (*)_A psi) reproduces SAFT-bandlimited f.
inline cplx lowpass_psi(const SaftParams& m, double T, double t) {
  const double phase = -m.a * t * t / (2.0 * m.b) - m.p * t / m.b;
  return std::polar(std::sqrt(2.0 * std::numbers::pi * std::abs(m.b)) * sinc(t / T), phase);
}

enum class TailMode { plain, richardson };

namespace detail {

// Trapezoid of x[i]*conj(y[i]) over the index range [i0, i1].
inline cplx inner_range(const std::vector<cplx>& x, const std::vector<cplx>& y,
                        std::size_t i0, std::size_t i1, double dt) {
  cplx s{};
  for (std::size_t i = i0; i <= i1; ++i) s += x[i] * std::conj(y[i]);
  s -= 0.5 * (x[i0] * std::conj(y[i0]) + x[i1] * std::conj(y[i1]));
  return s * dt;
}

struct TailWindow {
  std::size_t h0, h1;  // index range of the central half window
  double lo, hi;       // abscissas of the half window edges
};

inline TailWindow half_window(const UniformGrid& g) {
  const double c = 0.5 * (g.t0 + g.back());
  const double W = 0.5 * (g.back() - g.t0);
  const double lo = c - 0.5 * W, hi = c + 0.5 * W;
  auto idx = [&](double t, bool up) {
    double x = (t - g.t0) / g.dt;
    long i = up ? static_cast<long>(std::ceil(x - 1e-9)) : static_cast<long>(std::floor(x + 1e-9));
    if (i < 0) i = 0;
    if (i >= static_cast<long>(g.n)) i = static_cast<long>(g.n) - 1;
    return static_cast<std::size_t>(i);
  };
  return {idx(lo, true), idx(hi, false), lo, hi};
}

}  // namespace detail

// c[k] = <f, phi_k> for k in [nmin, nmax].
inline SampleSeq analyze(const SaftParams& m, const Signal& f, double T, long nmin, long nmax,
                         TailMode mode = TailMode::richardson) {
  validate(m);
  if (f.grid.n < 2) throw EmptyGrid{};
  const double lo = f.grid.t0, hi = f.grid.back();
  if (static_cast<double>(nmin) * T < lo + 2.0 * T ||
      static_cast<double>(nmax) * T > hi - 2.0 * T)
    throw GridTooNarrow{};

  const auto hw = detail::half_window(f.grid);
  std::vector<cplx> atom(f.grid.n);
  SampleSeq c{nmin, std::vector<cplx>(static_cast<std::size_t>(nmax - nmin + 1))};
  for (long n = nmin; n <= nmax; ++n) {
    for (std::size_t i = 0; i < f.grid.n; ++i) atom[i] = basis_phi(m, T, n, f.grid.point(i));
    const cplx full = detail::inner_range(f.values, atom, 0, f.grid.n - 1, f.grid.dt);
    const double tn = static_cast<double>(n) * T;
    const bool safe = tn > hw.lo + 4.0 * T && tn < hw.hi - 4.0 * T;
    if (mode == TailMode::richardson && safe) {
      const cplx half = detail::inner_range(f.values, atom, hw.h0, hw.h1, f.grid.dt);
      c.ref(n) = 2.0 * full - half;
    } else {
      c.ref(n) = full;
    }
  }
  return c;
}

// sum_k samples[k] * sqrt(T) * phi_k(t): interpolating at the lattice
// (phi_k(mT) = delta_{km}/sqrt(T)) and lying in span{phi_k} by construction.
inline cplx synth_at(const SaftParams& m, const SampleSeq& samples, double T, double t) {
  cplx s{};
  const double rT = std::sqrt(T);
  for (long k = samples.kmin(); k <= samples.kmax(); ++k)
    s += samples.at(k) * rT * basis_phi(m, T, k, t);
  return s;
}

inline Signal synthesize(const SaftParams& m, const SampleSeq& samples, double T,
                         const UniformGrid& tgrid) {
  validate(m);
  return sample_function(tgrid, [&](double t) { return synth_at(m, samples, T, t); });
}

// Two equivalent cardinal-series displays of the sampling formula, written
// with the opposite chirp orientation from the projection atoms. They are
// kept as separate code paths so the equivalence can be checked numerically.
inline cplx cardinal_series(const SaftParams& m, const SampleSeq& samples, double T, double t) {
  cplx s{};
  for (long k = samples.kmin(); k <= samples.kmax(); ++k) {
    const double tk = static_cast<double>(k) * T;
    const double phase =
        m.a * t * t / (2.0 * m.b) - m.a * tk * tk / (2.0 * m.b) + m.p * (t - tk) / m.b;
    s += samples.at(k) * std::polar(sinc(t / T - static_cast<double>(k)), phase);
  }
  return s;
}

inline cplx cardinal_series_zeta(const SaftParams& m, const SampleSeq& samples, double T,
                                 double t) {
  cplx s{};
  for (long k = samples.kmin(); k <= samples.kmax(); ++k) {
    const double tk = static_cast<double>(k) * T;
    s += samples.at(k) * std::conj(zeta(m, tk)) * sinc(t / T - static_cast<double>(k));
  }
  return s * zeta(m, t);
}

// Orthogonal projection onto span{phi_n}: synthesize(<f,phi_n>/sqrt(T)).
inline Signal project(const SaftParams& m, const Signal& f, double T, long nmin, long nmax,
                      const UniformGrid& tgrid, TailMode mode = TailMode::richardson) {
  SampleSeq c = analyze(m, f, T, nmin, nmax, mode);
  const double rT = std::sqrt(T);
  for (auto& v : c.values) v /= rT;
  return synthesize(m, c, T, tgrid);
}

// <phi_n, phi_k> for n,k in [-N, N], quadrature over `window`.
inline std::vector<std::vector<cplx>> gram_matrix(const SaftParams& m, double T, int N,
                                                  const UniformGrid& window,
                                                  TailMode mode = TailMode::richardson) {
  validate(m);
  const int dim = 2 * N + 1;
  std::vector<std::vector<cplx>> atoms(static_cast<std::size_t>(dim),
                                       std::vector<cplx>(window.n));
  for (int n = -N; n <= N; ++n)
    for (std::size_t i = 0; i < window.n; ++i)
      atoms[static_cast<std::size_t>(n + N)][i] = basis_phi(m, T, n, window.point(i));

  const auto hw = detail::half_window(window);
  std::vector<std::vector<cplx>> G(static_cast<std::size_t>(dim),
                                   std::vector<cplx>(static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r) {
    for (int s = r; s < dim; ++s) {
      const cplx full =
          detail::inner_range(atoms[static_cast<std::size_t>(r)],
                              atoms[static_cast<std::size_t>(s)], 0, window.n - 1, window.dt);
      cplx v = full;
      if (mode == TailMode::richardson) {
        const cplx half =
            detail::inner_range(atoms[static_cast<std::size_t>(r)],
                                atoms[static_cast<std::size_t>(s)], hw.h0, hw.h1, window.dt);
        v = 2.0 * full - half;
      }
      G[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = v;
      G[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] = std::conj(v);
    }
  }
  return G;
}

}  // namespace saft
