#pragma once

// Forward and inverse integral transform by direct quadrature of the kernel.
// No FFT factorization: the point is that every value is an honest
// discretization of the defining integral.

#include <cmath>
#include <complex>
#include <numbers>

#include "saft/params.hpp"
#include "saft/signal.hpp"

namespace saft {

// k(t,w) = exp{ (j/2b)(a t^2 + d w^2 - 2 t w + 2 p t + Omega w) } / sqrt(2 pi |b|)
inline cplx kernel(const SaftParams& m, double t, double w) {
  const double omega_cap = 2.0 * (m.b * m.q - m.d * m.p);
  const double phase =
      (m.a * t * t + m.d * w * w - 2.0 * t * w + 2.0 * m.p * t + omega_cap * w) / (2.0 * m.b);
  return std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi * std::abs(m.b)), phase);
}

// F(w) = integral of k(t,w) f(t) dt over f's grid.
inline cplx forward_at(const SaftParams& m, const Signal& f, double w) {
  std::vector<cplx> prod(f.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i)
    prod[i] = kernel(m, f.grid.point(i), w) * f.values[i];
  return trapezoid(prod, f.grid);
}

inline Spectrum forward(const SaftParams& m, const Signal& f, const UniformGrid& wgrid) {
  validate(m);
  if (f.grid.n == 0 || wgrid.n == 0) throw EmptyGrid{};
  Spectrum F{wgrid, {}};
  F.values.reserve(wgrid.n);
  for (std::size_t i = 0; i < wgrid.n; ++i) F.values.push_back(forward_at(m, f, wgrid.point(i)));
  return F;
}

// f(t) = integral of conj(k(t,w)) F(w) dw over F's grid.
inline cplx inverse_at(const SaftParams& m, const Spectrum& F, double t) {
  std::vector<cplx> prod(F.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i)
    prod[i] = std::conj(kernel(m, t, F.grid.point(i))) * F.values[i];
  return trapezoid(prod, F.grid);
}

inline Signal inverse(const SaftParams& m, const Spectrum& F, const UniformGrid& tgrid) {
  validate(m);
  if (F.grid.n == 0 || tgrid.n == 0) throw EmptyGrid{};
  Signal f{tgrid, {}};
  f.values.reserve(tgrid.n);
  for (std::size_t i = 0; i < tgrid.n; ++i) f.values.push_back(inverse_at(m, F, tgrid.point(i)));
  return f;
}

// Nyquist-like default extent [-pi b/dt, +pi b/dt]; usually far wider than the
// effective spectral support, so tests and the CLI pass explicit ranges.
inline UniformGrid default_omega_grid(const SaftParams& m, const UniformGrid& tgrid,
                                      std::size_t n) {
  const double edge = std::numbers::pi * std::abs(m.b) / tgrid.dt;
  return make_grid(-edge, edge, n);
}

}  // namespace saft
