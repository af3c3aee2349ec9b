#pragma once

// Uniform grids, sampled complex signals, chirp modulation and the quadrature
// primitives shared by every module. Integrals over the real line are
// truncated to the signal's grid; callers pick grids wide enough that the
// integrand is negligible (or use the tail-corrected inner products in
// sampling.hpp when it is not).

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "saft/errors.hpp"
#include "saft/params.hpp"

namespace saft {

using cplx = std::complex<double>;
constexpr cplx kJ{0.0, 1.0};

struct UniformGrid {
  double t0 = 0.0;
  double dt = 1.0;
  std::size_t n = 0;

  double point(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double back() const { return point(n - 1); }
};

inline UniformGrid make_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw EmptyGrid{};
  if (n == 1) return {lo, 1.0, 1};
  return {lo, (hi - lo) / static_cast<double>(n - 1), n};
}

struct Signal {
  UniformGrid grid;
  std::vector<cplx> values;
};

struct Spectrum {
  UniformGrid grid;
  std::vector<cplx> values;
};

// Finitely supported two-sided sequence; index k runs over
// [offset, offset + size). Reads outside the support return 0.
struct SampleSeq {
  long offset = 0;
  std::vector<cplx> values;

  long kmin() const { return offset; }
  long kmax() const { return offset + static_cast<long>(values.size()) - 1; }
  cplx at(long k) const {
    long i = k - offset;
    if (i < 0 || i >= static_cast<long>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(i)];
  }
  cplx& ref(long k) { return values.at(static_cast<std::size_t>(k - offset)); }
};

inline Signal sample_function(const UniformGrid& g, const std::function<cplx(double)>& f) {
  Signal s{g, {}};
  s.values.reserve(g.n);
  for (std::size_t i = 0; i < g.n; ++i) s.values.push_back(f(g.point(i)));
  return s;
}

// Default summation is plain left-to-right so runs are bit-reproducible;
// pairwise is available when accumulation error matters.
enum class SumMode { sequential, pairwise };

namespace detail {

template <typename T>
T pairwise_sum(const T* v, std::size_t n) {
  if (n <= 16) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

template <typename T>
T sum(const std::vector<T>& v, SumMode mode) {
  if (mode == SumMode::pairwise) return pairwise_sum(v.data(), v.size());
  T s{};
  for (const T& x : v) s += x;
  return s;
}

}  // namespace detail

// Trapezoid over the grid; exact for constants, spectrally accurate for
// smooth integrands that decay inside the window.
template <typename T>
T trapezoid(const std::vector<T>& v, const UniformGrid& g, SumMode mode = SumMode::sequential) {
  if (v.size() != g.n) throw GridMismatch{};
  if (g.n < 2) return T{};
  T s = detail::sum(v, mode);
  s -= 0.5 * (v.front() + v.back());
  return s * g.dt;
}

inline bool same_grid(const UniformGrid& x, const UniformGrid& y) {
  return x.n == y.n && std::abs(x.t0 - y.t0) <= 1e-12 * (1.0 + std::abs(x.t0)) &&
         std::abs(x.dt - y.dt) <= 1e-12 * x.dt;
}

inline cplx inner(const Signal& s, const Signal& r, SumMode mode = SumMode::sequential) {
  if (!same_grid(s.grid, r.grid)) throw GridMismatch{};
  std::vector<cplx> prod(s.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = s.values[i] * std::conj(r.values[i]);
  return trapezoid(prod, s.grid, mode);
}

inline double l2_norm_sq(const Signal& s, SumMode mode = SumMode::sequential) {
  std::vector<double> prod(s.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::norm(s.values[i]);
  return trapezoid(prod, s.grid, mode);
}

inline double l2_norm(const Signal& s, SumMode mode = SumMode::sequential) {
  return std::sqrt(l2_norm_sq(s, mode));
}

template <typename Sig>
inline double l2_norm_sq_spectrum(const Sig& s) {
  std::vector<double> prod(s.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::norm(s.values[i]);
  return trapezoid(prod, s.grid);
}

// ---------------------------------------------------------------------------
// Chirp modulation: pointwise multiplication by the unit-modulus quadratic
// phase exp(+-j a t^2 / 2b).

inline cplx chirp_factor(const SaftParams& m, double t) {
  return std::polar(1.0, m.a * t * t / (2.0 * m.b));
}

inline Signal chirp_up(const SaftParams& m, const Signal& s) {
  validate(m);
  Signal r = s;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] *= chirp_factor(m, r.grid.point(i));
  return r;
}

inline Signal chirp_dn(const SaftParams& m, const Signal& s) {
  validate(m);
  Signal r = s;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] *= std::conj(chirp_factor(m, r.grid.point(i)));
  return r;
}

// zeta(t) = exp(j (a t^2 + 2 p t) / 2b), the combined chirp+offset phase.
inline cplx zeta(const SaftParams& m, double t) {
  return std::polar(1.0, (m.a * t * t + 2.0 * m.p * t) / (2.0 * m.b));
}

}  // namespace saft
