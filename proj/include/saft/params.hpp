#pragma once

// Parameter algebra for the six-parameter offset linear canonical family:
// the 2x2 matrix (a b; c d) with ad-bc=1 plus the offset pair (p,q).
// Everything downstream (kernel, convolution factors, periods) is derived
// from these six numbers.

#include <cmath>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "saft/errors.hpp"

namespace saft {

struct SaftParams {
  double a = 0.0;
  double b = 1.0;
  double c = -1.0;
  double d = 0.0;
  double p = 0.0;
  double q = 0.0;
  double tol = 1e-9;  // determinant tolerance this instance was validated at
};

inline double det_residual(const SaftParams& m) {
  return std::abs(m.a * m.d - m.b * m.c - 1.0);
}

inline bool is_valid(const SaftParams& m, double tol) {
  if (!std::isfinite(m.a) || !std::isfinite(m.b) || !std::isfinite(m.c) ||
      !std::isfinite(m.d) || !std::isfinite(m.p) || !std::isfinite(m.q))
    return false;
  return m.b != 0.0 && det_residual(m) <= tol;
}

inline void validate(const SaftParams& m, double tol) {
  if (m.b == 0.0) throw ZeroB{};
  if (double r = det_residual(m); r > tol) throw DeterminantViolation{r};
}

inline void validate(const SaftParams& m) { validate(m, m.tol); }

// Parameters of the inverse transform: matrix (d,-b,-c,a), offsets (bq-dp, cp-aq).
inline SaftParams inverse(const SaftParams& m) {
  validate(m);
  SaftParams r{m.d, -m.b, -m.c, m.a, m.b * m.q - m.d * m.p, m.c * m.p - m.a * m.q, m.tol};
  validate(r);
  return r;
}

struct DerivedConstants {
  double omega_cap;   // 2(bq - dp), the linear-in-omega offset in the kernel phase
  double delta;       // 2*pi*b, the spectral period of discrete-sequence transforms
  double chirp_rate;  // a/(2b)
};

inline DerivedConstants derived(const SaftParams& m) {
  return {2.0 * (m.b * m.q - m.d * m.p), 2.0 * std::numbers::pi * m.b,
          m.a / (2.0 * m.b)};
}

// ---------------------------------------------------------------------------
// Presets. Real-parameter rows only; the transforms that need complex matrix
// entries (Laplace and friends) are rejected explicitly.

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "ft",         "offset-ft", "frft",      "offset-frft", "lct",
      "fresnel",    "time-shift", "frequency-shift", "time-scale", "experiment"};
  return names;
}

namespace detail {
inline void want_args(const std::string& name, std::span<const double> args, std::size_t n) {
  if (args.size() != n)
    throw Error("preset '" + name + "' expects " + std::to_string(n) + " argument(s), got " +
                std::to_string(args.size()));
}
}  // namespace detail

inline SaftParams preset(const std::string& name, std::span<const double> args = {}) {
  using detail::want_args;
  if (name == "ft") {
    want_args(name, args, 0);
    return {0, 1, -1, 0, 0, 0, 1e-9};
  }
  if (name == "offset-ft") {
    want_args(name, args, 2);
    return {0, 1, -1, 0, args[0], args[1], 1e-9};
  }
  if (name == "frft") {
    want_args(name, args, 1);
    const double th = args[0];
    return {std::cos(th), std::sin(th), -std::sin(th), std::cos(th), 0, 0, 1e-9};
  }
  if (name == "offset-frft") {
    want_args(name, args, 3);
    const double th = args[0];
    return {std::cos(th), std::sin(th), -std::sin(th), std::cos(th), args[1], args[2], 1e-9};
  }
  if (name == "lct") {
    want_args(name, args, 4);
    return {args[0], args[1], args[2], args[3], 0, 0, 1e-9};
  }
  if (name == "fresnel") {
    want_args(name, args, 1);
    return {1, args[0], 0, 1, 0, 0, 1e-9};
  }
  if (name == "time-shift") {
    want_args(name, args, 1);
    return {1, 0, 0, 1, args[0], 0, 1e-9};
  }
  if (name == "frequency-shift") {
    want_args(name, args, 1);
    return {1, 0, 0, 1, 0, args[0], 1e-9};
  }
  if (name == "time-scale") {
    want_args(name, args, 1);
    return {1.0 / args[0], 0, 0, args[0], 0, 0, 1e-9};
  }
  if (name == "experiment") {
    want_args(name, args, 0);
    // Printed figure parameters; d=0.3143 leaves ad-bc = 1.0001, so the
    // instance carries a loose tolerance instead of a silently corrected d.
    return {7, 2, 0.6, 0.3143, 2.5, 1, 1e-3};
  }
  if (name == "laplace" || name == "fractional-laplace" || name == "bilateral-laplace" ||
      name == "gauss-weierstrass" || name == "bargmann")
    throw ComplexParameterUnsupported(name);
  throw UnknownPreset(name);
}

// Parses "a,b,c,d,p,q" as used by the --saft CLI flag.
inline SaftParams parse_saft_tuple(const std::string& text, double tol = 1e-9) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double x = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw Error("cannot parse '" + item + "' in --saft tuple");
    }
  }
  if (v.size() != 6) throw Error("--saft expects 6 comma-separated numbers");
  return {v[0], v[1], v[2], v[3], v[4], v[5], tol};
}

}  // namespace saft
