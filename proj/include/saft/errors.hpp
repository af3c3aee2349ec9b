#pragma once

#include <stdexcept>
#include <string>

namespace saft {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter validation
struct DeterminantViolation : Error {
  double residual;
  explicit DeterminantViolation(double r)
      : Error("parameter determinant violates ad-bc=1, residual " + std::to_string(r)),
        residual(r) {}
};
struct ZeroB : Error {
  ZeroB() : Error("parameter b must be nonzero") {}
};
struct UnknownPreset : Error {
  explicit UnknownPreset(const std::string& name) : Error("unknown preset: " + name) {}
};
struct ComplexParameterUnsupported : Error {
  explicit ComplexParameterUnsupported(const std::string& name)
      : Error("preset '" + name + "' requires complex parameters, not supported") {}
};

// Grids and quadrature
struct GridMismatch : Error {
  GridMismatch() : Error("signals live on incompatible grids") {}
};
struct EmptyGrid : Error {
  EmptyGrid() : Error("grid has no points") {}
};
struct GridTooNarrow : Error {
  GridTooNarrow() : Error("signal grid too narrow to cover the requested atoms") {}
};

// Numerics
struct DivisionByZeroNorm : Error {
  DivisionByZeroNorm() : Error("reference norm vanishes") {}
};
struct DegenerateGenerator : Error {
  DegenerateGenerator() : Error("generator fails the Riesz condition (lower bound ~ 0)") {}
};
struct NonInvertibleSymbol : Error {
  NonInvertibleSymbol() : Error("generator symbol has a zero; no stable inverse filter") {}
};
struct NegativeB : Error {
  NegativeB() : Error("operation requires b > 0") {}
};
struct DelayOutOfRange : Error {
  DelayOutOfRange() : Error("delay must lie in [0, T]") {}
};
struct ZeroReference : Error {
  ZeroReference() : Error("PSNR reference is identically zero") {}
};

// IO
struct MalformedCsv : Error {
  explicit MalformedCsv(const std::string& what) : Error("malformed CSV: " + what) {}
};
struct NonUniformGrid : Error {
  NonUniformGrid() : Error("CSV abscissa column is not uniformly spaced") {}
};

}  // namespace saft
