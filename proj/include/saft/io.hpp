#pragma once

// CSV formats: `t,re,im` / `omega,re,im` for sampled functions (abscissa must
// be uniform to 1e-9*dt) and `k,re,im` for integer-indexed sequences. Values
// round-trip bitwise at 17 significant digits.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "saft/errors.hpp"
#include "saft/signal.hpp"

namespace saft {
namespace detail {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct CsvRows {
  std::vector<double> x;
  std::vector<cplx> v;
};

inline CsvRows read_rows(const std::string& path, const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) throw MalformedCsv("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw MalformedCsv("empty file " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header)
    throw MalformedCsv("expected header '" + expected_header + "', got '" + line + "'");
  CsvRows rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double col[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(ss, cell, ','))
        throw MalformedCsv("line " + std::to_string(lineno) + ": expected 3 columns");
      try {
        std::size_t used = 0;
        col[c] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw MalformedCsv("line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (std::getline(ss, cell, ','))
      throw MalformedCsv("line " + std::to_string(lineno) + ": too many columns");
    rows.x.push_back(col[0]);
    rows.v.emplace_back(col[1], col[2]);
  }
  if (rows.x.empty()) throw MalformedCsv("no data rows in " + path);
  return rows;
}

inline UniformGrid grid_of(const std::vector<double>& x) {
  if (x.size() == 1) return {x[0], 1.0, 1};
  const double dt = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (dt <= 0.0) throw NonUniformGrid{};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - (x.front() + static_cast<double>(i) * dt)) > 1e-9 * dt)
      throw NonUniformGrid{};
  return {x.front(), dt, x.size()};
}

template <typename S>
inline void write_sampled(const std::string& path, const S& s, const char* header) {
  std::ofstream out(path);
  if (!out) throw MalformedCsv("cannot write " + path);
  out << header << "\n";
  for (std::size_t i = 0; i < s.grid.n; ++i)
    out << fmt17(s.grid.point(i)) << "," << fmt17(s.values[i].real()) << ","
        << fmt17(s.values[i].imag()) << "\n";
}

}  // namespace detail

inline Signal read_signal(const std::string& path) {
  auto rows = detail::read_rows(path, "t,re,im");
  return {detail::grid_of(rows.x), std::move(rows.v)};
}

inline Spectrum read_spectrum(const std::string& path) {
  auto rows = detail::read_rows(path, "omega,re,im");
  return {detail::grid_of(rows.x), std::move(rows.v)};
}

inline SampleSeq read_seq(const std::string& path) {
  auto rows = detail::read_rows(path, "k,re,im");
  for (std::size_t i = 0; i < rows.x.size(); ++i) {
    const double expect = rows.x.front() + static_cast<double>(i);
    if (rows.x[i] != expect) throw MalformedCsv("k column must be consecutive integers");
  }
  return {static_cast<long>(rows.x.front()), std::move(rows.v)};
}

inline void write_signal(const std::string& path, const Signal& s) {
  detail::write_sampled(path, s, "t,re,im");
}

inline void write_spectrum(const std::string& path, const Spectrum& s) {
  detail::write_sampled(path, s, "omega,re,im");
}

inline void write_seq(const std::string& path, const SampleSeq& s) {
  std::ofstream out(path);
  if (!out) throw MalformedCsv("cannot write " + path);
  out << "k,re,im\n";
  for (long k = s.kmin(); k <= s.kmax(); ++k)
    out << k << "," << detail::fmt17(s.at(k).real()) << "," << detail::fmt17(s.at(k).imag())
        << "\n";
}

}  // namespace saft
