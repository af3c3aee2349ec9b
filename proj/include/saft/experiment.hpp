#pragma once

// Fractional-delay study: sample a chirped multitone at rate T, estimate its
// tau-delayed samples through the shift-invariant model with different
// generators, and score each estimate against the analytically delayed
// signal with PSNR.

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "saft/params.hpp"
#include "saft/shiftinv.hpp"
#include "saft/signal.hpp"

namespace saft {

struct ExperimentConfig {
  SaftParams params = preset("experiment");
  std::vector<double> alpha = {35.0, 18.0, 10.0};
  std::vector<double> omega = {0.77, 0.31, 0.25};
  long kmin = -256;
  long kmax = 255;
  long sinc_half_width = 64;
  // Samples this close to the window edge are excluded from PSNR, for every
  // generator alike, so the score compares interpolation quality rather than
  // boundary truncation.
  long edge_margin = 3;
  unsigned seed = 0;  // reserved; the signal is deterministic

  double T() const { return std::numbers::pi * params.b / 60.0; }
  std::vector<double> taus() const {
    std::vector<double> v;
    for (int mth = 1; mth <= 5; ++mth) v.push_back(mth * T() / 10.0);
    return v;
  }
};

// g(t) = e^{-j((a/2b) t^2 + (p/b) t)} sum_m alpha_m cos(2 pi omega_m t);
// |g| <= sum alpha everywhere.
inline cplx experiment_signal(const ExperimentConfig& cfg, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < cfg.alpha.size(); ++i)
    s += cfg.alpha[i] * std::cos(2.0 * std::numbers::pi * cfg.omega[i] * t);
  const SaftParams& m = cfg.params;
  return s * std::polar(1.0, -(m.a / (2.0 * m.b)) * t * t - (m.p / m.b) * t);
}

struct FdfReport {
  SaftParams params;
  double T = 0.0;
  std::vector<double> taus;
  std::vector<std::string> generators;
  // psnr[g][i] = PSNR in dB of generator g at taus[i]
  std::map<std::string, std::vector<double>> psnr_db;
  double wall_seconds = 0.0;
};

inline nlohmann::json to_json(const FdfReport& r) {
  nlohmann::json j;
  j["params"] = {r.params.a, r.params.b, r.params.c, r.params.d, r.params.p, r.params.q};
  j["T"] = r.T;
  j["taus"] = r.taus;
  j["generators"] = r.generators;
  for (const auto& [name, v] : r.psnr_db) j["psnr_db"][name] = v;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

namespace detail {
inline SampleSeq trim_edges(const SampleSeq& s, long margin) {
  SampleSeq r{s.kmin() + margin, {}};
  for (long k = s.kmin() + margin; k <= s.kmax() - margin; ++k) r.values.push_back(s.at(k));
  return r;
}
}  // namespace detail

inline FdfReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.kmax < cfg.kmin) throw EmptyGrid{};
  validate(cfg.params);
  const double T = cfg.T();

  SampleSeq samples{cfg.kmin, std::vector<cplx>(static_cast<std::size_t>(cfg.kmax - cfg.kmin + 1))};
  for (long k = cfg.kmin; k <= cfg.kmax; ++k)
    samples.ref(k) = experiment_signal(cfg, static_cast<double>(k) * T);

  std::vector<Generator> gens = {power_cosine_generator(), sinc_generator(cfg.sinc_half_width)};

  FdfReport rep;
  rep.params = cfg.params;
  rep.T = T;
  rep.taus = cfg.taus();
  for (const auto& g : gens) rep.generators.push_back(g.name);

  for (const auto& g : gens) {
    std::vector<double> scores;
    for (double tau : rep.taus) {
      SampleSeq est = fdf(cfg.params, samples, g, tau, T);
      SampleSeq ref{cfg.kmin, std::vector<cplx>(samples.values.size())};
      for (long k = cfg.kmin; k <= cfg.kmax; ++k)
        ref.ref(k) = experiment_signal(cfg, static_cast<double>(k) * T - tau);
      scores.push_back(
          psnr(detail::trim_edges(ref, cfg.edge_margin), detail::trim_edges(est, cfg.edge_margin)));
    }
    rep.psnr_db[g.name] = scores;
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace saft
