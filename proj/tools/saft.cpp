// Command-line front end: transforms, convolution, discrete-sequence
// transforms, Zak/Poisson residual checks, sampling, fractional delay
// filtering, and the delay-estimation experiment.
//
// Exit codes: 0 success, 2 validation/usage error, 3 numeric failure
// (a residual or ordering assertion failed under --assert).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "saft/convolution.hpp"
#include "saft/experiment.hpp"
#include "saft/io.hpp"
#include "saft/params.hpp"
#include "saft/sampling.hpp"
#include "saft/shiftinv.hpp"
#include "saft/signal.hpp"
#include "saft/transform.hpp"
#include "saft/zak_poisson.hpp"

using nlohmann::json;

namespace {

struct ParamOpts {
  std::string tuple;
  std::string preset_name;
  std::vector<double> preset_args;
  double tol = 1e-9;

  void attach(CLI::App* app) {
    app->add_option("--saft", tuple, "parameters as a,b,c,d,p,q");
    app->add_option("--preset", preset_name, "named parameter preset");
    app->add_option("--preset-args", preset_args, "numeric arguments for the preset");
    app->add_option("--tol", tol, "determinant tolerance");
  }

  saft::SaftParams resolve() const {
    if (!tuple.empty() && !preset_name.empty())
      throw saft::Error("--saft and --preset are mutually exclusive");
    if (!tuple.empty()) {
      saft::SaftParams m = saft::parse_saft_tuple(tuple, tol);
      saft::validate(m);
      return m;
    }
    if (!preset_name.empty()) {
      saft::SaftParams m = saft::preset(preset_name, preset_args);
      saft::validate(m);
      return m;
    }
    throw saft::Error("one of --saft or --preset is required");
  }
};

saft::Generator make_generator(const std::string& name, long sinc_half_width) {
  if (name == "power-cosine") return saft::power_cosine_generator();
  if (name == "sinc") return saft::sinc_generator(sinc_half_width);
  throw saft::Error("unknown generator: " + name);
}

void emit(const json& j, const std::string& report_path) {
  std::cout << j.dump(2) << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << j.dump(2) << "\n";
  }
}

json params_json(const saft::SaftParams& m) {
  return json::array({m.a, m.b, m.c, m.d, m.p, m.q});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special affine Fourier transform toolkit"};
  app.require_subcommand(1);

  std::string report_path;
  app.add_option("--json-report", report_path, "write a JSON run report to this path");
  bool assert_mode = false;
  app.add_flag("--assert", assert_mode, "exit 3 when a residual exceeds its threshold");

  ParamOpts popts;

  // ---- transform / inverse ------------------------------------------------
  auto* cmd_tr = app.add_subcommand("transform", "forward transform of a CSV signal");
  popts.attach(cmd_tr);
  std::string in_path, in2_path, out_path;
  double wmin = -10.0, wmax = 10.0, tmin = -10.0, tmax = 10.0;
  std::size_t wn = 1024, tn = 1024;
  cmd_tr->add_option("--in", in_path, "input signal CSV (t,re,im)")->required();
  cmd_tr->add_option("--omega-min", wmin);
  cmd_tr->add_option("--omega-max", wmax);
  cmd_tr->add_option("--omega-n", wn);
  cmd_tr->add_option("--out", out_path, "output spectrum CSV")->required();

  auto* cmd_inv = app.add_subcommand("inverse", "inverse transform of a CSV spectrum");
  popts.attach(cmd_inv);
  cmd_inv->add_option("--in", in_path, "input spectrum CSV (omega,re,im)")->required();
  cmd_inv->add_option("--t-min", tmin);
  cmd_inv->add_option("--t-max", tmax);
  cmd_inv->add_option("--t-n", tn);
  cmd_inv->add_option("--out", out_path, "output signal CSV")->required();

  // ---- convolve -----------------------------------------------------------
  auto* cmd_conv = app.add_subcommand("convolve", "chirp-twisted convolution of two signals");
  popts.attach(cmd_conv);
  cmd_conv->add_option("--in", in_path, "first signal CSV")->required();
  cmd_conv->add_option("--in2", in2_path, "second signal CSV")->required();
  cmd_conv->add_option("--out", out_path, "output signal CSV")->required();

  // ---- dtsaft -------------------------------------------------------------
  auto* cmd_dt = app.add_subcommand("dtsaft", "discrete-time transform of a sequence");
  popts.attach(cmd_dt);
  cmd_dt->add_option("--seq", in_path, "sequence CSV (k,re,im)")->required();
  cmd_dt->add_option("--omega-min", wmin);
  cmd_dt->add_option("--omega-max", wmax);
  cmd_dt->add_option("--omega-n", wn);
  cmd_dt->add_option("--out", out_path, "output spectrum CSV")->required();

  // ---- zak ----------------------------------------------------------------
  auto* cmd_zak = app.add_subcommand("zak", "Zak transform value at one (t, omega)");
  popts.attach(cmd_zak);
  double zt = 0.0, zw = 0.0;
  int K = 64;
  cmd_zak->add_option("--in", in_path, "input signal CSV")->required();
  cmd_zak->add_option("--t", zt)->required();
  cmd_zak->add_option("--omega", zw)->required();
  cmd_zak->add_option("--K", K, "truncation of the lattice sum");

  // ---- poisson-check ------------------------------------------------------
  auto* cmd_poi = app.add_subcommand("poisson-check", "Poisson summation residual");
  popts.attach(cmd_poi);
  std::size_t poi_tn = 64;
  double threshold = 1e-3;
  cmd_poi->add_option("--in", in_path, "input signal CSV")->required();
  cmd_poi->add_option("--K", K, "truncation");
  cmd_poi->add_option("--t-n", poi_tn, "number of probe points in [0, delta)");
  cmd_poi->add_option("--threshold", threshold, "assertion threshold");

  // ---- riesz --------------------------------------------------------------
  auto* cmd_rz = app.add_subcommand("riesz", "Riesz bounds of a generator's Grammian");
  popts.attach(cmd_rz);
  std::string gen_name = "power-cosine";
  long sinc_hw = 64;
  int sweep_n = 256, gram_K = 64;
  cmd_rz->add_option("--generator", gen_name, "power-cosine | sinc");
  cmd_rz->add_option("--sinc-half-width", sinc_hw);
  cmd_rz->add_option("--K", gram_K, "Grammian truncation");
  cmd_rz->add_option("--sweep-n", sweep_n, "frequency sweep resolution");

  // ---- sample -------------------------------------------------------------
  auto* cmd_sm = app.add_subcommand("sample", "analyze/reconstruct through the sampling space");
  popts.attach(cmd_sm);
  double Topt = 0.0, sigma = 0.0;
  long nmin = -16, nmax = 16;
  std::string mode = "project";
  cmd_sm->add_option("--in", in_path, "input signal CSV")->required();
  cmd_sm->add_option("--T", Topt, "sample spacing");
  cmd_sm->add_option("--sigma", sigma, "band edge (T = pi b / sigma)");
  cmd_sm->add_option("--n-min", nmin);
  cmd_sm->add_option("--n-max", nmax);
  cmd_sm->add_option("--mode", mode, "project | interpolate");
  cmd_sm->add_option("--t-min", tmin);
  cmd_sm->add_option("--t-max", tmax);
  cmd_sm->add_option("--t-n", tn);
  cmd_sm->add_option("--out", out_path, "reconstruction CSV");

  // ---- fdf ----------------------------------------------------------------
  auto* cmd_fdf = app.add_subcommand("fdf", "fractional delay filtering of lattice samples");
  popts.attach(cmd_fdf);
  double tau = 0.0, fdf_T = 1.0;
  cmd_fdf->add_option("--in", in_path, "samples CSV (k,re,im), values f(kT)")->required();
  cmd_fdf->add_option("--generator", gen_name, "power-cosine | sinc");
  cmd_fdf->add_option("--sinc-half-width", sinc_hw);
  cmd_fdf->add_option("--tau", tau, "delay, 0 <= tau <= T")->required();
  cmd_fdf->add_option("--T", fdf_T, "lattice spacing")->required();
  cmd_fdf->add_option("--out", out_path, "delayed-sample CSV")->required();

  // ---- experiment ---------------------------------------------------------
  auto* cmd_ex = app.add_subcommand("experiment", "delay-estimation PSNR study");
  saft::ExperimentConfig cfg;
  cmd_ex->add_option("--k-min", cfg.kmin);
  cmd_ex->add_option("--k-max", cfg.kmax);
  cmd_ex->add_option("--sinc-half-width", cfg.sinc_half_width);
  cmd_ex->add_option("--edge-margin", cfg.edge_margin);
  cmd_ex->add_option("--out", out_path, "write the report JSON here too");

  // ---- presets ------------------------------------------------------------
  app.add_subcommand("presets", "list named parameter presets");

  CLI11_PARSE(app, argc, argv);

  try {
    json report;
    {
      std::string echo;
      for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
      }
      report["command"] = echo;
    }

    if (app.got_subcommand("presets")) {
      json names = json::array();
      for (const auto& n : saft::preset_names()) names.push_back(n);
      report["presets"] = names;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_tr)) {
      const saft::SaftParams m = popts.resolve();
      saft::Signal f = saft::read_signal(in_path);
      saft::Spectrum F = saft::forward(m, f, saft::make_grid(wmin, wmax, wn));
      saft::write_spectrum(out_path, F);
      report["params"] = params_json(m);
      report["out"] = out_path;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_inv)) {
      const saft::SaftParams m = popts.resolve();
      saft::Spectrum F = saft::read_spectrum(in_path);
      saft::Signal f = saft::inverse(m, F, saft::make_grid(tmin, tmax, tn));
      saft::write_signal(out_path, f);
      report["params"] = params_json(m);
      report["out"] = out_path;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_conv)) {
      const saft::SaftParams m = popts.resolve();
      saft::Signal f = saft::read_signal(in_path);
      saft::Signal g = saft::read_signal(in2_path);
      saft::write_signal(out_path, saft::saft_convolve(m, f, g));
      report["params"] = params_json(m);
      report["out"] = out_path;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_dt)) {
      const saft::SaftParams m = popts.resolve();
      saft::SampleSeq P = saft::read_seq(in_path);
      saft::UniformGrid wg = saft::make_grid(wmin, wmax, wn);
      saft::Spectrum S{wg, {}};
      for (std::size_t i = 0; i < wg.n; ++i)
        S.values.push_back(saft::dtsaft(m, P, wg.point(i)));
      saft::write_spectrum(out_path, S);
      report["params"] = params_json(m);
      report["out"] = out_path;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_zak)) {
      const saft::SaftParams m = popts.resolve();
      saft::Signal f = saft::read_signal(in_path);
      auto fv = [&](double t) {
        // nearest-sample lookup; the CSV grid is the signal's definition
        double x = (t - f.grid.t0) / f.grid.dt;
        long i = std::lround(x);
        if (i < 0 || i >= static_cast<long>(f.grid.n)) return saft::cplx{};
        return f.values[static_cast<std::size_t>(i)];
      };
      saft::cplx z = saft::zak(m, fv, zt, zw, K);
      report["params"] = params_json(m);
      report["t"] = zt;
      report["omega"] = zw;
      report["K"] = K;
      report["re"] = z.real();
      report["im"] = z.imag();
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_poi)) {
      const saft::SaftParams m = popts.resolve();
      saft::Signal f = saft::read_signal(in_path);
      auto fv = [&](double t) {
        double x = (t - f.grid.t0) / f.grid.dt;
        long i = std::lround(x);
        if (i < 0 || i >= static_cast<long>(f.grid.n)) return saft::cplx{};
        return f.values[static_cast<std::size_t>(i)];
      };
      const double delta = saft::derived(m).delta;
      saft::UniformGrid tg{0.0, delta / static_cast<double>(poi_tn), poi_tn};
      const double r = saft::poisson_residual(m, fv, f.grid, tg, K);
      report["params"] = params_json(m);
      report["residual"] = r;
      report["K"] = K;
      report["grid"] = {{"t0", tg.t0}, {"dt", tg.dt}, {"n", tg.n}};
      emit(report, report_path);
      return assert_mode && r >= threshold ? 3 : 0;
    }

    if (app.got_subcommand(cmd_rz)) {
      const saft::SaftParams m = popts.resolve();
      saft::Generator gen = make_generator(gen_name, sinc_hw);
      const double span = gen.support + 1.0;
      const std::size_t qn = gen.support > 8.0 ? 16384 : 4096;
      // psi(t) = sqrt(2 pi |b|) e^{-j a t^2/2b} e^{-j p t/b} nu(t)
      saft::Signal psi = saft::sample_function(saft::make_grid(-span, span, qn), [&](double t) {
        const double ph = -m.a * t * t / (2.0 * m.b) - m.p * t / m.b;
        return std::polar(std::sqrt(2.0 * std::numbers::pi * std::abs(m.b)) * gen.nu(t), ph);
      });
      auto Phi = [&](double w) { return saft::forward_at(m, psi, w); };
      auto [e1, e2] = saft::riesz_bounds(m, Phi, gram_K, sweep_n);
      report["params"] = params_json(m);
      report["generator"] = gen.name;
      report["eta1"] = e1;
      report["eta2"] = e2;
      report["condition"] = e2 / e1;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_sm)) {
      const saft::SaftParams m = popts.resolve();
      if ((Topt > 0.0) == (sigma > 0.0))
        throw saft::Error("exactly one of --T or --sigma is required");
      const double T = Topt > 0.0 ? Topt : saft::bandlimit_from_sigma(m, sigma).T;
      saft::Signal f = saft::read_signal(in_path);
      saft::UniformGrid tg = saft::make_grid(tmin, tmax, tn);
      saft::SampleSeq c = saft::analyze(m, f, T, nmin, nmax);
      saft::Signal rec;
      if (mode == "project") {
        saft::SampleSeq cs = c;
        for (auto& v : cs.values) v /= std::sqrt(T);
        rec = saft::synthesize(m, cs, T, tg);
      } else if (mode == "interpolate") {
        // treat the signal's own lattice values as the samples
        saft::SampleSeq s{nmin, {}};
        for (long n = nmin; n <= nmax; ++n) {
          double x = (static_cast<double>(n) * T - f.grid.t0) / f.grid.dt;
          long i = std::lround(x);
          s.values.push_back(i >= 0 && i < static_cast<long>(f.grid.n)
                                 ? f.values[static_cast<std::size_t>(i)]
                                 : saft::cplx{});
        }
        rec = saft::synthesize(m, s, T, tg);
      } else {
        throw saft::Error("unknown --mode: " + mode);
      }
      if (!out_path.empty()) saft::write_signal(out_path, rec);
      json coeff = json::array();
      for (long n = c.kmin(); n <= c.kmax(); ++n)
        coeff.push_back({{"n", n}, {"re", c.at(n).real()}, {"im", c.at(n).imag()}});
      report["params"] = params_json(m);
      report["T"] = T;
      report["mode"] = mode;
      report["coefficients"] = coeff;
      report["reconstruction_norm"] = saft::l2_norm(rec);
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_fdf)) {
      const saft::SaftParams m = popts.resolve();
      saft::Generator gen = make_generator(gen_name, sinc_hw);
      saft::SampleSeq s = saft::read_seq(in_path);
      saft::write_seq(out_path, saft::fdf(m, s, gen, tau, fdf_T));
      report["params"] = params_json(m);
      report["generator"] = gen.name;
      report["tau"] = tau;
      report["T"] = fdf_T;
      report["out"] = out_path;
      emit(report, report_path);
      return 0;
    }

    if (app.got_subcommand(cmd_ex)) {
      saft::FdfReport rep = saft::run_experiment(cfg);
      json j = saft::to_json(rep);
      j["command"] = report["command"];
      emit(j, report_path);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
      }
      if (assert_mode) {
        const auto& pc = rep.psnr_db.at("power-cosine");
        const auto& sc = rep.psnr_db.at("sinc");
        for (std::size_t i = 0; i < pc.size(); ++i)
          if (pc[i] < sc[i]) return 3;
      }
      return 0;
    }

    std::cerr << "no subcommand handled\n";
    return 2;
  } catch (const saft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
