// apmean: analyze / generate / verify / spectrum front end.
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "apmean/distributions.hpp"
#include "apmean/ergodic.hpp"
#include "apmean/mean_ops.hpp"
#include "apmean/membership.hpp"
#include "apmean/norms.hpp"
#include "apmean/spectrum.hpp"
#include "apmean/verification.hpp"

using nlohmann::json;
using namespace apmean;

namespace {

struct CommonOpts {
  std::string config;
  std::string out;
  std::string format = "json";
  std::string window;
  std::string grid;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config, "flat JSON config file");
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "json|text|plotdata")
      ->check(CLI::IsMember({"json", "text", "plotdata"}));
  cmd->add_option("--window", o.window, "analysis window A:B");
  cmd->add_option("--grid", o.grid, "sampling grid T0:DT:N");
}

std::vector<double> split_nums(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

Window parse_window(const std::string& text) {
  auto v = split_nums(text, ':', "--window");
  if (v.size() != 2 || !(v[1] > v[0]))
    throw CLI::ValidationError("--window expects A:B with B > A");
  return Window{v[0], v[1]};
}

Grid parse_grid(const std::string& text) {
  auto v = split_nums(text, ':', "--grid");
  if (v.size() != 3 || !(v[1] > 0.0) || !(v[2] >= 1.0))
    throw CLI::ValidationError("--grid expects T0:DT:N with DT > 0, N >= 1");
  return Grid{v[0], v[1], static_cast<std::size_t>(v[2])};
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IOError("cannot read config " + path);
  json cfg = json::parse(in);
  if (!cfg.is_object()) throw IOError("config must be a flat JSON object: " + path);
  return cfg;
}

// flat-JSON keys onto the classification/scan parameter block
ClassifyParams params_from_config(const json& cfg) {
  ClassifyParams p;
  auto num = [&cfg](const char* key, double& slot) {
    if (cfg.contains(key)) slot = cfg.at(key).get<double>();
  };
  num("eps", p.eps);
  num("tau_max", p.tau_max);
  num("tau_step", p.tau_step);
  num("scan_omega_min", p.scan_omega_min);
  num("scan_omega_max", p.scan_omega_max);
  num("scan_omega_step", p.scan_omega_step);
  num("scan_T", p.scan_T);
  num("scan_threshold", p.scan_threshold);
  num("recon_step", p.recon_step);
  num("rtol", p.rtol);
  num("thr_ap", p.thr_ap);
  num("thr_c0", p.thr_c0);
  num("thr_cub", p.thr_cub);
  num("cub_delta", p.cub_delta);
  num("sup_step", p.sup_step);
  if (cfg.contains("T_values")) p.T_values = cfg.at("T_values").get<std::vector<double>>();
  if (cfg.contains("base_points"))
    p.base_points = cfg.at("base_points").get<std::vector<double>>();
  if (cfg.contains("h_samples")) p.h_samples = cfg.at("h_samples").get<std::vector<double>>();
  if (cfg.contains("panels_per_unit"))
    p.quad = QuadratureConfig(cfg.at("panels_per_unit").get<int>());
  return p;
}

Signal resolve_input(const std::string& name, int N) {
  if (name == "sin")
    return Signal::trig_poly({{1.0, Complex(0.0, -0.5)}, {-1.0, Complex(0.0, 0.5)}});
  if (name == "3g1+2gsqrt2")
    return Signal::trig_poly({{1.0, Complex(3.0, 0.0)}, {std::sqrt(2.0), Complex(2.0, 0.0)}});
  for (const char* g : {"chirp", "ex3_5", "prop3_8", "prop3_8_deriv", "block10", "logosc"})
    if (name == g) return gen(name, GenParams{N, 1.0});
  std::ifstream probe(name);
  if (probe.good()) return read_csv(name);
  throw UnknownName(name);
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw IOError("cannot write " + o.out);
  out << payload;
  if (!payload.empty() && payload.back() != '\n') out << '\n';
}

int cmd_analyze(const CommonOpts& o, const std::string& input, const std::string& tags, int N) {
  json cfg = load_config(o.config);
  ClassifyParams cp = params_from_config(cfg);
  if (!o.window.empty()) cp.window = parse_window(o.window);
  Signal s = resolve_input(input, N);

  if (o.format == "plotdata") {
    // sampled signal over the analysis window, three whitespace columns
    std::ostringstream body;
    body.precision(15);
    double step = std::max(cp.window.length() / 4000.0, 0.01);
    for (double t = cp.window.a; t <= cp.window.b + 1e-12; t += step) {
      Complex v = s.eval(t);
      body << t << ' ' << v.real() << ' ' << v.imag() << '\n';
    }
    emit(o, body.str());
    return 0;
  }

  json rep;
  rep["input"] = input;
  rep["window"] = {cp.window.a, cp.window.b};
  rep["sup_norm"] = sup_norm(s, cp.window, cp.sup_step);
  rep["stepanoff_1_1"] = stepanoff(s, 1.0, 1.0, cp.window, cp.sup_step, cp.quad);
  MeanReport mr = ergodic_mean(s, cp.T_values, cp.base_points, cp.rtol, cp.quad);
  rep["mean"] = json::parse(mean_report_json(mr));
  SpectrumEstimate spec =
      bohr_spectrum_scan(s, cp.scan_omega_min, cp.scan_omega_max, cp.scan_omega_step, cp.scan_T,
                         cp.scan_threshold, cp.quad);
  rep["spectrum"] = json::parse(spectrum_json(spec));
  rep["verdicts"] = json::array();
  std::stringstream ss(tags);
  std::string tag_text;
  while (std::getline(ss, tag_text, ';')) {
    if (tag_text.empty()) continue;
    ClassVerdict v = classify(s, parse_tag(tag_text), cp);
    rep["verdicts"].push_back(json::parse(verdict_json(v)));
  }

  if (o.format == "text") {
    std::ostringstream body;
    body.precision(10);
    body << "input: " << input << "\n";
    body << "sup norm on window: " << rep["sup_norm"].get<double>() << "\n";
    body << "mean: " << mr.value.real() << (mr.value.imag() < 0 ? "" : "+") << mr.value.imag()
         << "i (" << (mr.converged ? "converged" : "not converged") << ")\n";
    body << "spectrum lines: " << spec.entries.size() << "\n";
    for (const auto& e : spec.entries)
      body << "  omega=" << e.omega << " |c|=" << std::abs(e.c) << "\n";
    for (const auto& v : rep["verdicts"])
      body << "verdict " << v["tag"].get<std::string>() << ": "
           << v["verdict"].get<std::string>() << " (score " << v["score"].get<double>()
           << ")\n";
    emit(o, body.str());
  } else {
    emit(o, rep.dump(2));
  }
  return 0;
}

int cmd_generate(const CommonOpts& o, const std::string& name, int N) {
  if (o.grid.empty()) throw CLI::ValidationError("generate requires --grid T0:DT:N");
  Grid g = parse_grid(o.grid);
  Signal s = resolve_input(name, N);
  std::vector<Complex> values = s.sample(g);
  if (o.out.empty()) {
    write_csv(std::cout, g, values);
  } else {
    write_csv(o.out, g, values);
  }
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
  SuiteReport rep = run_suite(suite);
  if (o.format == "json")
    emit(o, suite_report_json(rep));
  else
    emit(o, suite_report_text(rep));
  return rep.all_pass() ? 0 : 1;
}

int cmd_spectrum(const CommonOpts& o, const std::string& input, const std::string& tag, int N,
                 double omin, double omax, double ostep, double T, double threshold) {
  json cfg = load_config(o.config);
  ClassifyParams cp = params_from_config(cfg);
  if (!o.window.empty()) cp.window = parse_window(o.window);
  Signal s = resolve_input(input, N);

  if (!tag.empty()) {
    // band-probe relative spectrum estimate for the given class
    double step = ostep > 0.0 ? ostep : 0.25;
    auto sp = sp_estimate(s, parse_tag(tag), omin, omax, step, SpBankParams{}, cp);
    if (o.format == "plotdata") {
      std::ostringstream body;
      body.precision(15);
      for (double w : sp) body << w << " 1\n";
      emit(o, body.str());
    } else if (o.format == "text") {
      std::ostringstream body;
      body << "sp(" << tag << ") grid survivors: " << sp.size() << "\n";
      for (double w : sp) body << "  " << w << "\n";
      emit(o, body.str());
    } else {
      json rep;
      rep["tag"] = tag;
      rep["omegas"] = sp;
      emit(o, rep.dump(2));
    }
    return 0;
  }

  double step = ostep > 0.0 ? ostep : cp.scan_omega_step;
  SpectrumEstimate spec = bohr_spectrum_scan(s, omin, omax, step, T > 0.0 ? T : cp.scan_T,
                                             threshold > 0.0 ? threshold : cp.scan_threshold,
                                             cp.quad);
  if (o.format == "plotdata") {
    std::ostringstream body;
    body.precision(15);
    for (const auto& e : spec.entries) body << e.omega << ' ' << std::abs(e.c) << '\n';
    emit(o, body.str());
  } else if (o.format == "text") {
    std::ostringstream body;
    body.precision(10);
    body << "lines: " << spec.entries.size() << "\n";
    for (const auto& e : spec.entries)
      body << "  omega=" << e.omega << " c=" << e.c.real() << (e.c.imag() < 0 ? "" : "+")
           << e.c.imag() << "i\n";
    emit(o, body.str());
  } else {
    emit(o, spectrum_json(spec));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mean-operator calculus toolkit"};
  app.require_subcommand(1);

  CommonOpts oa, og, ov, os;
  std::string in_analyze, in_gen, in_spec;
  std::string tags = "AP;E";
  std::string suite = "all";
  std::string sp_tag;
  int N = 12;
  double omin = -3.0, omax = 3.0, ostep = 0.0, T = 0.0, threshold = 0.0;

  CLI::App* analyze = app.add_subcommand("analyze", "norms, means, spectrum, class verdicts");
  analyze->add_option("input", in_analyze, "builtin name or CSV path")->required();
  analyze->add_option("--tags", tags, "semicolon-separated class tags (e.g. AP;E;TE:1,1.5)");
  analyze->add_option("--N", N, "truncation order for series builtins");
  add_common(analyze, oa);

  CLI::App* generate = app.add_subcommand("generate", "sample a builtin onto a grid as CSV");
  generate->add_option("name", in_gen, "builtin name")->required();
  generate->add_option("--N", N, "truncation order for series builtins");
  add_common(generate, og);

  CLI::App* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", suite, "suite name or 'all'");
  add_common(verify, ov);

  CLI::App* spectrum = app.add_subcommand("spectrum", "line scan or class-relative spectrum");
  spectrum->add_option("input", in_spec, "builtin name or CSV path")->required();
  spectrum->add_option("--tag", sp_tag, "class tag for the band-probe estimate");
  spectrum->add_option("--omega-min", omin, "scan start");
  spectrum->add_option("--omega-max", omax, "scan end");
  spectrum->add_option("--omega-step", ostep, "scan step (0: default)");
  spectrum->add_option("--T", T, "averaging horizon (0: default)");
  spectrum->add_option("--threshold", threshold, "detection threshold (0: default)");
  spectrum->add_option("--N", N, "truncation order for series builtins");
  add_common(spectrum, os);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(oa, in_analyze, tags, N);
    if (*generate) return cmd_generate(og, in_gen, N);
    if (*verify) return cmd_verify(ov, suite);
    if (*spectrum) return cmd_spectrum(os, in_spec, sp_tag, N, omin, omax, ostep, T, threshold);
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
