#include "apmean/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "apmean/mean_ops.hpp"
#include "apmean/norms.hpp"

namespace apmean {

namespace {

Verdict verdict_from_score(double score, double threshold) {
  if (score <= threshold) return Verdict::member;
  if (score >= 2.0 * threshold) return Verdict::nonmember;
  return Verdict::inconclusive;
}

ClassVerdict make_verdict(const ClassTag& tag, double score, double threshold,
                          std::string evidence) {
  ClassVerdict v;
  v.tag = tag.name();
  v.score = score;
  v.threshold = threshold;
  v.verdict = verdict_from_score(score, threshold);
  v.evidence = std::move(evidence);
  return v;
}

double tail_sup(const Signal& s, const Window& window, double step) {
  double a = window.b - window.length() / 4.0;
  return sup_norm(s, Window(a, window.b), step);
}

// Spectrum-scan reconstruction residual in sup norm over the window.
struct ReconEvidence {
  double sup_err;
  std::size_t lines;
  Signal poly;
};

ReconEvidence recon_residual(const Signal& s, const ClassifyParams& p) {
  auto spec = bohr_spectrum_scan(s, p.scan_omega_min, p.scan_omega_max, p.scan_omega_step,
                                 p.scan_T, p.scan_threshold, p.quad);
  auto rec = reconstruct(s, spec, p.window, p.recon_step);
  return {rec.sup_err, spec.entries.size(), rec.poly};
}

ClassVerdict classify_ap(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  auto eps_rep = eps_periods(s, p.eps, p.tau_max, p.window, p.tau_step, p.window_stride,
                             p.dense_fraction);
  std::ostringstream ev;
  ev.precision(15);
  ev << "{\"eps_periods\":" << eps_report_json(eps_rep);
  double score;
  if (eps_rep.relatively_dense) {
    // relatively dense ε-period set is the Bohr criterion: member
    score = 0.0;
  } else {
    // second route: distance to the reconstructed trig polynomial
    auto rec = recon_residual(s, p);
    ev << ",\"reconstruction\":{\"lines\":" << rec.lines << ",\"sup_err\":" << rec.sup_err << '}';
    score = std::min(1.0, rec.sup_err);
  }
  ev << '}';
  return make_verdict(tag, score, p.thr_ap, ev.str());
}

ClassVerdict classify_spap(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  auto rec = recon_residual(s, p);
  double score = stepanoff(s - rec.poly, tag.p, 1.0, p.window, p.sup_step, p.quad);
  std::ostringstream ev;
  ev.precision(15);
  ev << "{\"lines\":" << rec.lines << ",\"stepanoff_residual\":" << score << '}';
  return make_verdict(tag, score, p.thr_ap, ev.str());
}

ClassVerdict classify_c0(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  double score = tail_sup(s, p.window, p.sup_step);
  std::ostringstream ev;
  ev.precision(15);
  ev << "{\"tail_sup\":" << score << ",\"tail_start\":" << (p.window.b - p.window.length() / 4.0)
     << '}';
  return make_verdict(tag, score, p.thr_c0, ev.str());
}

ClassVerdict classify_cub(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  double delta = p.cub_delta;
  double modulus = 0.0;
  std::size_t n = static_cast<std::size_t>(std::floor(p.window.length() / p.sup_step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) {
    double t = std::min(p.window.a + static_cast<double>(i) * p.sup_step, p.window.b - delta);
    modulus = std::max(modulus, std::abs(s.eval(t + delta) - s.eval(t)));
  }
  std::ostringstream ev;
  ev.precision(15);
  ev << "{\"modulus\":" << modulus << ",\"delta\":" << delta << '}';
  return make_verdict(tag, modulus, p.thr_cub, ev.str());
}

ClassVerdict classify_ergodic(const Signal& s, const ClassTag& tag, const ClassifyParams& p,
                              bool require_zero_mean) {
  auto rep = ergodic_mean(s, p.T_values, p.base_points, p.rtol, p.quad);
  double tail = rep.sup_dev.back();
  if (rep.sup_dev.size() >= 2) tail = std::max(tail, rep.sup_dev[rep.sup_dev.size() - 2]);
  double score = tail / (1.0 + std::abs(rep.value));
  if (require_zero_mean) score = std::max(score, std::abs(rep.value));
  std::ostringstream ev;
  ev << "{\"mean\":" << mean_report_json(rep) << '}';
  return make_verdict(tag, score, p.rtol, ev.str());
}

ClassVerdict classify_te(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  auto probes = totally_ergodic_probe(s, tag.omegas, p.T_values, p.base_points, p.rtol, p.quad);
  double score = 0.0;
  std::ostringstream ev;
  ev << "{\"probes\":[";
  bool first = true;
  for (const auto& [omega, rep] : probes) {
    double tail = rep.sup_dev.back();
    if (rep.sup_dev.size() >= 2) tail = std::max(tail, rep.sup_dev[rep.sup_dev.size() - 2]);
    score = std::max(score, tail / (1.0 + std::abs(rep.value)));
    if (!first) ev << ',';
    first = false;
    ev << "{\"omega\":" << omega << ",\"report\":" << mean_report_json(rep) << '}';
  }
  ev << "]}";
  return make_verdict(tag, score, p.rtol, ev.str());
}

ClassVerdict classify_aap(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  auto rec = recon_residual(s, p);
  double score = tail_sup(s - rec.poly, p.window, p.sup_step);
  std::ostringstream ev;
  ev.precision(15);
  ev << "{\"lines\":" << rec.lines << ",\"remainder_tail_sup\":" << score << '}';
  return make_verdict(tag, score, p.thr_c0, ev.str());
}

ClassVerdict classify_ma(const Signal& s, const ClassTag& tag, const ClassifyParams& p) {
  if (tag.n <= 0) return classify(s, *tag.inner, p);
  double worst_ratio = 0.0;
  bool any_non = false, any_inconclusive = false;
  std::ostringstream ev;
  ev << "{\"children\":[";
  bool first = true;
  for (double h : p.h_samples) {
    ClassTag child_tag = tag.n == 1 ? *tag.inner : ClassTag::MA(*tag.inner, tag.n - 1);
    ClassVerdict child = classify(mean_M(s, h, p.quad), child_tag, p);
    worst_ratio = std::max(worst_ratio, child.threshold > 0.0 ? child.score / child.threshold : 0.0);
    if (child.verdict == Verdict::nonmember) any_non = true;
    if (child.verdict == Verdict::inconclusive) any_inconclusive = true;
    if (!first) ev << ',';
    first = false;
    ev << "{\"h\":" << h << ",\"verdict\":" << verdict_json(child) << '}';
  }
  ev << "]}";
  ClassVerdict v;
  v.tag = tag.name();
  v.threshold = 1.0;
  v.score = worst_ratio;
  if (any_non)
    v.verdict = Verdict::nonmember, v.score = std::max(v.score, 2.0);
  else if (any_inconclusive)
    v.verdict = Verdict::inconclusive, v.score = std::clamp(v.score, 1.0, 2.0);
  else
    v.verdict = Verdict::member, v.score = std::min(v.score, 1.0);
  v.evidence = ev.str();
  return v;
}

}  // namespace

std::string ClassTag::name() const {
  switch (kind) {
    case Kind::AP: return "AP";
    case Kind::SpAP: {
      std::ostringstream o;
      o << "SpAP:" << p;
      return o.str();
    }
    case Kind::C0: return "C0";
    case Kind::Cub: return "Cub";
    case Kind::E: return "E";
    case Kind::E0: return "E0";
    case Kind::TE: {
      std::ostringstream o;
      o << "TE:";
      for (std::size_t i = 0; i < omegas.size(); ++i) o << (i ? "," : "") << omegas[i];
      return o.str();
    }
    case Kind::AAP: return "AAP";
    case Kind::MA: {
      std::ostringstream o;
      o << "MA:" << (inner ? inner->name() : "?") << ':' << n;
      return o.str();
    }
    case Kind::APMod: return "APMod";
  }
  return "?";
}

ClassTag parse_tag(const std::string& text) {
  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : str) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  auto parts = split(text, ':');
  const std::string& head = parts[0];
  if (head == "AP") return ClassTag::AP();
  if (head == "C0") return ClassTag::C0();
  if (head == "Cub") return ClassTag::Cub();
  if (head == "E") return ClassTag::E();
  if (head == "E0") return ClassTag::E0();
  if (head == "AAP") return ClassTag::AAP();
  if (head == "APMod") return ClassTag::APMod();
  if (head == "SpAP") {
    if (parts.size() != 2) throw UnsupportedTag("SpAP needs an exponent: SpAP:p");
    return ClassTag::SpAP(std::stod(parts[1]));
  }
  if (head == "TE") {
    if (parts.size() != 2) throw UnsupportedTag("TE needs frequencies: TE:w1,w2");
    std::vector<double> omegas;
    for (const auto& w : split(parts[1], ',')) omegas.push_back(std::stod(w));
    return ClassTag::TE(std::move(omegas));
  }
  if (head == "MA") {
    if (parts.size() < 3) throw UnsupportedTag("MA needs inner tag and depth: MA:inner:n");
    int n = std::stoi(parts.back());
    std::string inner_text;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i)
      inner_text += (i > 1 ? ":" : "") + parts[i];
    return ClassTag::MA(parse_tag(inner_text), n);
  }
  throw UnsupportedTag("unknown class tag: " + text);
}

EpsPeriodReport eps_periods(const Signal& s, double eps, double tau_max, const Window& window,
                            double tau_step, int window_stride, double dense_fraction) {
  if (!(eps > 0.0)) throw EmptyRange("eps_periods: epsilon must be positive");
  if (!(tau_max > 0.0) || !(tau_step > 0.0)) throw EmptyRange("eps_periods: bad tau range");
  if (window_stride < 1) window_stride = 1;

  // shared lattice covering window and window + tau_max
  std::size_t win_points = static_cast<std::size_t>(std::floor(window.length() / tau_step + 1e-9)) + 1;
  std::size_t tau_points = static_cast<std::size_t>(std::floor(tau_max / tau_step + 1e-9)) + 1;
  std::vector<Complex> values(win_points + tau_points - 1);
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = s.eval(window.a + static_cast<double>(k) * tau_step);

  EpsPeriodReport rep;
  rep.epsilon = eps;
  rep.tau_max = tau_max;
  for (std::size_t j = 0; j < tau_points; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < win_points; i += static_cast<std::size_t>(window_stride)) {
      if (std::abs(values[i + j] - values[i]) > eps) {
        ok = false;
        break;
      }
    }
    if (ok) rep.periods.push_back(static_cast<double>(j) * tau_step);
  }

  if (!rep.periods.empty()) {
    double l = rep.periods.front();  // leading gap from 0
    for (std::size_t k = 1; k < rep.periods.size(); ++k)
      l = std::max(l, rep.periods[k] - rep.periods[k - 1]);
    l = std::max(l, tau_max - rep.periods.back());
    rep.inclusion_length = l;
    rep.relatively_dense = l <= dense_fraction * tau_max;
  }
  return rep;
}

ClassVerdict classify(const Signal& s, const ClassTag& tag, const ClassifyParams& params) {
  switch (tag.kind) {
    case ClassTag::Kind::AP:
      return classify_ap(s, tag, params);
    case ClassTag::Kind::APMod: {
      // demodulate by the unit chirp, then run the AP test
      Signal demod = Signal::from_function([s](double t) {
        return s.eval(t) * Complex(std::cos(t * t), -std::sin(t * t));
      });
      ClassVerdict v = classify_ap(demod, tag, params);
      v.tag = tag.name();
      return v;
    }
    case ClassTag::Kind::SpAP:
      return classify_spap(s, tag, params);
    case ClassTag::Kind::C0:
      return classify_c0(s, tag, params);
    case ClassTag::Kind::Cub:
      return classify_cub(s, tag, params);
    case ClassTag::Kind::E:
      return classify_ergodic(s, tag, params, false);
    case ClassTag::Kind::E0:
      return classify_ergodic(s, tag, params, true);
    case ClassTag::Kind::TE:
      return classify_te(s, tag, params);
    case ClassTag::Kind::AAP:
      return classify_aap(s, tag, params);
    case ClassTag::Kind::MA:
      if (!tag.inner) throw UnsupportedTag("MA tag without inner class");
      return classify_ma(s, tag, params);
  }
  throw UnsupportedTag("unhandled class tag");
}

DeltaProbeReport delta_probe(const Signal& s, const ClassTag& tag,
                             const std::vector<double>& s_samples,
                             const std::vector<double>& h_samples,
                             const ClassifyParams& params) {
  DeltaProbeReport rep;
  bool all_diff_member = true;
  bool any_residual_non = false;
  for (double si : s_samples) {
    if (!(si > 0.0)) throw EmptyRange("delta_probe: shift samples must be positive");
    ClassVerdict v = classify(difference(s, si), tag, params);
    if (v.verdict != Verdict::member) all_diff_member = false;
    rep.difference_verdicts.emplace_back(si, std::move(v));
  }
  for (double h : h_samples) {
    if (!(h > 0.0)) throw NonPositiveH(h);
    ClassVerdict v = classify(s - mean_M(s, h, params.quad), tag, params);
    if (v.verdict == Verdict::nonmember) any_residual_non = true;
    rep.residual_verdicts.emplace_back(h, std::move(v));
  }
  // (Δ): all differences in the class should force s − M_h s into the class
  rep.consistent = !(all_diff_member && any_residual_non);
  return rep;
}

std::string verdict_json(const ClassVerdict& v) {
  std::ostringstream out;
  out.precision(15);
  const char* word = v.verdict == Verdict::member
                         ? "member"
                         : (v.verdict == Verdict::nonmember ? "nonmember" : "inconclusive");
  out << "{\"tag\":\"" << v.tag << "\",\"score\":" << v.score << ",\"threshold\":" << v.threshold
      << ",\"verdict\":\"" << word << "\",\"evidence\":" << (v.evidence.empty() ? "{}" : v.evidence)
      << '}';
  return out.str();
}

std::string eps_report_json(const EpsPeriodReport& rep) {
  std::ostringstream out;
  out.precision(15);
  out << "{\"epsilon\":" << rep.epsilon << ",\"tau_max\":" << rep.tau_max
      << ",\"count\":" << rep.periods.size() << ",\"inclusion_length\":";
  if (rep.inclusion_length)
    out << *rep.inclusion_length;
  else
    out << "null";
  out << ",\"relatively_dense\":" << (rep.relatively_dense ? "true" : "false") << '}';
  return out.str();
}

}  // namespace apmean
