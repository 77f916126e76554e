#ifndef APMEAN_VERIFICATION_HPP
#define APMEAN_VERIFICATION_HPP

#include <string>
#include <vector>

#include "apmean/signal.hpp"

namespace apmean {

struct GenParams {
  int N = 12;         // truncation order for the series constructions
  double ramp = 1.0;  // ramp width for block10
};

/// Named generators: "chirp", "ex3_5", "prop3_8", "prop3_8_deriv", "block10",
/// "logosc".  The series constructions carry closed-form antiderivatives so
/// integral caches stay exact; their bursts oscillate far above any practical
/// quadrature lattice.
Signal gen(const std::string& name, const GenParams& params = {});

struct SuiteCheck {
  std::string description;
  double expected = 0.0;  // bound or target, as stated in the description
  double observed = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  double runtime = 0.0;  // seconds

  bool all_pass() const;
};

/// Named suites: identities, ergodic_rates, bohr_recovery,
/// chirp_orthogonality, ergodic_separation, bohl_bohr, tauberian_logosc,
/// distributions, hierarchy_witness, eps_periods, ma_nesting, all.
SuiteReport run_suite(const std::string& name);

const std::vector<std::string>& suite_names();

std::string suite_report_json(const SuiteReport& rep);
std::string suite_report_text(const SuiteReport& rep);

}  // namespace apmean

#endif
