#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepball {

enum class Verdict {
  CertifiedSeparable,
  Inconclusive,
  InvalidState,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedSeparable: return "CERTIFIED_SEPARABLE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::InvalidState: return "INVALID_STATE";
  }
  return "UNKNOWN";
}

/// Outcome of one certifier run. CERTIFIED_SEPARABLE means norm_value fits
/// inside radius (closed ball, small solver slack) on a PSD state;
/// INCONCLUSIVE only says the state lies outside this particular ball.
struct CertificateReport {
  std::string certifier;
  double norm_value = 0.0;
  double radius = 0.0;
  std::optional<double> scaling_factor;
  bool psd_ok = true;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> satisfied_conditions;
  std::map<std::string, double> metrics;

  bool certified() const { return verdict == Verdict::CertifiedSeparable; }
};

}  // namespace sepball
