#pragma once

#include "sepball/certifiers.hpp"
#include "sepball/families.hpp"
#include "sepball/io.hpp"
#include "sepball/nested_norm.hpp"
#include "sepball/oracle.hpp"
#include "sepball/structured.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sepball::cli {

struct CommonOptions {
  bool json = false;
  double tol = kDefaultCertifierTol;
  std::vector<int> profile;  // empty: use the dims stored in the file
};

struct FamilyOptions {
  std::optional<int> d, n1, n2;
  std::optional<double> b, a, p, eps;
  std::vector<int> dims;
  std::optional<ComplexVector> vec;
  std::optional<SpptTriple> triple;
  std::optional<CirculantParams> circulant;
};

namespace detail {

template <typename T>
const T& require(const std::optional<T>& value, const char* what) {
  if (!value) {
    throw std::invalid_argument(std::string("missing required parameter: ") + what);
  }
  return *value;
}

inline std::string format_sig(double v, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline Complex parse_complex(const std::string& token) {
  const auto colon = token.find(':');
  try {
    if (colon == std::string::npos) {
      return Complex(std::stod(token), 0.0);
    }
    return Complex(std::stod(token.substr(0, colon)), std::stod(token.substr(colon + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex value '" + token + "' (use re or re:im)");
  }
}

inline ComplexVector parse_vector(const std::string& text) {
  std::vector<Complex> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) {
      values.push_back(parse_complex(token));
    }
  }
  if (values.empty()) {
    throw std::invalid_argument("empty state vector");
  }
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = values[i];
  }
  return v;
}

inline SpptTriple triple_from_json(const nlohmann::json& j) {
  for (const char* key : {"x1", "x2", "s"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("triple file: missing '") + key + "'");
    }
  }
  SpptTriple triple{matrix_from_json(j["x1"]), matrix_from_json(j["x2"]),
                    matrix_from_json(j["s"])};
  triple.validate();
  return triple;
}

inline SpptTriple load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open triple file " + path);
  }
  nlohmann::json j;
  in >> j;
  return triple_from_json(j);
}

}  // namespace detail

inline QuantumState make_family_state(const std::string& family, const FamilyOptions& o) {
  using detail::require;
  if (family == "werner") {
    return werner(require(o.d, "--d"), require(o.b, "--b"));
  }
  if (family == "isotropic") {
    return isotropic(require(o.d, "--d"), require(o.eps, "--eps"));
  }
  if (family == "horodecki") {
    return horodecki_3x3(require(o.a, "--a"));
  }
  if (family == "horodecki-mix") {
    return horodecki_mix(require(o.a, "--a"), require(o.p, "--p"));
  }
  if (family == "pseudopure") {
    PseudopureSpec spec;
    spec.n1 = require(o.n1, "--n1");
    spec.n2 = require(o.n2, "--n2");
    spec.pi_vector = require(o.vec, "--vec");
    spec.epsilon = require(o.eps, "--eps");
    return pseudopure(spec);
  }
  if (family == "sppt") {
    return sppt_state(require(o.triple, "--triple"));
  }
  if (family == "circulant") {
    return circulant_2x2(require(o.circulant, "--a11/--a22/--b11/--b22"));
  }
  if (family == "maximally-mixed") {
    if (o.dims.empty()) {
      throw std::invalid_argument("missing required parameter: --dims");
    }
    return maximally_mixed(DimensionProfile(o.dims));
  }
  throw std::invalid_argument("unknown family: " + family);
}

inline FamilyOptions with_param(FamilyOptions o, const std::string& param, double value) {
  if (param == "b") {
    o.b = value;
  } else if (param == "a") {
    o.a = value;
  } else if (param == "p") {
    o.p = value;
  } else if (param == "eps") {
    o.eps = value;
  } else {
    throw std::invalid_argument("scan: unsupported parameter '" + param +
                                "' (expected b, a, p or eps)");
  }
  return o;
}

inline std::function<CertificateReport(const QuantumState&)> certifier_by_name(
    const std::string& name, double tol) {
  if (name == "nested") {
    return [tol](const QuantumState& s) { return certify_nested_ball(s, tol); };
  }
  if (name == "nested-scaled") {
    return [tol](const QuantumState& s) { return certify_nested_ball_scaled(s, tol); };
  }
  if (name == "frobenius") {
    return [tol](const QuantumState& s) { return certify_frobenius_ball(s, tol); };
  }
  if (name == "spectral") {
    return [tol](const QuantumState& s) { return certify_spectral_ball(s, tol); };
  }
  if (name == "hildebrand") {
    return [tol](const QuantumState& s) { return certify_hildebrand_ball(s, tol); };
  }
  throw std::invalid_argument("unknown certifier: " + name);
}

struct ScanSpec {
  std::string family;
  std::string param;
  FamilyOptions options;
  std::string certifier = "nested";
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-6;
  double certifier_tol = kDefaultCertifierTol;
};

struct ScanOutcome {
  double boundary = 0.0;
  bool whole_range_certified = false;
  std::vector<ScanProbe> probes;
};

inline ScanOutcome run_threshold_scan(const ScanSpec& spec) {
  auto family = [&](double value) {
    return make_family_state(spec.family, with_param(spec.options, spec.param, value));
  };
  auto certifier = certifier_by_name(spec.certifier, spec.certifier_tol);
  ScanOutcome outcome;
  outcome.boundary =
      threshold_scan(family, certifier, spec.lo, spec.hi, spec.tol, &outcome.probes);
  outcome.whole_range_certified =
      outcome.probes.size() >= 2 && outcome.probes[0].certified && outcome.probes[1].certified;
  return outcome;
}

struct MixtureThresholdRow {
  double a;
  double frobenius_threshold;
  double frobenius_reference;
  double nested_threshold;
  double nested_reference;
};

/// Direct-ball thresholds for the horodecki mixture: the certified range is
/// 0 <= p <= 1 / (9 ||rho_h - I/9||) in either norm, so the boundary has a
/// closed form and needs no scan. Reference columns are the published values
/// this command is meant to reproduce.
inline std::vector<MixtureThresholdRow> table1_rows() {
  static constexpr double kA[] = {0.25, 0.50, 0.75};
  static constexpr double kFrobeniusReference[] = {0.3233, 0.3955, 0.4089};
  static constexpr double kNestedReference[] = {0.3430, 0.4275, 0.4635};
  std::vector<MixtureThresholdRow> rows;
  for (int i = 0; i < 3; ++i) {
    const QuantumState rho = horodecki_3x3(kA[i]);
    const ComplexMatrix delta =
        rho.matrix() - ComplexMatrix::Identity(9, 9) / 9.0;
    const double frob = schatten_norm(delta, 2.0);
    const double nested = nested_norm(delta, rho.profile());
    rows.push_back({kA[i], 1.0 / (9.0 * frob), kFrobeniusReference[i], 1.0 / (9.0 * nested),
                    kNestedReference[i]});
  }
  return rows;
}

namespace detail {

inline QuantumState load_for_command(const std::string& path, const CommonOptions& common) {
  QuantumState state = load_state(path);
  if (!common.profile.empty()) {
    state = state.with_profile(DimensionProfile(common.profile));
  }
  return state;
}

inline std::optional<SpptTriple> triple_from_metadata(const QuantumState& state) {
  const auto& meta = state.metadata();
  const auto family = meta.find("family");
  if (family == meta.end()) {
    return std::nullopt;
  }
  if (family->second == "sppt" && meta.count("x1") && meta.count("x2") && meta.count("s")) {
    SpptTriple triple{matrix_from_json(nlohmann::json::parse(meta.at("x1"))),
                      matrix_from_json(nlohmann::json::parse(meta.at("x2"))),
                      matrix_from_json(nlohmann::json::parse(meta.at("s")))};
    triple.validate();
    return triple;
  }
  if (family->second == "circulant") {
    CirculantParams cp;
    try {
      cp.a11 = std::stod(meta.at("a11"));
      cp.a22 = std::stod(meta.at("a22"));
      cp.b11 = std::stod(meta.at("b11"));
      cp.b22 = std::stod(meta.at("b22"));
      cp.a12 = Complex(std::stod(meta.at("a12_re")), std::stod(meta.at("a12_im")));
      cp.b12 = Complex(std::stod(meta.at("b12_re")), std::stod(meta.at("b12_im")));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (cp.a11 > 0.0 && cp.b11 > 0.0) {
      return circulant_sppt_triple(cp);
    }
  }
  return std::nullopt;
}

inline nlohmann::json report_to_json(const CertificateReport& r) {
  nlohmann::json j;
  j["certifier"] = r.certifier;
  j["norm_value"] = r.norm_value;
  j["radius"] = r.radius;
  if (r.scaling_factor) {
    j["scaling_factor"] = *r.scaling_factor;
  } else {
    j["scaling_factor"] = nullptr;
  }
  j["psd_ok"] = r.psd_ok;
  j["verdict"] = to_string(r.verdict);
  j["satisfied_conditions"] = r.satisfied_conditions;
  j["metrics"] = r.metrics;
  return j;
}

/// Bipartition used for PPT summaries: multipartite profiles are flattened to
/// (n1, rest).
inline QuantumState ppt_view(const QuantumState& state) {
  if (state.profile().bipartite()) {
    return state;
  }
  const int n1 = state.profile().dim(0);
  return state.with_profile(DimensionProfile({n1, state.profile().inner_dim(1)}));
}

}  // namespace detail

inline std::vector<CertificateReport> applicable_certifier_reports(const QuantumState& state,
                                                                   bool scaled, bool all,
                                                                   double tol) {
  std::vector<CertificateReport> reports;
  reports.push_back(certify_nested_ball(state, tol));
  if (state.profile().bipartite()) {
    if (scaled || all) {
      reports.push_back(certify_nested_ball_scaled(state, tol));
    }
    reports.push_back(certify_frobenius_ball(state, tol));
    reports.push_back(certify_spectral_ball(state, tol));
  }
  if (state.profile().all_qubits() && state.profile().level_count() >= 2) {
    reports.push_back(certify_hildebrand_ball(state, tol));
  }
  if (const auto triple = detail::triple_from_metadata(state)) {
    reports.push_back(certify_sppt_block_dominance(*triple, tol));
    try {
      reports.push_back(certify_sppt_eigenvalue_window(*triple, tol));
    } catch (const std::domain_error&) {
      // singular X1: the block-dominance report already covers the triple
    }
  }
  return reports;
}

// ---------------------------------------------------------------------------
// subcommands

inline int cmd_gen(const std::string& family, const FamilyOptions& options,
                   const std::string& out_path, std::ostream& err) {
  QuantumState state = make_family_state(family, options);
  if (family == "sppt" && options.triple) {
    auto meta = state.metadata();
    meta["x1"] = matrix_to_json(options.triple->x1).dump();
    meta["x2"] = matrix_to_json(options.triple->x2).dump();
    meta["s"] = matrix_to_json(options.triple->s).dump();
    state = state.with_metadata(std::move(meta));
  }
  save_state(state, out_path);
  err << "wrote " << out_path << " (dims " << state.profile().to_string() << ")\n";
  return 0;
}

inline int cmd_norm(const std::string& in_path, const CommonOptions& common, std::ostream& out) {
  const QuantumState state = detail::load_for_command(in_path, common);
  const ComplexMatrix rho = state.identity_scale();
  const ComplexMatrix delta = rho - ComplexMatrix::Identity(rho.rows(), rho.cols());
  const double nested = nested_norm(delta, state.profile());
  const double frobenius = schatten_norm(delta, 2.0);
  const double spectral = spectral_norm(delta);
  if (common.json) {
    nlohmann::json j;
    j["dims"] = state.profile().dims();
    j["trace"] = state.trace();
    j["nested_distance"] = nested;
    j["frobenius_distance"] = frobenius;
    j["spectral_distance"] = spectral;
    out << j.dump(2) << '\n';
  } else {
    out << "dims                " << state.profile().to_string() << '\n'
        << "trace               " << detail::format_sig(state.trace()) << '\n'
        << "nested_distance     " << detail::format_sig(nested) << '\n'
        << "frobenius_distance  " << detail::format_sig(frobenius) << '\n'
        << "spectral_distance   " << detail::format_sig(spectral) << '\n';
  }
  return 0;
}

inline int cmd_certify(const std::string& in_path, const CommonOptions& common, bool scaled,
                       bool all, std::ostream& out) {
  const QuantumState state = detail::load_for_command(in_path, common);
  const auto reports = applicable_certifier_reports(state, scaled, all, common.tol);
  const PptReport ppt = ppt_check(detail::ppt_view(state), common.tol);

  bool any_certified = false;
  bool any_invalid = false;
  for (const auto& r : reports) {
    any_certified = any_certified || r.verdict == Verdict::CertifiedSeparable;
    any_invalid = any_invalid || r.verdict == Verdict::InvalidState;
  }

  if (common.json) {
    nlohmann::json j;
    j["state"] = {{"dims", state.profile().dims()},
                  {"trace", state.trace()},
                  {"normalized", state.normalized()}};
    j["certifiers"] = nlohmann::json::array();
    for (const auto& r : reports) {
      j["certifiers"].push_back(detail::report_to_json(r));
    }
    j["ppt"] = {{"min_pt_eigenvalue", ppt.min_pt_eigenvalue},
                {"is_ppt", ppt.is_ppt},
                {"subsystem_transposed", ppt.subsystem_transposed}};
    out << j.dump(2) << '\n';
  } else {
    out << "state: dims " << state.profile().to_string() << "  trace "
        << detail::format_sig(state.trace()) << '\n';
    for (const auto& r : reports) {
      out << "  " << r.certifier;
      for (std::size_t pad = r.certifier.size(); pad < 24; ++pad) out << ' ';
      out << "norm " << detail::format_sig(r.norm_value) << "  radius "
          << detail::format_sig(r.radius);
      if (r.scaling_factor) {
        out << "  a " << detail::format_sig(*r.scaling_factor);
      }
      out << "  " << to_string(r.verdict);
      if (!r.satisfied_conditions.empty()) {
        out << "  [";
        for (std::size_t i = 0; i < r.satisfied_conditions.size(); ++i) {
          if (i) out << ' ';
          out << r.satisfied_conditions[i];
        }
        out << ']';
      }
      out << '\n';
    }
    out << "  ppt: min eigenvalue " << detail::format_sig(ppt.min_pt_eigenvalue) << "  "
        << (ppt.is_ppt ? "PPT" : "NPT") << '\n';
  }
  if (any_invalid) {
    return 1;
  }
  return any_certified ? 0 : 2;
}

inline int cmd_scan(const ScanSpec& spec, const CommonOptions& common, std::ostream& out,
                    std::ostream& err) {
  const ScanOutcome outcome = run_threshold_scan(spec);
  if (common.json) {
    nlohmann::json j;
    j["family"] = spec.family;
    j["param"] = spec.param;
    j["certifier"] = spec.certifier;
    j["boundary"] = outcome.boundary;
    j["whole_range_certified"] = outcome.whole_range_certified;
    j["probes"] = nlohmann::json::array();
    for (const auto& probe : outcome.probes) {
      j["probes"].push_back({{"parameter", probe.parameter}, {"certified", probe.certified}});
    }
    out << j.dump(2) << '\n';
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", outcome.boundary);
    out << "boundary " << buf << '\n';
    if (outcome.whole_range_certified) {
      err << "note: certifier fires on the whole range; boundary is the upper endpoint\n";
    }
  }
  return 0;
}

inline int cmd_table1(const CommonOptions& common, std::ostream& out) {
  const auto rows = table1_rows();
  if (common.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"a", r.a},
                   {"frobenius_threshold", r.frobenius_threshold},
                   {"frobenius_reference", r.frobenius_reference},
                   {"nested_threshold", r.nested_threshold},
                   {"nested_reference", r.nested_reference}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << "   a   frobenius-ball  reference  |dev|    nested-ball  reference  |dev|\n";
    for (const auto& r : rows) {
      char line[160];
      std::snprintf(line, sizeof line,
                    "%5.2f   %9.4f      %6.4f   %6.4f     %9.4f    %6.4f   %6.4f\n", r.a,
                    r.frobenius_threshold, r.frobenius_reference,
                    std::abs(r.frobenius_threshold - r.frobenius_reference), r.nested_threshold,
                    r.nested_reference, std::abs(r.nested_threshold - r.nested_reference));
      out << line;
    }
  }
  return 0;
}

inline int cmd_ppt(const std::string& in_path, const CommonOptions& common, std::ostream& out) {
  const QuantumState state = detail::load_for_command(in_path, common);
  const QuantumState view = detail::ppt_view(state);
  const PptReport report = ppt_check(view, common.tol);
  if (common.json) {
    nlohmann::json j;
    j["dims"] = view.profile().dims();
    j["min_pt_eigenvalue"] = report.min_pt_eigenvalue;
    j["is_ppt"] = report.is_ppt;
    j["subsystem_transposed"] = report.subsystem_transposed;
    out << j.dump(2) << '\n';
  } else {
    out << "bipartition         " << view.profile().to_string() << '\n'
        << "min_pt_eigenvalue   " << detail::format_sig(report.min_pt_eigenvalue) << '\n'
        << "ppt                 " << (report.is_ppt ? "true" : "false") << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// argv wiring

inline int run(int argc, const char* const* argv) {
  CLI::App app{"separable-ball certification toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_flag("--json", common.json, "machine-readable output");
  app.add_option("--tol", common.tol, "certifier tolerance (default 1e-9)");
  app.add_option("--profile", common.profile, "override subsystem dims, e.g. 2,2")
      ->delimiter(',');

  struct RawFamilyArgs {
    std::optional<int> d, n1, n2;
    std::optional<double> b, a, p, eps;
    std::vector<int> dims;
    std::optional<std::string> vec, triple_path, a12, b12;
    std::optional<double> a11, a22, b11, b22;
  };

  auto add_family_options = [](CLI::App* sub, RawFamilyArgs& raw) {
    sub->add_option("--d", raw.d, "local dimension");
    sub->add_option("--b", raw.b, "werner parameter");
    sub->add_option("--a", raw.a, "horodecki parameter");
    sub->add_option("--p", raw.p, "mixture weight");
    sub->add_option("--eps", raw.eps, "pure-state admixture");
    sub->add_option("--n1", raw.n1, "first subsystem dimension");
    sub->add_option("--n2", raw.n2, "second subsystem dimension");
    sub->add_option("--dims", raw.dims, "subsystem dimensions, e.g. 2,2,2")->delimiter(',');
    sub->add_option("--vec", raw.vec, "state vector entries re[:im],re[:im],...");
    sub->add_option("--triple", raw.triple_path, "JSON file with x1/x2/s matrices");
    sub->add_option("--a11", raw.a11, "circulant entry");
    sub->add_option("--a22", raw.a22, "circulant entry");
    sub->add_option("--b11", raw.b11, "circulant entry");
    sub->add_option("--b22", raw.b22, "circulant entry");
    sub->add_option("--a12", raw.a12, "circulant entry re[:im]");
    sub->add_option("--b12", raw.b12, "circulant entry re[:im]");
  };

  auto to_family_options = [](const RawFamilyArgs& raw) {
    FamilyOptions o;
    o.d = raw.d;
    o.n1 = raw.n1;
    o.n2 = raw.n2;
    o.b = raw.b;
    o.a = raw.a;
    o.p = raw.p;
    o.eps = raw.eps;
    o.dims = raw.dims;
    if (raw.vec) {
      o.vec = detail::parse_vector(*raw.vec);
    }
    if (raw.triple_path) {
      o.triple = detail::load_triple(*raw.triple_path);
    }
    if (raw.a11 || raw.a22 || raw.b11 || raw.b22 || raw.a12 || raw.b12) {
      CirculantParams cp;
      cp.a11 = raw.a11.value_or(0.0);
      cp.a22 = raw.a22.value_or(0.0);
      cp.b11 = raw.b11.value_or(0.0);
      cp.b22 = raw.b22.value_or(0.0);
      if (raw.a12) cp.a12 = detail::parse_complex(*raw.a12);
      if (raw.b12) cp.b12 = detail::parse_complex(*raw.b12);
      o.circulant = cp;
    }
    return o;
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a state file for a named family");
  gen->fallthrough();
  std::string gen_family;
  gen->add_option("family", gen_family,
                  "werner|isotropic|horodecki|horodecki-mix|pseudopure|sppt|circulant|"
                  "maximally-mixed")
      ->required();
  RawFamilyArgs gen_raw;
  add_family_options(gen, gen_raw);
  std::string gen_out;
  gen->add_option("-o,--out", gen_out, "output state file")->required();

  // norm
  auto* norm = app.add_subcommand("norm", "print ball distances of a state file");
  norm->fallthrough();
  std::string norm_in;
  norm->add_option("-i,--in", norm_in, "state file")->required();

  // certify
  auto* certify = app.add_subcommand("certify", "run the applicable certifiers");
  certify->fallthrough();
  std::string certify_in;
  certify->add_option("-i,--in", certify_in, "state file")->required();
  bool certify_scaled = false;
  bool certify_all = false;
  certify->add_flag("--scaled", certify_scaled, "also run the scaled nested ball");
  certify->add_flag("--all", certify_all, "run every applicable certifier");

  // scan
  auto* scan = app.add_subcommand("scan", "bisect a family parameter for a verdict boundary");
  scan->fallthrough();
  std::string scan_family;
  scan->add_option("family", scan_family, "family to scan")->required();
  RawFamilyArgs scan_raw;
  add_family_options(scan, scan_raw);
  std::string scan_param;
  scan->add_option("--param", scan_param, "parameter to vary (b, a, p or eps)")->required();
  std::string scan_certifier = "nested";
  scan->add_option("--certifier", scan_certifier,
                   "nested|nested-scaled|frobenius|spectral|hildebrand");
  double scan_lo = 0.0;
  double scan_hi = 1.0;
  double scan_tol = 1e-6;
  scan->add_option("--lo", scan_lo, "lower end of the range");
  scan->add_option("--hi", scan_hi, "upper end of the range");
  scan->add_option("--scan-tol", scan_tol, "boundary tolerance (default 1e-6)");

  // table1
  auto* table1 = app.add_subcommand(
      "table1", "reproduce the horodecki-mixture threshold table");
  table1->fallthrough();

  // ppt
  auto* ppt = app.add_subcommand("ppt", "partial-transpose spectrum check");
  ppt->fallthrough();
  std::string ppt_in;
  ppt->add_option("-i,--in", ppt_in, "state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_family, to_family_options(gen_raw), gen_out, std::cerr);
    }
    if (norm->parsed()) {
      return cmd_norm(norm_in, common, std::cout);
    }
    if (certify->parsed()) {
      return cmd_certify(certify_in, common, certify_scaled, certify_all, std::cout);
    }
    if (scan->parsed()) {
      ScanSpec spec;
      spec.family = scan_family;
      spec.param = scan_param;
      spec.options = to_family_options(scan_raw);
      spec.certifier = scan_certifier;
      spec.lo = scan_lo;
      spec.hi = scan_hi;
      spec.tol = scan_tol;
      spec.certifier_tol = common.tol;
      return cmd_scan(spec, common, std::cout, std::cerr);
    }
    if (table1->parsed()) {
      return cmd_table1(common, std::cout);
    }
    if (ppt->parsed()) {
      return cmd_ppt(ppt_in, common, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace sepball::cli
