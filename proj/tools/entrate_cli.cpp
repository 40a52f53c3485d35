// Command-line front end. Exit codes: 0 success, 1 physics or verification
// failure, 2 usage or configuration error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "entrate/cli_sweep.hpp"
#include "entrate/closed_forms.hpp"
#include "entrate/entanglement_rate.hpp"
#include "entrate/errors.hpp"
#include "entrate/langevin_models.hpp"
#include "entrate/scattering_spectra.hpp"
#include "entrate/verification.hpp"
#include "entrate/wavepacket.hpp"

namespace {

using namespace entrate;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kPhysicsFailure = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string model = "full";
  std::optional<double> g, kappa, gamma, delta, Delta, nth;
  double omega_min = -20.0;
  double omega_max = 20.0;
  int omega_steps = 401;
  double tol = 1e-6;
  std::string config;
  std::string output;
  std::string format = "csv";
  int jobs = 0;
  std::vector<std::string> only;
  int M = 2;
  int l = 0;
  long long cutoff = 100000;
};

void add_model_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--model", f.model, "full or effective")
      ->check(CLI::IsMember({"full", "effective"}));
  cmd->add_option("--g", f.g, "optomechanical coupling [kappa]");
  cmd->add_option("--kappa", f.kappa, "optical decay rate");
  cmd->add_option("--gamma", f.gamma, "mechanical damping [kappa]");
  cmd->add_option("--delta", f.delta, "mechanical frequency minus mode splitting [kappa]");
  cmd->add_option("--Delta", f.Delta, "laser detuning [kappa]");
  cmd->add_option("--nth", f.nth, "thermal phonon occupation");
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--output", f.output, "output file (default: standard output)");
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_omega_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--omega-min", f.omega_min, "lowest frequency [kappa]");
  cmd->add_option("--omega-max", f.omega_max, "highest frequency [kappa]");
  cmd->add_option("--omega-steps", f.omega_steps, "number of frequencies")
      ->check(CLI::Range(2, 100000000));
}

ModelKind model_of(const Flags& f) { return *parse_model(f.model); }

PointParams apply_flags(PointParams p, const Flags& f) {
  if (f.g) p.g = *f.g;
  if (f.kappa) p.kappa = *f.kappa;
  if (f.gamma) p.Gamma = *f.gamma;
  if (f.delta) p.delta = *f.delta;
  if (f.Delta) p.Delta = *f.Delta;
  if (f.nth) p.n_th = *f.nth;
  return p;
}

PointParams params_of(const Flags& f) {
  PointParams p;
  // The effective model needs a nonzero mismatch; default to the usual 10.
  if (model_of(f) == ModelKind::Effective) p.delta = 10.0;
  return apply_flags(p, f);
}

FrequencyGrid grid_of(const Flags& f) {
  if (!(f.omega_min < f.omega_max)) throw UsageError("--omega-min must be below --omega-max");
  return {f.omega_min, f.omega_max, f.omega_steps};
}

// Writes to --output when given, else to standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError(fmt::format("cannot open '{}' for writing", path));
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_record(const Flags& f, const std::vector<std::pair<std::string, json>>& fields) {
  Sink sink(f.output);
  if (f.format == "json") {
    json doc;
    doc["schema"] = 1;
    for (const auto& [k, v] : fields) doc[k] = v;
    sink.out() << doc.dump(2) << '\n';
    return;
  }
  sink.out() << "# schema=1\nquantity,value\n";
  for (const auto& [k, v] : fields) {
    sink.out() << k << ',' << (v.is_number() ? format_number(v.get<double>()) : v.dump()) << '\n';
  }
}

int cmd_spectrum(const Flags& f) {
  const SpectrumTable t = spectrum_table(model_of(f), params_of(f), grid_of(f));
  Sink sink(f.output);
  if (f.format == "json") {
    write_spectrum_json(t, sink.out());
  } else {
    write_spectrum_csv(t, sink.out());
  }
  return kOk;
}

int cmd_entanglement(const Flags& f) {
  const PointParams p = params_of(f);
  const SpectralEvaluator ev(build_drift(model_of(f), p),
                             model_of(f) == ModelKind::Full ? p.n_th : 0.0);
  const auto s = sample_entanglement_spectrum(ev, grid_of(f).values());
  Sink sink(f.output);
  if (f.format == "json") {
    json doc;
    doc["schema"] = 1;
    for (const auto& [w, e] : s.samples) {
      doc["omega"].push_back(w);
      doc["E"].push_back(e);
    }
    sink.out() << doc.dump(2) << '\n';
  } else {
    sink.out() << "# schema=1\nomega[kappa],E\n";
    for (const auto& [w, e] : s.samples) {
      sink.out() << format_number(w) << ',' << format_number(e) << '\n';
    }
  }
  return kOk;
}

int cmd_rate(const Flags& f) {
  const PointParams p = params_of(f);
  const RateResult r = entanglement_rate(build_drift(model_of(f), p),
                                         model_of(f) == ModelKind::Full ? p.n_th : 0.0, f.tol);
  write_record(f, {{"gamma_E[kappa]", r.gamma_E},
                   {"quadrature_error[kappa]", r.quadrature_error},
                   {"E_max", r.E_max},
                   {"omega_max[kappa]", r.omega_max},
                   {"fwhm[kappa]", r.fwhm},
                   {"secondary_peaks", r.secondary_peaks}});
  return kOk;
}

int cmd_stability(const Flags& f) {
  const PointParams p = params_of(f);
  const DriftMatrix d = build_drift(model_of(f), p);
  const StabilityReport st = stability(d);
  std::vector<std::pair<std::string, json>> fields{
      {"stable", st.stable ? 1 : 0},
      {"marginal", st.marginal ? 1 : 0},
      {"max_real_part[kappa]", st.max_real_part},
      {"stability_margin[kappa]", -st.max_real_part}};
  if (model_of(f) == ModelKind::Effective) {
    const auto roots = stability_boundary_effective(p.g, p.kappa, p.delta);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      fields.emplace_back(fmt::format("boundary_Delta_{}[kappa]", i), roots[i]);
    }
  }
  write_record(f, fields);
  return kOk;
}

int cmd_pair_rate(const Flags& f) {
  if (model_of(f) != ModelKind::Effective) {
    const PointParams p = params_of(f);
    const SpectralEvaluator ev(build_drift(ModelKind::Full, p), p.n_th);
    write_record(f, {{"pair_rate[kappa]", pair_rate_numeric(ev, std::max(f.tol, 1e-10))}});
    return kOk;
  }
  const PointParams p = params_of(f);
  EffectiveModelParams e;
  e.g = p.g;
  e.kappa = p.kappa;
  e.delta = p.delta;
  e.Delta = p.Delta;
  write_record(f, {{"pair_rate[kappa]", pair_rate_numeric(e, std::max(f.tol, 1e-10))},
                   {"pair_rate_closed[kappa]", pair_rate_closed(e.g, e.kappa, e.delta, e.Delta)}});
  return kOk;
}

int cmd_wannier(const Flags& f) {
  const double norm = kernel_norm(f.M, f.l, f.cutoff);
  const double bound = kernel_tail_bound(f.M, f.cutoff);
  write_record(f, {{"kernel_norm", norm},
                   {"deficit", 1.0 - norm},
                   {"tail_bound", bound},
                   {"within_bound", (1.0 - norm) <= bound ? 1 : 0}});
  return (1.0 - norm) <= bound ? kOk : kPhysicsFailure;
}

int cmd_sweep(const Flags& f, const CLI::App& cmd) {
  SweepConfig c;
  if (!f.config.empty()) c = load_sweep_config(f.config);
  if (cmd.count("--model")) c.model = model_of(f);
  c.params = apply_flags(c.params, f);
  if (cmd.count("--tol")) c.tol = f.tol;
  if (cmd.count("--jobs")) c.jobs = f.jobs;
  if (cmd.count("--output")) c.output = f.output;
  if (cmd.count("--format")) c.format = *parse_format(f.format);
  if (cmd.count("--omega-min")) c.omega.min = f.omega_min;
  if (cmd.count("--omega-max")) c.omega.max = f.omega_max;
  if (cmd.count("--omega-steps")) c.omega.steps = f.omega_steps;
  c.validate();
  const SweepResult r = run_sweep(c);
  Sink sink(c.output);
  write_result(r, sink.out());
  return kOk;
}

int cmd_verify(const Flags& f) {
  VerifyOptions opt;
  opt.only = f.only;
  for (const std::string& id : opt.only) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      throw UsageError(fmt::format("unknown check '{}'", id));
    }
  }
  const auto results = run_verification(opt);
  Sink sink(f.output);
  if (f.format == "json") {
    write_report_json(results, sink.out());
  } else {
    write_report_text(results, sink.out());
  }
  return all_passed(results) ? kOk : kPhysicsFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement rate and spectral density of entanglement of two output beams"};
  app.require_subcommand(1);
  Flags f;

  auto* spectrum = app.add_subcommand("spectrum", "output intensity spectrum and E over omega");
  auto* entanglement = app.add_subcommand("entanglement", "spectral density of entanglement E");
  auto* rate = app.add_subcommand("rate", "entanglement rate, peak height and width");
  auto* stab = app.add_subcommand("stability", "drift stability and boundary");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep from a JSON config");
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  auto* pair = app.add_subcommand("pair-rate", "photon pair rate");
  auto* wannier = app.add_subcommand("wannier-check", "coarse-graining kernel norm");

  for (auto* cmd : {spectrum, entanglement, rate, stab, sweep, pair}) add_model_flags(cmd, f);
  for (auto* cmd : {spectrum, entanglement, sweep}) add_omega_flags(cmd, f);
  for (auto* cmd : {spectrum, entanglement, rate, stab, sweep, verify, pair, wannier}) {
    add_output_flags(cmd, f);
  }
  for (auto* cmd : {rate, sweep, pair}) {
    cmd->add_option("--tol", f.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  }
  sweep->add_option("--config", f.config, "JSON sweep configuration")->check(CLI::ExistingFile);
  sweep->add_option("--jobs", f.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  verify->add_option("--only", f.only, "check ids to run");
  wannier->add_option("--M", f.M, "coarse-graining factor")->check(CLI::PositiveNumber);
  wannier->add_option("--l", f.l, "sub-band index")->check(CLI::NonNegativeNumber);
  wannier->add_option("--cutoff", f.cutoff, "largest |k| summed")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*spectrum) return cmd_spectrum(f);
    if (*entanglement) return cmd_entanglement(f);
    if (*rate) return cmd_rate(f);
    if (*stab) return cmd_stability(f);
    if (*sweep) return cmd_sweep(f, *sweep);
    if (*verify) return cmd_verify(f);
    if (*pair) return cmd_pair_rate(f);
    if (*wannier) return cmd_wannier(f);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPhysicsFailure;
  }
  return kUsageError;
}
