#pragma once

// Parameter sweeps over one or two model parameters, driven by a JSON
// configuration, with deterministic CSV or JSON output.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrate/langevin_models.hpp"

namespace entrate {

enum class ModelKind { Full, Effective };
enum class Quantity { StabilityMargin, EMax, GammaE, Fwhm, PairRate, Spectrum };
enum class OutputFormat { Csv, Json };
enum class PointStatus { Ok, Unstable, Failed };

const char* model_name(ModelKind m);
const char* quantity_name(Quantity q);
const char* status_name(PointStatus s);
std::optional<ModelKind> parse_model(const std::string& s);
std::optional<Quantity> parse_quantity(const std::string& s);
std::optional<OutputFormat> parse_format(const std::string& s);

/// Model parameters shared by both models, in units of kappa. The effective
/// model ignores Gamma and n_th.
struct PointParams {
  double g = 5.0;
  double kappa = 1.0;
  double Gamma = 1e-3;
  double Delta = 0.0;
  double delta = 0.0;
  double n_th = 0.0;

  double get(const std::string& name) const;
  void set(const std::string& name, double value);
};

/// Names accepted for sweep axes and parameter overrides.
const std::vector<std::string>& parameter_names();

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
  bool log_scale = false;

  std::vector<double> values() const;
};

struct FrequencyGrid {
  double min = -20.0;
  double max = 20.0;
  int steps = 401;

  std::vector<double> values() const;
};

struct SweepConfig {
  ModelKind model = ModelKind::Full;
  PointParams params;
  std::vector<Axis> axes;
  std::vector<Quantity> quantities{Quantity::StabilityMargin};
  FrequencyGrid omega;  // sampling grid for the spectrum quantity
  double tol = 1e-6;
  std::string output;  // empty means standard output
  OutputFormat format = OutputFormat::Csv;
  int jobs = 0;        // 0 selects the number of hardware threads

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Configuration problem. `line` is 0 when the error does not come from a
/// file position.
class ConfigError : public std::runtime_error {
 public:
  /// `source` names the document in the message (a file path, or "config").
  ConfigError(std::string field, int line, const std::string& message,
              const std::string& source = "config");
  const std::string& field() const { return field_; }
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string field_;
  int line_;
  std::string message_;
};

SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

DriftMatrix build_drift(ModelKind model, const PointParams& p);

struct SweepRow {
  std::vector<double> coords;  // one per axis
  PointStatus status = PointStatus::Ok;
  std::string message;
  // Requested scalar quantities, NaN when not available.
  double stability_margin = 0.0;
  double E_max = 0.0;
  double omega_max = 0.0;
  double gamma_E = 0.0;
  double fwhm = 0.0;
  double pair_rate = 0.0;
  std::vector<double> spectrum;  // E at each frequency of config.omega
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;  // first axis varies slowest
};

/// Evaluates one grid point. Never throws for physics failures; they are
/// recorded in the row status.
SweepRow evaluate_point(const SweepConfig& config, const PointParams& p);

/// Evaluates every grid point on `config.jobs` worker threads. Row order is
/// fixed by the grid regardless of the number of workers.
SweepResult run_sweep(const SweepConfig& config);

void write_csv(const SweepResult& result, std::ostream& out);
/// CSV column headers in output order.
std::vector<std::string> csv_columns(const SweepConfig& config);
void write_json(const SweepResult& result, std::ostream& out);
void write_result(const SweepResult& result, std::ostream& out);

/// Output intensity split and entanglement density over a frequency grid.
struct SpectrumTable {
  std::vector<double> omega;
  std::vector<double> total;
  std::vector<double> optical;
  std::vector<double> mechanical;
  std::vector<double> E;
};

/// Throws UnstableSystem for unstable parameters.
SpectrumTable spectrum_table(ModelKind model, const PointParams& p, const FrequencyGrid& grid);
void write_spectrum_csv(const SpectrumTable& t, std::ostream& out);
void write_spectrum_json(const SpectrumTable& t, std::ostream& out);

/// Fixed formatting with 17 significant digits, so doubles round-trip.
std::string format_number(double x);

}  // namespace entrate
