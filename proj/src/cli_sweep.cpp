#include "entrate/cli_sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/core.h>
#include <json.hpp>

#include "entrate/entanglement_rate.hpp"
#include "entrate/errors.hpp"
#include "entrate/scattering_spectra.hpp"

namespace entrate {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Character iterator that publishes how far the JSON lexer has read, so the
// parse callback can attach a line number to every key and array element.
class TrackingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* p, const char* begin, std::size_t* sink)
      : p_(p), begin_(begin), sink_(sink) {}

  reference operator*() const {
    if (sink_) *sink_ = static_cast<std::size_t>(p_ - begin_);
    return *p_;
  }
  TrackingIterator& operator++() {
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++p_;
    return old;
  }
  bool operator==(const TrackingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const TrackingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_ = nullptr;
  const char* begin_ = nullptr;
  std::size_t* sink_ = nullptr;
};

int line_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// JSON document together with the line on which each field starts, keyed by
// slash-separated path ("axes/0/steps").
struct LocatedJson {
  json doc;
  std::map<std::string, int> lines;

  int line(const std::string& path) const {
    const auto it = lines.find(path);
    return it == lines.end() ? 0 : it->second;
  }
};

LocatedJson parse_located(const std::string& text) {
  LocatedJson out;
  std::size_t pos = 0;
  struct Frame {
    bool array = false;
    std::string key;
    int index = -1;
  };
  std::vector<Frame> stack;
  auto path_with = [&](const std::string& leaf) {
    std::string p;
    for (const Frame& f : stack) {
      if (&f == &stack.back()) break;
      p += (f.array ? std::to_string(f.index) : f.key) + "/";
    }
    return p + leaf;
  };
  // A container or scalar appearing as an array element gets its own path.
  auto enter_element = [&] {
    if (!stack.empty() && stack.back().array) {
      ++stack.back().index;
      out.lines.emplace(path_with(std::to_string(stack.back().index)), line_at(text, pos));
    }
  };

  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        enter_element();
        stack.push_back({event == json::parse_event_t::array_start, {}, -1});
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        stack.pop_back();
        break;
      case json::parse_event_t::key:
        stack.back().key = parsed.get<std::string>();
        out.lines.emplace(path_with(stack.back().key), line_at(text, pos));
        break;
      case json::parse_event_t::value:
        enter_element();
        break;
    }
    return true;
  };

  const char* begin = text.data();
  try {
    out.doc = json::parse(TrackingIterator(begin, begin, &pos),
                          TrackingIterator(begin + text.size(), begin, nullptr), callback);
  } catch (const json::parse_error& e) {
    throw ConfigError("", line_at(text, e.byte == 0 ? 0 : e.byte - 1),
                      fmt::format("malformed JSON: {}", e.what()));
  }
  return out;
}

std::string join(const std::string& a, const std::string& b) {
  return a.empty() ? b : a + "/" + b;
}

class Reader {
 public:
  explicit Reader(const LocatedJson& src) : src_(src) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ConfigError(path, src_.line(path), message);
  }

  void require_object(const json& j, const std::string& path,
                      const std::vector<std::string>& allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(join(path, key), fmt::format("unknown field '{}'", key));
      }
    }
  }

  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }

  int integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

 private:
  const LocatedJson& src_;
};

double quiet_nan_unless(bool requested, double value) { return requested ? value : kNaN; }

bool wants(const SweepConfig& c, Quantity q) {
  return std::find(c.quantities.begin(), c.quantities.end(), q) != c.quantities.end();
}

std::vector<double> spaced(double lo, double hi, int steps, bool log_scale) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    v[i] = log_scale ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                     : lo + t * (hi - lo);
  }
  // Pin the end points exactly.
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::string unit_suffix(const std::string& parameter) {
  return parameter == "n_th" ? "" : "[kappa]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

const char* model_name(ModelKind m) {
  return m == ModelKind::Full ? "full" : "effective";
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::StabilityMargin: return "stability_margin";
    case Quantity::EMax: return "E_max";
    case Quantity::GammaE: return "gamma_E";
    case Quantity::Fwhm: return "fwhm";
    case Quantity::PairRate: return "pair_rate";
    case Quantity::Spectrum: return "spectrum";
  }
  return "?";
}

const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Unstable: return "unstable";
    case PointStatus::Failed: return "failed";
  }
  return "?";
}

std::optional<ModelKind> parse_model(const std::string& s) {
  if (s == "full") return ModelKind::Full;
  if (s == "effective") return ModelKind::Effective;
  return std::nullopt;
}

std::optional<Quantity> parse_quantity(const std::string& s) {
  for (Quantity q : {Quantity::StabilityMargin, Quantity::EMax, Quantity::GammaE, Quantity::Fwhm,
                     Quantity::PairRate, Quantity::Spectrum}) {
    if (s == quantity_name(q)) return q;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names{"g", "kappa", "Gamma", "Delta", "delta", "n_th"};
  return names;
}

double PointParams::get(const std::string& name) const {
  if (name == "g") return g;
  if (name == "kappa") return kappa;
  if (name == "Gamma") return Gamma;
  if (name == "Delta") return Delta;
  if (name == "delta") return delta;
  if (name == "n_th") return n_th;
  throw std::invalid_argument(fmt::format("unknown parameter '{}'", name));
}

void PointParams::set(const std::string& name, double value) {
  if (name == "g") g = value;
  else if (name == "kappa") kappa = value;
  else if (name == "Gamma") Gamma = value;
  else if (name == "Delta") Delta = value;
  else if (name == "delta") delta = value;
  else if (name == "n_th") n_th = value;
  else throw std::invalid_argument(fmt::format("unknown parameter '{}'", name));
}

std::vector<double> Axis::values() const { return spaced(min, max, steps, log_scale); }

std::vector<double> FrequencyGrid::values() const { return spaced(min, max, steps, false); }

ConfigError::ConfigError(std::string field, int line, const std::string& message,
                         const std::string& source)
    : std::runtime_error(fmt::format("{}{}{}: {}", source,
                                     line > 0 ? fmt::format(":{}", line) : std::string(),
                                     field.empty() ? std::string()
                                                   : fmt::format(": field '{}'", field),
                                     message)),
      field_(std::move(field)),
      line_(line),
      message_(message) {}

void SweepConfig::validate() const {
  if (axes.size() > 2) throw ConfigError("axes", 0, "at most two sweep axes are supported");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Axis& a = axes[i];
    const std::string path = fmt::format("axes/{}", i);
    const auto& names = parameter_names();
    if (a.name == "kappa" || std::find(names.begin(), names.end(), a.name) == names.end()) {
      throw ConfigError(path + "/name", 0,
                        fmt::format("cannot sweep '{}'; choose delta, Delta, n_th, Gamma or g",
                                    a.name));
    }
    if (model == ModelKind::Effective && (a.name == "Gamma" || a.name == "n_th")) {
      throw ConfigError(path + "/name", 0,
                        fmt::format("the effective model has no parameter '{}'", a.name));
    }
    if (a.steps < 2) throw ConfigError(path + "/steps", 0, "steps must be at least 2");
    if (!(a.min < a.max)) throw ConfigError(path + "/min", 0, "min must be below max");
    if (a.log_scale && !(a.min > 0.0)) {
      throw ConfigError(path + "/min", 0, "log-scaled axis needs min > 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (axes[j].name == a.name) throw ConfigError(path + "/name", 0, "axis repeated");
    }
  }
  if (!(tol > 0.0)) throw ConfigError("tol", 0, "tol must be positive");
  if (quantities.empty()) throw ConfigError("quantities", 0, "no quantities requested");
  if (omega.steps < 2) throw ConfigError("omega/steps", 0, "steps must be at least 2");
  if (!(omega.min < omega.max)) throw ConfigError("omega/min", 0, "min must be below max");
  if (jobs < 0) throw ConfigError("jobs", 0, "jobs must be non-negative");
  if (!(params.kappa > 0.0)) throw ConfigError("params/kappa", 0, "kappa must be positive");
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  const LocatedJson src = parse_located(json_text);
  const Reader rd(src);
  const json& doc = src.doc;
  rd.require_object(doc, "", {"model", "params", "axes", "quantities", "omega", "tol", "output",
                              "format", "jobs"});
  SweepConfig c;
  if (doc.contains("model")) {
    const auto m = parse_model(rd.string(doc["model"], "model"));
    if (!m) rd.fail("model", "model must be 'full' or 'effective'");
    c.model = *m;
  }
  if (doc.contains("params")) {
    rd.require_object(doc["params"], "params", parameter_names());
    for (const auto& [key, value] : doc["params"].items()) {
      c.params.set(key, rd.number(value, join("params", key)));
    }
  }
  if (doc.contains("axes")) {
    const json& axes = doc["axes"];
    if (!axes.is_array()) rd.fail("axes", "expected an array");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const std::string path = fmt::format("axes/{}", i);
      const json& a = axes[i];
      rd.require_object(a, path, {"name", "min", "max", "steps", "scale"});
      for (const char* key : {"name", "min", "max", "steps"}) {
        if (!a.contains(key)) rd.fail(path, fmt::format("missing field '{}'", key));
      }
      Axis axis;
      axis.name = rd.string(a["name"], path + "/name");
      axis.min = rd.number(a["min"], path + "/min");
      axis.max = rd.number(a["max"], path + "/max");
      axis.steps = rd.integer(a["steps"], path + "/steps");
      if (a.contains("scale")) {
        const std::string scale = rd.string(a["scale"], path + "/scale");
        if (scale != "linear" && scale != "log") {
          rd.fail(path + "/scale", "scale must be 'linear' or 'log'");
        }
        axis.log_scale = scale == "log";
      }
      c.axes.push_back(axis);
    }
  }
  if (doc.contains("quantities")) {
    const json& qs = doc["quantities"];
    if (!qs.is_array()) rd.fail("quantities", "expected an array");
    c.quantities.clear();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string path = fmt::format("quantities/{}", i);
      const auto q = parse_quantity(rd.string(qs[i], path));
      if (!q) {
        rd.fail(path, "expected one of stability_margin, E_max, gamma_E, fwhm, pair_rate, "
                      "spectrum");
      }
      if (std::find(c.quantities.begin(), c.quantities.end(), *q) == c.quantities.end()) {
        c.quantities.push_back(*q);
      }
    }
  }
  if (doc.contains("omega")) {
    rd.require_object(doc["omega"], "omega", {"min", "max", "steps"});
    const json& o = doc["omega"];
    if (o.contains("min")) c.omega.min = rd.number(o["min"], "omega/min");
    if (o.contains("max")) c.omega.max = rd.number(o["max"], "omega/max");
    if (o.contains("steps")) c.omega.steps = rd.integer(o["steps"], "omega/steps");
  }
  if (doc.contains("tol")) c.tol = rd.number(doc["tol"], "tol");
  if (doc.contains("output")) c.output = rd.string(doc["output"], "output");
  if (doc.contains("format")) {
    const auto f = parse_format(rd.string(doc["format"], "format"));
    if (!f) rd.fail("format", "format must be 'csv' or 'json'");
    c.format = *f;
  }
  if (doc.contains("jobs")) c.jobs = rd.integer(doc["jobs"], "jobs");

  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(e.field(), src.line(e.field()), e.message());
  }
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", 0, fmt::format("cannot open '{}'", path));
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sweep_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.field(), e.line(), e.message(), path);
  }
}

DriftMatrix build_drift(ModelKind model, const PointParams& p) {
  if (model == ModelKind::Full) {
    FullModelParams f;
    f.g = p.g;
    f.kappa = p.kappa;
    f.Gamma = p.Gamma;
    f.Delta = p.Delta;
    f.delta = p.delta;
    f.n_th = p.n_th;
    return drift_full(f);
  }
  EffectiveModelParams e;
  e.g = p.g;
  e.kappa = p.kappa;
  e.Delta = p.Delta;
  e.delta = p.delta;
  return drift_effective(e);
}

SweepRow evaluate_point(const SweepConfig& config, const PointParams& p) {
  SweepRow row;
  const bool want_rate = wants(config, Quantity::EMax) || wants(config, Quantity::GammaE) ||
                         wants(config, Quantity::Fwhm);
  row.stability_margin = kNaN;
  row.E_max = row.omega_max = row.gamma_E = row.fwhm = row.pair_rate = kNaN;
  const double n_th = config.model == ModelKind::Full ? p.n_th : 0.0;
  try {
    const DriftMatrix d = build_drift(config.model, p);
    const StabilityReport st = stability(d);
    row.stability_margin = quiet_nan_unless(wants(config, Quantity::StabilityMargin),
                                            -st.max_real_part);
    if (!st.stable) {
      row.status = PointStatus::Unstable;
      row.message = fmt::format("unstable: max eigenvalue real part {:.6g} kappa",
                                st.max_real_part);
      if (wants(config, Quantity::Spectrum)) row.spectrum.assign(config.omega.steps, kNaN);
      return row;
    }
    if (!want_rate && !wants(config, Quantity::PairRate) && !wants(config, Quantity::Spectrum)) {
      return row;
    }
    const SpectralEvaluator ev(d, n_th);
    if (want_rate) {
      const RateResult r = entanglement_rate(ev, config.tol);
      if (wants(config, Quantity::EMax)) {
        row.E_max = r.E_max;
        row.omega_max = r.omega_max;
      }
      row.gamma_E = quiet_nan_unless(wants(config, Quantity::GammaE), r.gamma_E);
      row.fwhm = quiet_nan_unless(wants(config, Quantity::Fwhm), r.fwhm);
    }
    if (wants(config, Quantity::PairRate)) row.pair_rate = pair_rate_numeric(ev, config.tol);
    if (wants(config, Quantity::Spectrum)) {
      for (double w : config.omega.values()) row.spectrum.push_back(spectral_density(ev, w));
    }
  } catch (const UnstableSystem& e) {
    row.status = PointStatus::Unstable;
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = PointStatus::Failed;
    row.message = e.what();
  }
  if (row.status != PointStatus::Ok && wants(config, Quantity::Spectrum)) {
    row.spectrum.assign(config.omega.steps, kNaN);
  }
  return row;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<std::vector<double>> axis_values;
  std::size_t total = 1;
  for (const Axis& a : config.axes) {
    axis_values.push_back(a.values());
    total *= axis_values.back().size();
  }

  // Point i maps to axis indices with the first axis varying slowest.
  auto coords_of = [&](std::size_t i) {
    std::vector<double> c(axis_values.size());
    for (std::size_t k = axis_values.size(); k-- > 0;) {
      const std::size_t n = axis_values[k].size();
      c[k] = axis_values[k][i % n];
      i /= n;
    }
    return c;
  };

  SweepResult result;
  result.config = config;
  result.rows.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const std::vector<double> c = coords_of(i);
      PointParams p = config.params;
      for (std::size_t k = 0; k < c.size(); ++k) p.set(config.axes[k].name, c[k]);
      SweepRow row = evaluate_point(config, p);
      row.coords = c;
      result.rows[i] = std::move(row);
    }
  };

  std::size_t jobs = config.jobs > 0 ? static_cast<std::size_t>(config.jobs)
                                     : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, total);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

std::vector<std::string> csv_columns(const SweepConfig& c) {
  std::vector<std::string> cols;
  for (const Axis& a : c.axes) cols.push_back(a.name + unit_suffix(a.name));
  cols.emplace_back("status");
  for (Quantity q : c.quantities) {
    switch (q) {
      case Quantity::StabilityMargin: cols.emplace_back("stability_margin[kappa]"); break;
      case Quantity::EMax:
        cols.emplace_back("E_max");
        cols.emplace_back("omega_max[kappa]");
        break;
      case Quantity::GammaE: cols.emplace_back("gamma_E[kappa]"); break;
      case Quantity::Fwhm: cols.emplace_back("fwhm[kappa]"); break;
      case Quantity::PairRate: cols.emplace_back("pair_rate[kappa]"); break;
      case Quantity::Spectrum:
        for (double w : c.omega.values()) cols.push_back("E@" + format_number(w) + "[kappa]");
        break;
    }
  }
  cols.emplace_back("message");
  return cols;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  const SweepConfig& c = result.config;
  out << "# schema=1\n";
  out << "# model=" << model_name(c.model);
  for (const std::string& name : parameter_names()) {
    out << ' ' << name << '=' << format_number(c.params.get(name));
  }
  out << " tol=" << format_number(c.tol) << '\n';
  const auto cols = csv_columns(c);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const SweepRow& row : result.rows) {
    std::vector<std::string> f;
    for (double x : row.coords) f.push_back(format_number(x));
    f.emplace_back(status_name(row.status));
    for (Quantity q : c.quantities) {
      switch (q) {
        case Quantity::StabilityMargin: f.push_back(format_number(row.stability_margin)); break;
        case Quantity::EMax:
          f.push_back(format_number(row.E_max));
          f.push_back(format_number(row.omega_max));
          break;
        case Quantity::GammaE: f.push_back(format_number(row.gamma_E)); break;
        case Quantity::Fwhm: f.push_back(format_number(row.fwhm)); break;
        case Quantity::PairRate: f.push_back(format_number(row.pair_rate)); break;
        case Quantity::Spectrum:
          for (double e : row.spectrum) f.push_back(format_number(e));
          break;
      }
    }
    f.push_back(csv_field(row.message));
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  const SweepConfig& c = result.config;
  json doc;
  doc["schema"] = 1;
  doc["model"] = model_name(c.model);
  for (const std::string& name : parameter_names()) doc["params"][name] = c.params.get(name);
  doc["tol"] = c.tol;
  doc["axes"] = json::array();
  for (const Axis& a : c.axes) {
    doc["axes"].push_back({{"name", a.name},
                           {"min", a.min},
                           {"max", a.max},
                           {"steps", a.steps},
                           {"scale", a.log_scale ? "log" : "linear"}});
  }
  doc["quantities"] = json::array();
  for (Quantity q : c.quantities) doc["quantities"].push_back(quantity_name(q));
  if (wants(c, Quantity::Spectrum)) doc["omega"] = c.omega.values();
  doc["rows"] = json::array();
  for (const SweepRow& row : result.rows) {
    json r;
    for (std::size_t k = 0; k < row.coords.size(); ++k) r[c.axes[k].name] = row.coords[k];
    r["status"] = status_name(row.status);
    for (Quantity q : c.quantities) {
      switch (q) {
        case Quantity::StabilityMargin: r["stability_margin"] = number_or_null(row.stability_margin); break;
        case Quantity::EMax:
          r["E_max"] = number_or_null(row.E_max);
          r["omega_max"] = number_or_null(row.omega_max);
          break;
        case Quantity::GammaE: r["gamma_E"] = number_or_null(row.gamma_E); break;
        case Quantity::Fwhm: r["fwhm"] = number_or_null(row.fwhm); break;
        case Quantity::PairRate: r["pair_rate"] = number_or_null(row.pair_rate); break;
        case Quantity::Spectrum: {
          json e = json::array();
          for (double x : row.spectrum) e.push_back(number_or_null(x));
          r["E"] = e;
          break;
        }
      }
    }
    if (!row.message.empty()) r["message"] = row.message;
    doc["rows"].push_back(r);
  }
  out << doc.dump(2) << '\n';
}

void write_result(const SweepResult& result, std::ostream& out) {
  if (result.config.format == OutputFormat::Json) {
    write_json(result, out);
  } else {
    write_csv(result, out);
  }
}

SpectrumTable spectrum_table(ModelKind model, const PointParams& p, const FrequencyGrid& grid) {
  const SpectralEvaluator ev(build_drift(model, p), model == ModelKind::Full ? p.n_th : 0.0);
  SpectrumTable t;
  for (double w : grid.values()) {
    const SpectrumPoint s = ev.spectrum(w);
    t.omega.push_back(w);
    t.total.push_back(s.total);
    t.optical.push_back(s.optical_part);
    t.mechanical.push_back(s.mechanical_part);
    t.E.push_back(spectral_density(ev, w));
  }
  return t;
}

void write_spectrum_csv(const SpectrumTable& t, std::ostream& out) {
  out << "# schema=1\n";
  out << "omega[kappa],total,optical,mechanical,E\n";
  for (std::size_t i = 0; i < t.omega.size(); ++i) {
    out << format_number(t.omega[i]) << ',' << format_number(t.total[i]) << ','
        << format_number(t.optical[i]) << ',' << format_number(t.mechanical[i]) << ','
        << format_number(t.E[i]) << '\n';
  }
}

void write_spectrum_json(const SpectrumTable& t, std::ostream& out) {
  json doc;
  doc["schema"] = 1;
  doc["omega"] = t.omega;
  doc["total"] = t.total;
  doc["optical"] = t.optical;
  doc["mechanical"] = t.mechanical;
  doc["E"] = t.E;
  out << doc.dump(2) << '\n';
}

}  // namespace entrate
