#include "wfield/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "wfield/dynamics.hpp"
#include "wfield/errors.hpp"
#include "wfield/ncmap.hpp"
#include "wfield/wigner.hpp"

namespace wfield::cli {

ConfigError::ConfigError(Code code, const std::string& message)
    : std::runtime_error(std::string(code == Code::Parse ? "E_PARSE" : "E_RANGE") + ": " + message), code_(code) {}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Fidelity:
      return "fidelity";
    case Command::Entropy:
      return "entropy";
    case Command::Trajectory:
      return "trajectory";
    case Command::Spectrum:
      return "spectrum";
    case Command::NcMap:
      return "ncmap";
  }
  return "unknown";
}

namespace {

std::string_view system_flag(SystemKind kind) {
  switch (kind) {
    case SystemKind::HoField:
      return "ho";
    case SystemKind::FreeField:
      return "free";
    case SystemKind::GqwBallistic:
      return "gqw";
    case SystemKind::GqwField:
      return "gqw-b";
  }
  return "?";
}

bool is_well(SystemKind kind) { return kind == SystemKind::GqwBallistic || kind == SystemKind::GqwField; }

[[noreturn]] void parse_error(std::string_view origin, std::string_view key, const std::string& what) {
  throw ConfigError(ConfigError::Code::Parse, std::string(origin) + ": " + std::string(key) + ": " + what);
}

[[noreturn]] void range_error(std::string_view origin, std::string_view key, const std::string& what) {
  throw ConfigError(ConfigError::Code::Range, std::string(origin) + ": " + std::string(key) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::string_view origin, std::string_view key) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error(origin, key, "not a number: '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) range_error(origin, key, "value must be finite");
  return value;
}

int parse_int(std::string_view text, std::string_view origin, std::string_view key) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error(origin, key, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view origin, std::string_view key) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) range_error(origin, key, "list must not be empty");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_double(piece, origin, key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_number(values[i]);
  }
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view, std::string_view, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = [] {
    std::vector<std::pair<std::string, Setter>> t;
    auto number = [](double RunConfig::*member) {
      return [member](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
        c.*member = parse_double(v, o, k);
      };
    };
    auto point = [](double PhasePoint::*member) {
      return [member](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
        c.initial.*member = parse_double(v, o, k);
      };
    };
    auto integer = [](int RunConfig::*member) {
      return [member](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
        c.*member = parse_int(v, o, k);
      };
    };
    auto nc_list = [](std::vector<double> RunConfig::*member, bool marks_explicit) {
      return [member, marks_explicit](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
        c.*member = parse_list(v, o, k);
        if (marks_explicit) c.nc_explicit = true;
      };
    };
    t.emplace_back("system", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      const auto s = trim(v);
      if (s == "ho") {
        c.system = SystemKind::HoField;
      } else if (s == "free") {
        c.system = SystemKind::FreeField;
      } else if (s == "gqw") {
        c.system = SystemKind::GqwBallistic;
      } else if (s == "gqw-b") {
        c.system = SystemKind::GqwField;
      } else {
        parse_error(o, k, "expected ho|free|gqw|gqw-b, got '" + std::string(s) + "'");
      }
      c.system_explicit = true;
    });
    t.emplace_back("b0", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      c.fields = parse_list(v, o, k);
    });
    t.emplace_back("omega0", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      c.omega0 = parse_double(v, o, k);
    });
    t.emplace_back("mass", number(&RunConfig::mass));
    t.emplace_back("hbar", number(&RunConfig::hbar));
    t.emplace_back("charge", number(&RunConfig::charge));
    t.emplace_back("gravity", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      c.gravity = parse_double(v, o, k);
    });
    t.emplace_back("x0", point(&PhasePoint::x));
    t.emplace_back("y0", point(&PhasePoint::y));
    t.emplace_back("px0", point(&PhasePoint::px));
    t.emplace_back("py0", point(&PhasePoint::py));
    t.emplace_back("t-start", number(&RunConfig::t_start));
    t.emplace_back("t-end", number(&RunConfig::t_end));
    t.emplace_back("t-steps", integer(&RunConfig::t_steps));
    t.emplace_back("quad-order", integer(&RunConfig::quad_order));
    t.emplace_back("box-half-width", number(&RunConfig::box_half_width));
    t.emplace_back("box-nodes", integer(&RunConfig::box_nodes));
    t.emplace_back("entropy-convention",
                   [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
                     const auto s = trim(v);
                     if (s == "raw") {
                       c.entropy_convention = EntropyConvention::RawBox;
                     } else if (s == "normalized") {
                       c.entropy_convention = EntropyConvention::NormalizedBox;
                     } else {
                       parse_error(o, k, "expected raw|normalized");
                     }
                   });
    t.emplace_back("fidelity-form", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      const auto s = trim(v);
      if (s == "consistent") {
        c.fidelity_form = FidelityForm::Consistent;
      } else if (s == "paper") {
        c.fidelity_form = FidelityForm::Paper;
      } else {
        parse_error(o, k, "expected consistent|paper");
      }
    });
    t.emplace_back("format", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      const auto s = trim(v);
      if (s == "csv") {
        c.format = OutputFormat::Csv;
      } else if (s == "json") {
        c.format = OutputFormat::Json;
      } else {
        parse_error(o, k, "expected csv|json");
      }
    });
    t.emplace_back("out", [](RunConfig& c, std::string_view v, std::string_view o, std::string_view k) {
      const auto s = trim(v);
      if (s.empty()) range_error(o, k, "output path must not be empty");
      c.out = std::string(s);
    });
    t.emplace_back("theta", nc_list(&RunConfig::theta, true));
    t.emplace_back("eta", nc_list(&RunConfig::eta, true));
    t.emplace_back("mu", nc_list(&RunConfig::mu, false));
    t.emplace_back("nu", nc_list(&RunConfig::nu, false));
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, setter] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, std::string_view origin) {
  for (const auto& [name, setter] : setters()) {
    if (name == key) {
      setter(cfg, value, origin, key);
      return;
    }
  }
  parse_error(origin, key, "unknown key");
}

double RunConfig::omega0_for(SystemKind kind) const {
  if (omega0) return *omega0;
  return kind == SystemKind::HoField ? 1.0 : 0.0;
}

double RunConfig::gravity_for(SystemKind kind) const {
  if (gravity) return *gravity;
  return is_well(kind) ? 2.0 : 0.0;
}

SystemParams RunConfig::system_params(double field) const { return system_params(system, field); }

SystemParams RunConfig::system_params(SystemKind kind, double field) const {
  if (is_well(kind)) kind = field > 0.0 ? SystemKind::GqwField : SystemKind::GqwBallistic;
  return SystemParams(SystemSpec{kind, mass, hbar, charge, field, omega0_for(kind), gravity_for(kind)});
}

TimeGrid RunConfig::time_grid() const { return TimeGrid(t_start, t_end, t_steps); }

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  return {
      {"command", std::string(to_string(command))},
      {"system", std::string(system_flag(system))},
      {"b0", join(fields)},
      {"omega0", format_number(omega0_for(system))},
      {"mass", format_number(mass)},
      {"hbar", format_number(hbar)},
      {"charge", format_number(charge)},
      {"gravity", format_number(gravity_for(system))},
      {"x0", format_number(initial.x)},
      {"y0", format_number(initial.y)},
      {"px0", format_number(initial.px)},
      {"py0", format_number(initial.py)},
      {"t-start", format_number(t_start)},
      {"t-end", format_number(t_end)},
      {"t-steps", std::to_string(t_steps)},
      {"quad-order", std::to_string(quad_order)},
      {"box-half-width", format_number(box_half_width)},
      {"box-nodes", std::to_string(box_nodes)},
      {"entropy-convention", std::string(to_string(entropy_convention))},
      {"fidelity-form", std::string(to_string(fidelity_form))},
      {"format", format == OutputFormat::Csv ? "csv" : "json"},
      {"out", out},
      {"theta", join(theta)},
      {"eta", join(eta)},
      {"mu", join(mu)},
      {"nu", join(nu)},
      {"nc-mapped-fields", nc_explicit ? "yes" : "no"},
  };
}

void validate(const RunConfig& cfg) {
  const std::string_view origin = "config";
  if (!(cfg.mass > 0.0)) range_error(origin, "mass", "must be positive");
  if (!(cfg.hbar > 0.0)) range_error(origin, "hbar", "must be positive");
  if (cfg.charge < 0.0) range_error(origin, "charge", "must be non-negative");
  if (cfg.fields.empty()) range_error(origin, "b0", "list must not be empty");
  for (double b : cfg.fields) {
    if (b < 0.0) range_error(origin, "b0", "field values must be non-negative");
  }
  if (cfg.omega0 && *cfg.omega0 < 0.0) range_error(origin, "omega0", "must be non-negative");
  if (cfg.omega0 && *cfg.omega0 != 0.0 && cfg.system != SystemKind::HoField) {
    range_error(origin, "omega0", "only the oscillator (ho) has a natural frequency");
  }
  if (cfg.gravity && *cfg.gravity < 0.0) range_error(origin, "gravity", "must be non-negative");
  if (cfg.gravity && *cfg.gravity != 0.0 && !is_well(cfg.system)) {
    range_error(origin, "gravity", "gravity only applies to gqw and gqw-b");
  }
  if (!(cfg.t_end > cfg.t_start)) range_error(origin, "t-end", "must exceed t-start");
  if (cfg.t_steps < 2) range_error(origin, "t-steps", "need at least 2 samples");
  if (cfg.quad_order < 1 || cfg.quad_order > 256) range_error(origin, "quad-order", "must be in [1, 256]");
  if (!(cfg.box_half_width > 0.0)) range_error(origin, "box-half-width", "must be positive");
  if (cfg.box_nodes < 1) range_error(origin, "box-nodes", "must be >= 1");
  for (double v : cfg.theta) {
    if (v < 0.0) range_error(origin, "theta", "must be non-negative");
  }
  for (double v : cfg.eta) {
    if (v < 0.0) range_error(origin, "eta", "must be non-negative");
  }
  for (double v : cfg.mu) {
    if (!(v > 0.0)) range_error(origin, "mu", "must be positive");
  }
  for (double v : cfg.nu) {
    if (!(v > 0.0)) range_error(origin, "nu", "must be positive");
  }
  try {
    for (double b : cfg.fields) (void)cfg.system_params(b);
  } catch (const std::invalid_argument& e) {
    range_error(origin, "system", e.what());
  }
}

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
  RunConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(where, line, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    apply_setting(cfg, key, value, where);
  }
  validate(cfg);
  return cfg;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Wigner-function fidelity and entropy experiments"};
  std::string command;
  app.add_option("command", command, "fidelity | entropy | trajectory | spectrum | ncmap")->required();
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override it");
  std::map<std::string, std::string> values;
  for (const auto& key : setting_keys()) {
    values[key];
    app.add_option("--" + key, values[key]);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(ConfigError::Code::Parse, e.what());
  }

  RunConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError(ConfigError::Code::Parse, "cannot read config file '" + config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = parse_config_text(buffer.str(), config_path);
  }
  for (const auto& key : setting_keys()) {
    if (app.count("--" + key) > 0) apply_setting(cfg, key, values[key], "--" + key);
  }

  static const std::map<std::string, Command> commands{{"fidelity", Command::Fidelity},
                                                       {"entropy", Command::Entropy},
                                                       {"trajectory", Command::Trajectory},
                                                       {"spectrum", Command::Spectrum},
                                                       {"ncmap", Command::NcMap}};
  const auto it = commands.find(command);
  if (it == commands.end()) throw ConfigError(ConfigError::Code::Parse, "unknown command '" + command + "'");
  cfg.command = it->second;
  validate(cfg);
  return cfg;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

constexpr std::string_view kEpsilonConvention = "eps_12 = +1; cross term omega*(p_x*y - p_y*x)";

void add_common_meta(Table& table, const RunConfig& cfg) {
  for (auto& kv : cfg.resolved()) table.meta.push_back(std::move(kv));
  table.meta.emplace_back("epsilon-convention", std::string(kEpsilonConvention));
  table.meta.emplace_back("time-variable", "tau");
}

struct FieldCase {
  double field;
  PhasePoint initial;
  std::string label;  ///< empty unless the field came from the noncommutative map
};

std::vector<NCParams> nc_combinations(const RunConfig& cfg) {
  std::vector<NCParams> out;
  for (double th : cfg.theta) {
    for (double et : cfg.eta) {
      for (double m : cfg.mu) {
        for (double n : cfg.nu) out.push_back({th, et, m, n});
      }
    }
  }
  return out;
}

std::vector<FieldCase> field_cases(const RunConfig& cfg) {
  std::vector<FieldCase> cases;
  if (!cfg.nc_explicit) {
    for (double b : cfg.fields) cases.push_back({b, cfg.initial, {}});
    return cases;
  }
  for (const NCParams& nc : nc_combinations(cfg)) {
    std::ostringstream label;
    label << "theta=" << format_number(nc.theta) << " eta=" << format_number(nc.eta)
          << " mu=" << format_number(nc.mu) << " nu=" << format_number(nc.nu);
    const SystemParams base = cfg.system_params(0.0);
    switch (cfg.system) {
      case SystemKind::HoField:
        cases.push_back({effective_b0_ho(nc, base), cfg.initial, label.str()});
        break;
      case SystemKind::FreeField:
        cases.push_back({effective_b0_free(nc, base), cfg.initial, label.str()});
        break;
      case SystemKind::GqwBallistic:
      case SystemKind::GqwField: {
        const GqwNcMap map = gqw_nc_map(nc, base);
        cases.push_back({map.field, map.shift.apply(cfg.initial), label.str()});
        break;
      }
    }
  }
  return cases;
}

Cell maybe(double v) { return std::isnan(v) ? Cell{} : Cell{v}; }

template <class Fn>
auto with_context(const std::string& context, Fn&& fn) {
  try {
    return fn();
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " [" + context + "]");
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) + " [" + context + "]");
  }
}

}  // namespace

Table run_fidelity(const RunConfig& cfg) {
  Table table;
  add_common_meta(table, cfg);
  table.meta.emplace_back("fidelity-closed", "exp(-|c_t - c_0|^2 / 2) for unit-width Gaussians");
  table.meta.emplace_back("fidelity-paper", "printed omega0 = 1 formula, x -> x0, y -> y0 (ho only)");
  table.columns = {"system", "B0", "nc", "tau", "F_closed", "F_quad", "F_paper", "abs_diff"};
  const auto times = cfg.time_grid().samples();
  for (const FieldCase& c : field_cases(cfg)) {
    const SystemParams params = cfg.system_params(c.field);
    for (double t : times) {
      const std::string context = "B0=" + format_number(c.field) + " tau=" + format_number(t);
      const FidelityCurve curve = with_context(context, [&] {
        const double one[1] = {t};
        return fidelity_curve(params, c.initial, one, cfg.quad_order, cfg.fidelity_form);
      });
      const FidelitySample& s = curve.samples.front();
      table.rows.push_back({std::string(to_string(params.kind())), c.field, c.label, s.t, s.closed, s.quadrature,
                            maybe(s.paper), s.abs_diff});
    }
  }
  return table;
}

Table run_trajectory(const RunConfig& cfg) {
  Table table;
  add_common_meta(table, cfg);
  table.columns = {"system", "B0", "nc", "tau", "x", "y", "px", "py", "H"};
  const auto times = cfg.time_grid().samples();
  for (const FieldCase& c : field_cases(cfg)) {
    const SystemParams params = cfg.system_params(c.field);
    const TrajectorySolution sol{params, c.initial};
    for (double t : times) {
      const PhasePoint p = with_context("B0=" + format_number(c.field), [&] { return evolve(sol, t); });
      const double energy = hamiltonian_value(params, p);
      if (!is_finite(p) || !std::isfinite(energy)) {
        throw NumericalError("trajectory overflow [B0=" + format_number(c.field) + " tau=" + format_number(t) + "]");
      }
      table.rows.push_back({std::string(to_string(params.kind())), c.field, c.label, t, p.x, p.y, p.px, p.py, energy});
    }
  }
  return table;
}

Table run_entropy(const RunConfig& cfg) {
  Table table;
  add_common_meta(table, cfg);
  const QuadratureScheme box = default_entropy_box(cfg.box_half_width, cfg.box_nodes);
  table.meta.emplace_back("entropy-scheme", box.describe());
  table.meta.emplace_back("entropy-states", "ho: n1 = n2 = 0 printed prefactor; free: Landau n = 0 with N = 1");
  table.meta.emplace_back("entropy-limit", "free at B0 = 0 reported as its raw-box limit 0 (limit = 1)");
  table.columns = {"system", "B0", "convention", "entropy", "box_mass", "limit"};

  std::vector<SystemKind> systems;
  if (cfg.system_explicit) {
    if (is_well(cfg.system)) {
      throw ConfigError(ConfigError::Code::Range, "entropy supports --system ho or free");
    }
    systems.push_back(cfg.system);
  } else {
    systems = {SystemKind::HoField, SystemKind::FreeField};
  }
  for (SystemKind kind : systems) {
    const SystemParams base = cfg.system_params(kind, 0.0);
    const auto points = with_context(std::string(to_string(kind)), [&] {
      return entropy_vs_field(base, cfg.fields, box, cfg.entropy_convention);
    });
    for (const auto& p : points) {
      table.rows.push_back({std::string(to_string(kind)), p.field, std::string(to_string(cfg.entropy_convention)),
                            p.entropy, p.box_mass, static_cast<long long>(p.analytic_limit)});
    }
  }
  return table;
}

Table run_spectrum(const RunConfig& cfg) {
  Table table;
  add_common_meta(table, cfg);
  table.columns = {"system", "B0", "n1", "n2", "energy"};
  constexpr int kMaxLevel = 5;
  constexpr int kMaxWellLevel = 10;
  switch (cfg.system) {
    case SystemKind::HoField:
      table.meta.emplace_back("spectrum", "E = hbar [Omega (n1 + n2 + 1) + omega (n1 - n2)]");
      for (double b : cfg.fields) {
        const SystemParams params = cfg.system_params(b);
        for (int n1 = 0; n1 <= kMaxLevel; ++n1) {
          for (int n2 = 0; n2 <= kMaxLevel; ++n2) {
            table.rows.push_back({"ho_field", b, static_cast<long long>(n1), static_cast<long long>(n2),
                                  ho_energy(n1, n2, params)});
          }
        }
      }
      break;
    case SystemKind::FreeField:
      table.meta.emplace_back("spectrum", "E_n = hbar omega (2n + 1); B0 = 0 rows omitted");
      for (double b : cfg.fields) {
        if (!(b > 0.0) || cfg.charge == 0.0) continue;
        const SystemParams params = cfg.system_params(b);
        for (int n = 0; n <= kMaxLevel; ++n) {
          table.rows.push_back({"free_field", b, static_cast<long long>(n), Cell{}, landau_energy(n, params)});
        }
      }
      break;
    case SystemKind::GqwBallistic:
    case SystemKind::GqwField: {
      table.meta.emplace_back("spectrum", "E_n = -(m g^2 hbar^2 / 2)^(1/3) a_n, field independent");
      const SystemParams params = cfg.system_params(0.0);
      for (int n = 1; n <= kMaxWellLevel; ++n) {
        table.rows.push_back({"gqw", Cell{}, static_cast<long long>(n), Cell{}, gqw_energy(n, params)});
      }
      break;
    }
  }
  return table;
}

Table run_ncmap(const RunConfig& cfg) {
  Table table;
  add_common_meta(table, cfg);
  table.columns = {"theta", "eta",      "mu",       "nu", "B0_ho", "B0_free", "B0_gqw",
                   "r1_scale", "r1_shear", "s", "sigma_invertible"};
  const SystemParams ho = cfg.system_params(SystemKind::HoField, 0.0);
  const SystemParams free = cfg.system_params(SystemKind::FreeField, 0.0);
  for (const NCParams& nc : nc_combinations(cfg)) {
    const auto row = with_context("ncmap", [&] {
      const GqwNcMap map = gqw_nc_map(nc, free);
      return std::vector<Cell>{nc.theta,
                               nc.eta,
                               nc.mu,
                               nc.nu,
                               effective_b0_ho(nc, ho),
                               effective_b0_free(nc, free),
                               map.field,
                               map.shift.scale,
                               map.shift.shear,
                               auxiliary_s(nc.mu, nc.nu),
                               static_cast<long long>(sigma_invertible(nc, cfg.hbar))};
    });
    table.rows.push_back(row);
  }
  return table;
}

Table run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Fidelity:
      return run_fidelity(cfg);
    case Command::Entropy:
      return run_entropy(cfg);
    case Command::Trajectory:
      return run_trajectory(cfg);
    case Command::Spectrum:
      return run_spectrum(cfg);
    case Command::NcMap:
      return run_ncmap(cfg);
  }
  throw std::logic_error("unknown command");
}

namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::stod(format_number(v));
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (const auto& [key, value] : table.meta) out += "# " + key + " = " + value + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i];
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string text = cell_text(row[i]);
      if (text.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        text = quoted + "\"";
      }
      out += (i ? "," : "") + text;
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["config"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.meta) doc["config"].push_back({{"key", key}, {"value", value}});
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(args);
    const std::string text = render(run(cfg), cfg.format);
    if (cfg.out == "-") {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "E_PARSE: cannot open output '" << cfg.out << "'\n";
        return kExitConfig;
      }
      file << text;
    }
    return kExitOk;
  } catch (const CLI::Success&) {
    CLI::App help{"Wigner-function fidelity and entropy experiments"};
    out << "usage: wfield <fidelity|entropy|trajectory|spectrum|ncmap> [--config FILE] [--KEY VALUE]...\n"
        << "keys:";
    for (const auto& key : setting_keys()) out << " --" << key;
    out << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "E_RANGE: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wfield::cli
