#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wfield/core.hpp"
#include "wfield/measures.hpp"

namespace wfield::cli {

/// Configuration problems. Parse covers malformed input (bad number, unknown
/// key, missing '='); Range covers well-formed but invalid values.
class ConfigError : public std::runtime_error {
 public:
  enum class Code { Parse, Range };

  ConfigError(Code code, const std::string& message);

  Code code() const { return code_; }
  std::string_view code_name() const { return code_ == Code::Parse ? "E_PARSE" : "E_RANGE"; }

 private:
  Code code_;
};

enum class Command { Fidelity, Entropy, Trajectory, Spectrum, NcMap };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command command);

struct RunConfig {
  Command command = Command::Fidelity;
  SystemKind system = SystemKind::HoField;
  bool system_explicit = false;

  double mass = 1.0;
  double hbar = 1.0;
  double charge = 1.0;
  std::optional<double> omega0;   ///< unset: 1 for ho, 0 otherwise
  std::optional<double> gravity;  ///< unset: 2 for the wells, 0 otherwise

  std::vector<double> fields{0.0, 0.1, 0.5, 1.0};
  PhasePoint initial{1.0, 1.0, 1.0, 1.0};

  double t_start = 0.0;
  double t_end = 20.0;
  int t_steps = 201;

  int quad_order = 32;
  double box_half_width = 8.0;
  int box_nodes = 81;

  EntropyConvention entropy_convention = EntropyConvention::RawBox;
  FidelityForm fidelity_form = FidelityForm::Consistent;
  OutputFormat format = OutputFormat::Csv;
  std::string out = "-";

  std::vector<double> theta{0.1};
  std::vector<double> eta{0.2};
  std::vector<double> mu{1.0};
  std::vector<double> nu{1.0};
  bool nc_explicit = false;  ///< theta or eta given: fields come from the map

  double omega0_for(SystemKind kind) const;
  double gravity_for(SystemKind kind) const;

  /// Parameters for one field value. The two well kinds resolve per field:
  /// B0 = 0 gives the ballistic well, B0 > 0 the well in a field.
  SystemParams system_params(double field) const;
  SystemParams system_params(SystemKind kind, double field) const;
  TimeGrid time_grid() const;

  /// Every setting as (key, value), in flag order.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Keys accepted in config files and as --flags.
const std::vector<std::string>& setting_keys();

/// Applies one key = value setting. `origin` ends up in error messages.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, std::string_view origin);

/// Checks cross-field constraints; throws ConfigError(Range).
void validate(const RunConfig& cfg);

/// Flat `key = value` text, '#' comments. Empty text gives the defaults.
RunConfig parse_config_text(std::string_view text, std::string_view origin = "config");

/// Command line without the program name: `<command> [--flag value]...`.
/// Precedence: flags over --config file over defaults.
RunConfig parse_args(const std::vector<std::string>& args);

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 12 significant digits; NaN and infinities spelled nan / inf / -inf.
std::string format_number(double value);

Table run_fidelity(const RunConfig& cfg);
Table run_entropy(const RunConfig& cfg);
Table run_trajectory(const RunConfig& cfg);
Table run_spectrum(const RunConfig& cfg);
Table run_ncmap(const RunConfig& cfg);
Table run(const RunConfig& cfg);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Full tool: parse, run, write. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfield::cli
