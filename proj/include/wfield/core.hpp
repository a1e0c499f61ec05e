#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace wfield {

enum class SystemKind {
  HoField,       ///< 2D oscillator in a perpendicular field
  FreeField,     ///< free particle in a perpendicular field (omega0 = 0)
  GqwBallistic,  ///< particle above a floor in uniform gravity, no field
  GqwField,      ///< gravitational well plus perpendicular field
};

std::string_view to_string(SystemKind kind);

/// A point (x, y, p_x, p_y) of the 2-mode phase space.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;

  PhasePoint& operator+=(const PhasePoint& o) {
    x += o.x;
    y += o.y;
    px += o.px;
    py += o.py;
    return *this;
  }
  PhasePoint& operator-=(const PhasePoint& o) {
    x -= o.x;
    y -= o.y;
    px -= o.px;
    py -= o.py;
    return *this;
  }
  PhasePoint& operator*=(double s) {
    x *= s;
    y *= s;
    px *= s;
    py *= s;
    return *this;
  }
  friend PhasePoint operator+(PhasePoint a, const PhasePoint& b) { return a += b; }
  friend PhasePoint operator-(PhasePoint a, const PhasePoint& b) { return a -= b; }
  friend PhasePoint operator*(PhasePoint a, double s) { return a *= s; }
  friend PhasePoint operator*(double s, PhasePoint a) { return a *= s; }

  std::array<double, 4> to_array() const { return {x, y, px, py}; }
  static PhasePoint from_array(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }
};

double squared_norm(const PhasePoint& p);
double max_abs(const PhasePoint& p);
bool is_finite(const PhasePoint& p);

/// Raw physical inputs. Converted into a validated SystemParams before use.
struct SystemSpec {
  SystemKind kind = SystemKind::HoField;
  double mass = 1.0;
  double hbar = 1.0;
  double charge = 1.0;
  double field = 0.0;              ///< B0
  double natural_frequency = 0.0;  ///< omega0
  double gravity = 0.0;            ///< g
};

/// Validated, immutable system parameters.
///
/// Requires m > 0, hbar > 0, B0 >= 0, q >= 0, omega0 >= 0, g >= 0, all finite.
/// omega0 must vanish for every kind except HoField, g must vanish for
/// HoField and FreeField, and GqwBallistic carries no field.
class SystemParams {
 public:
  explicit SystemParams(const SystemSpec& spec);

  SystemKind kind() const { return spec_.kind; }
  double mass() const { return spec_.mass; }
  double hbar() const { return spec_.hbar; }
  double charge() const { return spec_.charge; }
  double field() const { return spec_.field; }
  double natural_frequency() const { return spec_.natural_frequency; }
  double gravity() const { return spec_.gravity; }
  const SystemSpec& spec() const { return spec_; }

  /// Same system with a different B0 (revalidated).
  SystemParams with_field(double field) const;

 private:
  SystemSpec spec_;
};

/// Quantities derived from SystemParams. Never stored alongside the params.
struct Frequencies {
  double coupling;    ///< omega = q B0 / (2 m)
  double lambda;      ///< lambda^2 = (m/2)(omega^2 + omega0^2)
  double kappa;       ///< kappa^2 = 1/(2m)
  double oscillator;  ///< Omega = 2 lambda kappa = sqrt(omega^2 + omega0^2)
};

Frequencies derive_frequencies(const SystemParams& params);

/// Weyl symbol of the Hamiltonian,
///   H = lambda^2 r^2 + kappa^2 p^2 + omega (p_x y - p_y x) + m g y.
/// The cross term fixes eps_12 = +1; every flow and stationary state in the
/// library uses the same sign.
double hamiltonian_value(const SystemParams& params, const PhasePoint& pt);

/// Uniform sampling of [t_start, t_end] with both ends included.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, int n_samples);

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  int size() const { return n_samples_; }
  double at(int i) const;
  std::vector<double> samples() const;

 private:
  double t_start_;
  double t_end_;
  int n_samples_;
};

}  // namespace wfield
