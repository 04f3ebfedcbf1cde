#pragma once

// Thermodynamic quantities of the film: thermal correction Delta F = F - E,
// pressure P = -dF/da and entropy S = -dF/dT. Derivatives are central
// differences refined by Richardson extrapolation.

#include <functional>
#include <optional>
#include <string>

#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/real.hpp"

namespace casimir::thermo {

using dielectric::DielectricModel;
using dielectric::FilmState;
using dielectric::ModelKind;
using lifshitz::QuadratureConfig;

struct DiffConfig {
  double rel_step = 1e-3;     // initial step as a fraction of the variable
  int richardson_levels = 3;  // number of step halvings in the tableau

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// f'(x) from central differences with steps h, h/2, ..., h/2^(levels-1),
/// extrapolated in h^2. `f_error` is the absolute error of each f value.
Estimate richardson_derivative(const std::function<real(real)>& f, real x, real h, int levels,
                               real f_error = 0.0L);

enum class ThermalMethod { Subtraction, AbelPlana };
const char* to_string(ThermalMethod m);

struct ThermalCorrection {
  double value = 0.0;  // J/m^2
  double error = 0.0;
  ThermalMethod method = ThermalMethod::Subtraction;
  real value_ld = 0.0L;
  std::optional<double> subtraction;  // filled when computed
  std::optional<double> abel_plana;
};

/// Delta F = F(a, T) - E(a). The plasma model uses the Abel-Plana integral
/// whenever it applies; otherwise F and E are evaluated with at least
/// QuadratureConfig::extended() tolerances and subtracted. `cross_check`
/// evaluates both routes when the Abel-Plana one applies.
ThermalCorrection thermal_correction(const DielectricModel& model, const FilmState& s,
                                     const QuadratureConfig& quad = {}, bool cross_check = false);

/// Free energy as an extended-precision value, J/m^2.
real free_energy_ld(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad,
                    real* error = nullptr);

/// -dF/da, Pa. Throws DomainError if the step would reach a <= 0.
Estimate pressure(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad = {},
                  const DiffConfig& diff = {});

/// -d(Delta F)/da, Pa.
Estimate thermal_pressure(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad = {},
                          const DiffConfig& diff = {});

/// -dF/dT, J/(m^2 K). The plasma model differentiates Delta F (E does not
/// depend on T). For the Drude model the step is shrunk so that T +- h stays
/// on one branch of gamma(T) and the full free energy is differentiated at
/// QuadratureConfig::extended() tolerances.
Estimate entropy(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad = {},
                 const DiffConfig& diff = {});

/// Low-temperature window of the plasma asymptotics: k_B T <= 0.1 hbar c / (2a).
struct WindowCheck {
  bool inside = true;
  double ratio = 0.0;  // k_B T / (hbar c / 2a)
  std::string message;
};
WindowCheck validate_window(const FilmState& s);
/// Largest temperature inside the window for thickness a, K.
double window_max_temperature(double a);

struct Outputs {
  bool free_energy = true;
  bool pressure = false;
  bool entropy = false;
  bool thermal_correction = false;
};

struct ThermoResult {
  ModelKind model = ModelKind::Plasma;
  FilmState state;
  std::optional<Estimate> free_energy;         // J/m^2
  std::optional<Estimate> pressure;            // Pa
  std::optional<Estimate> entropy;             // J/(m^2 K)
  std::optional<ThermalCorrection> thermal_correction;  // J/m^2
  std::size_t n_matsubara = 0;
  bool sign_ok = true;  // F <= 0, and S >= 0 for the plasma model
  WindowCheck window;
};

ThermoResult evaluate(const DielectricModel& model, const FilmState& s, const Outputs& what,
                      const QuadratureConfig& quad = {}, const DiffConfig& diff = {});

}  // namespace casimir::thermo
