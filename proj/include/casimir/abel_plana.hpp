#pragma once

// Plasma-model thermal correction from the Abel-Plana formula:
//
//   tau sum'_l Phi(tau l) - int_0^inf Phi = -2 tau int_0^inf Im Phi(i tau t) / (e^{2 pi t} - 1) dt,
//
// with Phi continued to imaginary arguments along a straight complex path
// from i s to a real point Y; the rest of the path, [Y, inf), is real and
// does not contribute to the imaginary part. The result is the thermal part
// on its own, so it keeps full relative accuracy where F - E would cancel.

#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/real.hpp"

namespace casimir::abel_plana {

using dielectric::DimensionlessParams;
using dielectric::FilmState;
using dielectric::Material;
using lifshitz::QuadratureConfig;

/// Upper limit of the t integral; e^{-2 pi t} is below 1e-24 there.
inline constexpr real kTMax = 9.0L;

/// The continuation stays clear of the TM pole near y = s^2 / w and of the
/// branch points y = +-i w while tau t_max <= w / 4; w >= 0.5 is required.
bool applicable(const DimensionlessParams& p);

/// Im Phi(i s) for the plasma model (TM + TE), 0 <= s <= w / 4.
lifshitz::PhiValue im_phi_imaginary(real s, real w, const QuadratureConfig& quad = {});

struct ThermalCorrection {
  real dimensionless = 0.0L;  // tau sum' Phi - int Phi
  real dimensionless_error = 0.0L;
  double value = 0.0;         // J/m^2
  double error = 0.0;         // J/m^2
};

/// Throws DomainError when `applicable` is false.
ThermalCorrection thermal_correction(const Material& mat, const FilmState& s, const QuadratureConfig& quad = {});

}  // namespace casimir::abel_plana
