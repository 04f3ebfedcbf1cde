#pragma once

// Dimensionless Lifshitz machinery for a free-standing film.
//
// With omega_c = c/(2a), zeta = xi/omega_c and y = 2a q, the free energy per
// unit area is
//
//   F = k_B T / (8 pi a^2) * sum'_l Phi(zeta_l),     zeta_l = tau l,
//   Phi(x) = int_x^inf y dy sum_alpha ln[1 - r_alpha^2 exp(-sqrt(y^2 + kappa^2))],
//
// where kappa^2 = (eps - 1) zeta^2 (omega_p_tilde^2 for the plasma model,
// omega_p_tilde^2 / (1 + gamma_tilde/zeta) for the Drude model). The primed
// sum halves the l = 0 term, which is taken from its analytic zero-frequency
// limit.

#include <cstddef>
#include <functional>

#include "casimir/dielectric.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/real.hpp"

namespace casimir::lifshitz {

using dielectric::DielectricModel;
using dielectric::DimensionlessParams;
using dielectric::FilmState;
using dielectric::ModelKind;

enum class Polarization { TM, TE };

struct ReflectionPair {
  real r_tm = 0.0L;
  real r_te = 0.0L;
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double matsubara_tail_tol = 1e-12;
  std::size_t max_l = 1'000'000;
  std::size_t max_intervals = 4000;

  void validate() const;
  quadrature::Tolerance tolerance() const;

  /// Settings for results that are differenced against each other at the
  /// level of extended-precision rounding (thermal corrections far below
  /// the zero-temperature energy).
  static QuadratureConfig extended();
};

/// kappa^2 = (eps(i zeta) - 1) zeta^2 in dimensionless units; finite at zeta = 0.
real kappa_squared(ModelKind kind, real zeta, const DimensionlessParams& p);

/// Reflection coefficients at dimensionless frequency zeta and y >= zeta.
/// At zeta = 0 the zero-frequency limits are returned: plasma r_TM = -1 and
/// r_TE = r_TE,p(y); Drude r_TM = -1 and r_TE = 0.
ReflectionPair reflection(ModelKind kind, real zeta, real y, const DimensionlessParams& p);
ReflectionPair reflection(const DielectricModel& model, real zeta, real y, const DimensionlessParams& p);

/// y ln[1 - r_alpha^2 exp(-sqrt(y^2 + kappa^2))], the Phi integrand.
real integrand(ModelKind kind, Polarization pol, real zeta, real y, const DimensionlessParams& p);

struct PhiValue {
  real value = 0.0L;
  real error = 0.0L;
};

/// Phi_alpha(x) for one polarization; x >= 0.
PhiValue phi_alpha(ModelKind kind, Polarization pol, real x, const DimensionlessParams& p,
                   const QuadratureConfig& quad = {});

/// Phi_TM(x) + Phi_TE(x) from a single quadrature of the summed integrand.
PhiValue phi(ModelKind kind, real x, const DimensionlessParams& p, const QuadratureConfig& quad = {});

struct FreeEnergyResult {
  double value = 0.0;         // J/m^2
  ModelKind model = ModelKind::Plasma;
  std::size_t n_matsubara = 0;
  double err_estimate = 0.0;  // J/m^2, quadrature + truncated tail
  real matsubara_sum = 0.0L;  // sum'_l Phi(zeta_l), dimensionless
  real sum_error = 0.0L;
  bool sign_ok = true;        // value <= 0
};

FreeEnergyResult free_energy(const DielectricModel& model, const FilmState& s,
                             const QuadratureConfig& quad = {});

/// Sum over l >= 1 only, for a given set of dimensionless parameters.
struct MatsubaraSum {
  real sum = 0.0L;
  real error = 0.0L;
  std::size_t terms = 0;
};
/// `reference` is added to the running sum when judging the relative tail size.
MatsubaraSum nonzero_matsubara_sum(ModelKind kind, const DimensionlessParams& p, const QuadratureConfig& quad,
                                   real reference = 0.0L);

/// Sums term(l) for l = 1, 2, ... until a geometric fit of the last three
/// terms bounds the tail below matsubara_tail_tol * |reference + sum|.
/// Throws ConvergenceError when max_l is reached first.
MatsubaraSum sum_over_matsubara(const std::function<PhiValue(std::size_t)>& term, const QuadratureConfig& quad,
                                real reference = 0.0L);

struct ZeroTemperatureEnergy {
  double value = 0.0;         // J/m^2
  double err_estimate = 0.0;  // J/m^2
  real integral = 0.0L;       // int_0^inf Phi(zeta) dzeta
  real integral_error = 0.0L;
};

/// E = hbar c / (32 pi^2 a^3) int_0^inf Phi(zeta) dzeta. gamma(0) = 0, so the
/// Drude model reduces to the plasma model here.
ZeroTemperatureEnergy zero_T_energy(const DielectricModel& model, const FilmState& s,
                                    const QuadratureConfig& quad = {});

/// k_B T / (8 pi a^2), J/m^2.
real free_energy_prefactor(const FilmState& s);
/// hbar c / (32 pi^2 a^3), J/m^2.
real energy_prefactor(double a);

}  // namespace casimir::lifshitz
