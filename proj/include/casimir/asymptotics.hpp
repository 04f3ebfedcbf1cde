#pragma once

// Closed-form results for the film: plasma low-temperature thermal
// corrections, the zero-frequency Matsubara terms, the Drude free-energy
// decomposition
//
//   F_D = F_p + F_D^(0) - F_p^(0) + F^(gamma),
//
// the zero-temperature Drude entropy, and the first-order-in-delta_l form of
// F^(gamma) with its upper bound X(a, T).

#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/real.hpp"

namespace casimir::asymptotics {

using dielectric::DimensionlessParams;
using dielectric::FilmState;
using dielectric::Material;
using lifshitz::QuadratureConfig;

// ---------------------------------------------------------------------------
// Plasma model, k_B T << hbar c / (2a)

/// -2 pi^2 (k_B T)^4 / [15 hbar^3 c^2 omega_p (e^{2 a omega_p / c} - 1)], J/m^2.
/// Built on Phi'''_TE(0) + Phi'''_TM(0) = -24 / (w (e^w - 1)).
double delta_f_plasma(const FilmState& s, const Material& mat);

/// -4 pi^2 (k_B T)^4 / (15 hbar^3 c^3) e^w / (e^w - 1)^2, Pa; equals -d(delta_f_plasma)/da.
double delta_p_plasma(const FilmState& s, const Material& mat);

/// 8 pi^2 k_B (k_B T)^3 / [15 hbar^3 c^2 omega_p (e^w - 1)], J/(m^2 K); equals -d(delta_f_plasma)/dT.
double entropy_plasma_asymptotic(const FilmState& s, const Material& mat);

/// The leading Euler-Maclaurin term tau^4 Phi'''(0) / 720 with the third
/// derivative of the TM contribution taken from its small-x expansion,
/// Phi'''_TM(0) = -24 / (w (e^w - 1)), so Phi'''(0) = -32 / (w (e^w - 1)).
/// These are 4/3 of the three functions above.
inline constexpr double kExpansionToClosedFormRatio = 4.0 / 3.0;
double delta_f_plasma_expansion(const FilmState& s, const Material& mat);
double delta_p_plasma_expansion(const FilmState& s, const Material& mat);
double entropy_plasma_expansion(const FilmState& s, const Material& mat);

/// Closed forms for the derivatives of Phi_alpha(x) at x = 0 (plasma model).
struct PhiDerivativesAtZero {
  real first = 0.0L;
  real second = 0.0L;
  real third = 0.0L;
};
/// TE: 0, -ln(1 - e^{-w}), -8 / (w (e^w - 1)).
PhiDerivativesAtZero phi_te_derivatives_at_zero(real w);
/// TM: 0, (8/w^2) int_0^inf sqrt(y^2 + w^2) / (e^{sqrt(y^2+w^2)} - 1) dy - ln(1 - e^{-w}),
/// and the stated third derivative -16 / (w (e^w - 1)).
PhiDerivativesAtZero phi_tm_derivatives_at_zero(real w, const QuadratureConfig& quad = {});
/// Third derivative of Phi_TM at 0 from the expansion of r_TM^2 in zeta^2 / y:
/// -24 / (w (e^w - 1)).
real phi_tm_third_derivative_expansion(real w);

// ---------------------------------------------------------------------------
// Zero-frequency terms and the integrals I_1, I_2

/// I_1(w) = int_0^inf y ln(1 - e^{-sqrt(y^2 + w^2)}) dy = -[Li_3(e^{-w}) + w Li_2(e^{-w})].
real i1_closed(real w);
real i1_quadrature(real w, const QuadratureConfig& quad = {});

/// I_2 in the first order in r_TE^2:
/// -(w + 17 + 112/w + 432/w^2 + 960/w^3 + 960/w^4) e^{-w} + 4 [w K_1(w) + 9 K_2(w) + (30/w) K_3(w)].
/// Accurate for w >= 0.5; below that it is still evaluated and `i2_closed_valid` is false.
real i2_closed(real w);
bool i2_closed_valid(real w);
/// -int_0^inf y r_TE^2(y) e^{-sqrt(y^2 + w^2)} dy by quadrature (the integral i2_closed evaluates).
real i2_first_order_quadrature(real w, const QuadratureConfig& quad = {});
/// I_2(w) = int_0^inf y ln(1 - r_TE^2(y) e^{-sqrt(y^2 + w^2)}) dy by quadrature.
real i2_exact(real w, const QuadratureConfig& quad = {});

/// Plasma zero-frequency term (k_B T / 16 pi a^2) [I_1 + I_2], J/m^2.
struct ZeroFrequencyPlasma {
  double value = 0.0;        // exact I_2 by quadrature
  double closed_form = 0.0;  // i1_closed + i2_closed
};
ZeroFrequencyPlasma f0_plasma(const FilmState& s, const Material& mat, const QuadratureConfig& quad = {});

/// Drude zero-frequency term -k_B T zeta(3) / (16 pi a^2), J/m^2.
double f0_drude(const FilmState& s);

/// int_0^inf y ln(1 - e^{-y}) dy by quadrature; equals -zeta(3).
real drude_zero_frequency_integral(const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Drude model: zero-temperature entropy and decomposition

struct EntropyAtZero {
  real i1 = 0.0L;
  real i2 = 0.0L;
  real c_bracket = 0.0L;  // zeta(3) + I_1 + I_2
  double s0 = 0.0;        // k_B C / (16 pi a^2), J/(m^2 K)
  bool i2_valid = true;   // w >= 0.5
};

/// C and S_D(a, 0) from i1_closed and i2_closed.
EntropyAtZero entropy_drude_zero(const FilmState& s, const Material& mat);
/// Same with I_2 from the exact quadrature.
EntropyAtZero entropy_drude_zero_exact(const FilmState& s, const Material& mat,
                                       const QuadratureConfig& quad = {});
/// C(w) from the closed forms, without a film.
EntropyAtZero entropy_bracket(real w);

/// First-order kernels of the expansion of the Drude reflection
/// coefficients in delta_l = gamma / xi_l:
///   r_D^2 = r_p^2 - delta_l R,    Q = w^2 / (2 sqrt(y^2 + w^2)) - R.
struct RQKernels {
  real r_tm = 0.0L;
  real r_te = 0.0L;
  real q_tm = 0.0L;
  real q_te = 0.0L;
};
RQKernels r_q_kernels(real zeta, real y, const DimensionlessParams& p);

struct FGamma {
  double exact = 0.0;                // J/m^2, difference of the l >= 1 Drude and plasma sums
  double first_order = 0.0;          // J/m^2, linear in delta_l
  double first_order_q_kernel = 0.0; // J/m^2, linear form with numerators Q_TM, Q_TE
  double exact_error = 0.0;
  std::size_t terms = 0;

  double first_order_deviation() const;  // |first_order - exact| / |exact|
};

/// F^(gamma) for explicit dimensionless parameters (gamma_tilde may be synthetic).
/// `prefactor` is k_B T / (8 pi a^2) in J/m^2.
FGamma f_gamma(const DimensionlessParams& p, real prefactor, const QuadratureConfig& quad = {});
FGamma f_gamma(const FilmState& s, const Material& mat, const QuadratureConfig& quad = {});

struct XBound {
  real c1 = 0.0L;      // ln(1 - e^{-w/sqrt 2})
  real c2 = 0.0L;      // sum_n (2 ln n - ln 2) / (2n) e^{-n w / sqrt 2}
  double value = 0.0;  // hbar gamma omega_p^2 / (4 pi^2 c^2) (C_1 ln tau - C_2), J/m^2
  /// The same bound before replacing ln(1 - e^{-n tau/sqrt 2}) by ln(n tau / sqrt 2).
  double series_value = 0.0;
  bool log_linear_ok = true;  // tau / sqrt 2 <= 0.1
};
XBound x_bound(const FilmState& s, const Material& mat);

struct DrudeDecomposition {
  double f_plasma = 0.0;
  double f0_drude = 0.0;
  double f0_plasma = 0.0;
  double f_gamma = 0.0;
  double total = 0.0;  // f_plasma + f0_drude - f0_plasma + f_gamma
  double error = 0.0;
};
DrudeDecomposition drude_decompose(const FilmState& s, const Material& mat, const QuadratureConfig& quad = {});

}  // namespace casimir::asymptotics
