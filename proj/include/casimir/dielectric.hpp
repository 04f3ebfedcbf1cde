#pragma once

#include <string>

#include "casimir/real.hpp"

namespace casimir::dielectric {

/// Conduction-electron parameters of a film metal.
///
/// The relaxation rate follows a three-branch power law: linear in T above
/// T_debye/4, Bloch-Grueneisen T^5 between the crossover temperature and
/// T_debye/4, and T^beta_low below the crossover (perfect lattice, no
/// residual relaxation). Branches are joined continuously and anchored at
/// gamma(T_ref) = gamma_ref.
struct Material {
  std::string name;
  double omega_p = 0.0;    // rad/s
  double gamma_ref = 0.0;  // rad/s at T_ref
  double T_ref = 300.0;    // K
  double T_debye = 0.0;    // K
  double beta_low = 2.0;
  double T_cross = 0.0;    // K; 0 selects T_debye / 20
  std::string comment;

  /// Throws DomainError on any violated invariant.
  void validate() const;
  double crossover_temperature() const { return T_cross > 0.0 ? T_cross : T_debye / 20.0; }

  bool operator==(const Material&) const = default;
};

/// Gold as used throughout: omega_p = 1.37e16 rad/s, gamma(300 K) = 5.3e13 rad/s, T_D = 165 K.
Material gold();

enum class ModelKind { Plasma, Drude };

const char* to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);

struct DielectricModel {
  ModelKind kind = ModelKind::Plasma;
  Material material;
};

struct FilmState {
  double a = 0.0;  // thickness, m
  double T = 0.0;  // temperature, K

  void validate() const;
};

struct DimensionlessParams {
  real omega_p_tilde = 0.0L;  // 2 a omega_p / c
  real tau = 0.0L;            // 4 pi k_B T a / (hbar c); zeta_l = tau l
  real gamma_tilde = 0.0L;    // gamma(T) 2a / c
};

/// Characteristic frequency omega_c = c / (2a).
double omega_c(double a);

/// xi_l = 2 pi k_B T l / hbar. Requires T > 0.
double matsubara_xi(double T, long l);

/// Relaxation rate gamma(T); gamma(0) = 0.
double gamma_of_T(const Material& mat, double T);

/// Index of the gamma(T) branch containing T: 0 (T^beta_low), 1 (T^5), 2 (linear).
int gamma_branch(const Material& mat, double T);

/// Temperatures at which gamma(T) changes branch, ascending.
struct BranchJoins {
  double low;   // crossover T_x
  double high;  // T_debye / 4
};
BranchJoins gamma_branch_joins(const Material& mat);

/// 1 + omega_p^2 / xi^2.
double epsilon_plasma(const Material& mat, double xi);

/// 1 + omega_p^2 / (xi (xi + gamma(T))).
double epsilon_drude(const Material& mat, double T, double xi);

/// delta_l = gamma(T) / xi_l for l >= 1.
double delta_l(const Material& mat, double T, long l);

DimensionlessParams dimensionless_params(const Material& mat, const FilmState& s);

}  // namespace casimir::dielectric
