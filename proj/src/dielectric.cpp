#include "casimir/dielectric.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::dielectric {

namespace cst = casimir::constants;

void Material::validate() const {
  if (!(omega_p > 0.0)) throw DomainError("material '" + name + "': omega_p must be > 0");
  if (!(gamma_ref >= 0.0)) throw DomainError("material '" + name + "': gamma_ref must be >= 0");
  if (!(T_ref > 0.0)) throw DomainError("material '" + name + "': T_ref must be > 0");
  if (!(T_debye > 0.0)) throw DomainError("material '" + name + "': T_debye must be > 0");
  if (!(beta_low > 1.0)) throw DomainError("material '" + name + "': beta_low must be > 1");
  if (T_cross < 0.0 || (T_cross > 0.0 && T_cross >= T_debye / 4.0)) {
    throw DomainError("material '" + name + "': T_cross must lie in (0, T_debye/4)");
  }
}

Material gold() {
  Material m;
  m.name = "gold";
  m.omega_p = 1.37e16;
  m.gamma_ref = 5.3e13;
  m.T_ref = 300.0;
  m.T_debye = 165.0;
  m.beta_low = 2.0;
  return m;
}

const char* to_string(ModelKind kind) { return kind == ModelKind::Plasma ? "plasma" : "drude"; }

ModelKind parse_model_kind(const std::string& text) {
  if (text == "plasma") return ModelKind::Plasma;
  if (text == "drude") return ModelKind::Drude;
  throw DomainError("unknown dielectric model '" + text + "' (expected plasma or drude)");
}

void FilmState::validate() const {
  if (!(a > 0.0)) throw DomainError("film thickness a must be > 0");
  if (!(T >= 0.0)) throw DomainError("temperature T must be >= 0");
}

double omega_c(double a) { return cst::c / (2.0 * a); }

double matsubara_xi(double T, long l) {
  if (!(T > 0.0)) throw DomainError("matsubara_xi: T must be > 0 (use the T = 0 integral instead)");
  if (l < 0) throw DomainError("matsubara_xi: index must be >= 0");
  return 2.0 * M_PI * cst::k_B * T * static_cast<double>(l) / cst::hbar;
}

BranchJoins gamma_branch_joins(const Material& mat) {
  return {mat.crossover_temperature(), mat.T_debye / 4.0};
}

int gamma_branch(const Material& mat, double T) {
  const BranchJoins joins = gamma_branch_joins(mat);
  if (T >= joins.high) return 2;
  if (T > joins.low) return 1;
  return 0;
}

double gamma_of_T(const Material& mat, double T) {
  if (!(T >= 0.0)) throw DomainError("gamma_of_T: T must be >= 0");
  if (T == 0.0) return 0.0;
  const BranchJoins joins = gamma_branch_joins(mat);
  const double slope = mat.gamma_ref / mat.T_ref;
  if (T >= joins.high) return slope * T;
  const double gamma_high = slope * joins.high;
  if (T > joins.low) return gamma_high * std::pow(T / joins.high, 5.0);
  const double gamma_low = gamma_high * std::pow(joins.low / joins.high, 5.0);
  return gamma_low * std::pow(T / joins.low, mat.beta_low);
}

double epsilon_plasma(const Material& mat, double xi) {
  if (!(xi > 0.0)) throw DomainError("epsilon_plasma: xi must be > 0");
  const double ratio = mat.omega_p / xi;
  return 1.0 + ratio * ratio;
}

double epsilon_drude(const Material& mat, double T, double xi) {
  if (!(xi > 0.0)) throw DomainError("epsilon_drude: xi must be > 0");
  const double g = gamma_of_T(mat, T);
  return 1.0 + mat.omega_p * mat.omega_p / (xi * (xi + g));
}

double delta_l(const Material& mat, double T, long l) {
  if (l < 1) throw DomainError("delta_l: index must be >= 1");
  if (!(T > 0.0)) throw DomainError("delta_l: T must be > 0");
  return gamma_of_T(mat, T) / matsubara_xi(T, l);
}

DimensionlessParams dimensionless_params(const Material& mat, const FilmState& s) {
  s.validate();
  const real a = s.a;
  DimensionlessParams p;
  p.omega_p_tilde = 2.0L * a * static_cast<real>(mat.omega_p) / static_cast<real>(cst::c);
  p.tau = 4.0L * cst::pi * static_cast<real>(cst::k_B) * static_cast<real>(s.T) * a /
          (static_cast<real>(cst::hbar) * static_cast<real>(cst::c));
  p.gamma_tilde = static_cast<real>(gamma_of_T(mat, s.T)) * 2.0L * a / static_cast<real>(cst::c);
  return p;
}

}  // namespace casimir::dielectric
