#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "casimir/abel_plana.hpp"
#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::thermo {

namespace cst = casimir::constants;

namespace {

QuadratureConfig tightened(const QuadratureConfig& quad) {
  QuadratureConfig q = QuadratureConfig::extended();
  q.rel_tol = std::min(q.rel_tol, quad.rel_tol);
  q.abs_tol = std::min(q.abs_tol, quad.abs_tol);
  q.matsubara_tail_tol = std::min(q.matsubara_tail_tol, quad.matsubara_tail_tol);
  q.max_l = quad.max_l;
  q.max_intervals = std::max(q.max_intervals, quad.max_intervals);
  return q;
}

bool abel_plana_applies(const DielectricModel& model, const FilmState& s) {
  if (model.kind != ModelKind::Plasma || !(s.T > 0.0)) return false;
  return abel_plana::applicable(dielectric::dimensionless_params(model.material, s));
}

real zero_T_energy_ld(const DielectricModel& model, double a, const QuadratureConfig& quad, real* error) {
  const auto e = lifshitz::zero_T_energy(model, FilmState{a, 0.0}, quad);
  const real pref = lifshitz::energy_prefactor(a);
  if (error) *error = pref * e.integral_error;
  return pref * e.integral;
}

}  // namespace

void DiffConfig::validate() const {
  if (!(rel_step > 0.0)) throw DomainError("DiffConfig: rel_step must be > 0");
  if (richardson_levels < 1) throw DomainError("DiffConfig: richardson_levels must be >= 1");
}

Estimate richardson_derivative(const std::function<real(real)>& f, real x, real h, int levels, real f_error) {
  if (!(h > 0.0L)) throw DomainError("richardson_derivative: step must be > 0");
  if (levels < 1) throw DomainError("richardson_derivative: levels must be >= 1");
  std::vector<std::vector<real>> table(levels);
  real step = h;
  for (int i = 0; i < levels; ++i, step /= 2.0L) {
    table[i].push_back((f(x + step) - f(x - step)) / (2.0L * step));
    real factor = 4.0L;
    for (int j = 1; j <= i; ++j, factor *= 4.0L) {
      table[i].push_back(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0L));
    }
  }
  Estimate out;
  const real best = table.back().back();
  out.value = static_cast<double>(best);
  real err = levels > 1 ? std::fabs(best - table[levels - 2].back()) : std::fabs(best) * 1e-3L;
  // Rounding of f amplified by the smallest step.
  err += f_error * std::pow(2.0L, levels - 1) / h;
  out.error = static_cast<double>(err);
  return out;
}

const char* to_string(ThermalMethod m) { return m == ThermalMethod::AbelPlana ? "abel_plana" : "subtraction"; }

real free_energy_ld(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad, real* error) {
  const auto r = lifshitz::free_energy(model, s, quad);
  const real pref = lifshitz::free_energy_prefactor(s);
  if (error) *error = pref * r.sum_error;
  return pref * r.matsubara_sum;
}

ThermalCorrection thermal_correction(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad,
                                     bool cross_check) {
  quad.validate();
  s.validate();
  ThermalCorrection out;
  if (s.T == 0.0) return out;

  const bool use_ap = abel_plana_applies(model, s);
  if (use_ap) {
    const auto ap = abel_plana::thermal_correction(model.material, s, quad);
    out.method = ThermalMethod::AbelPlana;
    out.value_ld = ap.dimensionless * lifshitz::energy_prefactor(s.a);
    out.value = ap.value;
    out.error = ap.error;
    out.abel_plana = ap.value;
    if (!cross_check) return out;
  }

  const QuadratureConfig strict = tightened(quad);
  const auto f = lifshitz::free_energy(model, s, strict);
  DielectricModel plasma = model;
  plasma.kind = ModelKind::Plasma;
  const auto e = lifshitz::zero_T_energy(plasma, s, strict);
  const auto p = dielectric::dimensionless_params(model.material, s);
  // tau sum' Phi - int Phi, scaled by hbar c / (32 pi^2 a^3).
  const real d = p.tau * f.matsubara_sum - e.integral;
  const real pref = lifshitz::energy_prefactor(s.a);
  const double sub = static_cast<double>(pref * d);
  out.subtraction = sub;
  if (!use_ap) {
    out.method = ThermalMethod::Subtraction;
    out.value_ld = pref * d;
    out.value = sub;
    out.error = static_cast<double>(pref * (p.tau * f.sum_error + e.integral_error));
  }
  return out;
}

Estimate pressure(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad,
                  const DiffConfig& diff) {
  diff.validate();
  s.validate();
  const real h = static_cast<real>(diff.rel_step) * static_cast<real>(s.a);
  if (!(s.a - h > 0.0L)) throw DomainError("pressure: step reaches a <= 0");
  real f_err = 0.0L;
  std::function<real(real)> f;
  if (s.T == 0.0) {
    f = [&](real a) {
      real e = 0.0L;
      const real v = zero_T_energy_ld(model, static_cast<double>(a), quad, &e);
      f_err = std::max(f_err, e);
      return v;
    };
  } else {
    f = [&](real a) {
      real e = 0.0L;
      const real v = free_energy_ld(model, FilmState{static_cast<double>(a), s.T}, quad, &e);
      f_err = std::max(f_err, e);
      return v;
    };
  }
  Estimate d = richardson_derivative(f, s.a, h, diff.richardson_levels);
  d.error += static_cast<double>(f_err * std::pow(2.0L, diff.richardson_levels - 1) / h);
  return {-d.value, d.error};
}

Estimate thermal_pressure(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad,
                          const DiffConfig& diff) {
  diff.validate();
  s.validate();
  if (s.T == 0.0) return {};
  const real h = static_cast<real>(diff.rel_step) * static_cast<real>(s.a);
  if (!(s.a - h > 0.0L)) throw DomainError("thermal_pressure: step reaches a <= 0");
  real f_err = 0.0L;
  auto f = [&](real a) {
    const auto tc = thermal_correction(model, FilmState{static_cast<double>(a), s.T}, quad);
    f_err = std::max<real>(f_err, tc.error);
    return tc.value_ld;
  };
  Estimate d = richardson_derivative(f, s.a, h, diff.richardson_levels);
  d.error += static_cast<double>(f_err * std::pow(2.0L, diff.richardson_levels - 1) / h);
  return {-d.value, d.error};
}

Estimate entropy(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad,
                 const DiffConfig& diff) {
  diff.validate();
  s.validate();
  if (s.T == 0.0) {
    if (model.kind == ModelKind::Plasma) return {0.0, 0.0};
    return {asymptotics::entropy_drude_zero(s, model.material).s0, 0.0};
  }
  real h = static_cast<real>(diff.rel_step) * static_cast<real>(s.T);
  real f_err = 0.0L;
  std::function<real(real)> f;
  if (model.kind == ModelKind::Plasma) {
    f = [&](real T) {
      const auto tc = thermal_correction(model, FilmState{s.a, static_cast<double>(T)}, quad);
      f_err = std::max<real>(f_err, tc.error);
      return tc.value_ld;
    };
  } else {
    const auto joins = dielectric::gamma_branch_joins(model.material);
    for (double join : {joins.low, joins.high}) {
      const real dist = std::fabs(static_cast<real>(s.T) - join);
      if (dist > 0.0L) h = std::min(h, 0.5L * dist);
    }
    const QuadratureConfig strict = tightened(quad);
    f = [&, strict](real T) {
      real e = 0.0L;
      const real v = free_energy_ld(model, FilmState{s.a, static_cast<double>(T)}, strict, &e);
      f_err = std::max(f_err, e);
      return v;
    };
  }
  if (!(s.T - h > 0.0L)) throw DomainError("entropy: step reaches T <= 0");
  Estimate d = richardson_derivative(f, s.T, h, diff.richardson_levels);
  d.error += static_cast<double>(f_err * std::pow(2.0L, diff.richardson_levels - 1) / h);
  return {-d.value, d.error};
}

double window_max_temperature(double a) {
  if (!(a > 0.0)) throw DomainError("window_max_temperature: a must be > 0");
  return 0.1 * cst::hbar * cst::c / (2.0 * a * cst::k_B);
}

WindowCheck validate_window(const FilmState& s) {
  WindowCheck out;
  if (!(s.a > 0.0)) throw DomainError("validate_window: a must be > 0");
  out.ratio = cst::k_B * s.T / (cst::hbar * cst::c / (2.0 * s.a));
  out.inside = out.ratio <= 0.1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "k_B T / (hbar c / 2a) = %.3g %s 0.1: low-temperature asymptotics %s", out.ratio,
                out.inside ? "<=" : ">", out.inside ? "applicable" : "outside their window");
  out.message = buf;
  return out;
}

ThermoResult evaluate(const DielectricModel& model, const FilmState& s, const Outputs& what,
                      const QuadratureConfig& quad, const DiffConfig& diff) {
  ThermoResult out;
  out.model = model.kind;
  out.state = s;
  out.window = validate_window(s);
  if (what.free_energy) {
    if (s.T == 0.0) {
      const auto e = lifshitz::zero_T_energy(model, s, quad);
      out.free_energy = Estimate{e.value, e.err_estimate};
    } else {
      const auto f = lifshitz::free_energy(model, s, quad);
      out.free_energy = Estimate{f.value, f.err_estimate};
      out.n_matsubara = f.n_matsubara;
      out.sign_ok = out.sign_ok && f.sign_ok;
    }
  }
  if (what.pressure) out.pressure = pressure(model, s, quad, diff);
  if (what.entropy) {
    out.entropy = entropy(model, s, quad, diff);
    if (model.kind == ModelKind::Plasma && out.entropy->value < 0.0) out.sign_ok = false;
  }
  if (what.thermal_correction) out.thermal_correction = thermal_correction(model, s, quad);
  return out;
}

}  // namespace casimir::thermo
