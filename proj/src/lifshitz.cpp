#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::lifshitz {

namespace cst = casimir::constants;

namespace {

// Reflection data at fixed zeta; y-independent parts are precomputed.
struct Kernel {
  real zeta2 = 0.0L;
  real kappa2 = 0.0L;
  bool static_drude = false;  // zeta = 0 with the Drude model: r_TM = -1, r_TE = 0
  bool vacuum = false;        // omega_p = 0

  ReflectionPair reflect(real y, real k) const {
    if (vacuum) return {0.0L, 0.0L};
    if (static_drude) return {-1.0L, 0.0L};
    const real kpy = k + y;
    const real r_te = kappa2 / (kpy * kpy);
    // k - eps y = (zeta^2 (k - y) - kappa^2 y) / zeta^2 with k - y = kappa^2/(k + y).
    const real r_tm = (zeta2 * (kappa2 / kpy) - kappa2 * y) / (zeta2 * kpy + kappa2 * y);
    return {r_tm, r_te};
  }

  // y * ln[1 - r^2 e^{-k}] for the requested polarizations.
  real eval(real y, bool tm, bool te) const {
    const real k = std::sqrt(y * y + kappa2);
    const real e = std::exp(-k);
    if (e == 0.0L) return 0.0L;
    const ReflectionPair r = reflect(y, k);
    real out = 0.0L;
    if (tm) out += std::log1p(-r.r_tm * r.r_tm * e);
    if (te) out += std::log1p(-r.r_te * r.r_te * e);
    return y * out;
  }
};

Kernel make_kernel(ModelKind kind, real zeta, const DimensionlessParams& p) {
  Kernel kern;
  kern.zeta2 = zeta * zeta;
  kern.vacuum = p.omega_p_tilde == 0.0L;
  if (zeta == 0.0L && kind == ModelKind::Drude) {
    kern.static_drude = true;
    kern.vacuum = false;
  }
  kern.kappa2 = kappa_squared(kind, zeta, p);
  return kern;
}

PhiValue integrate_phi(const Kernel& kern, real x, bool tm, bool te, const QuadratureConfig& quad) {
  const auto r = quadrature::integrate_semi_infinite([&](real y) { return kern.eval(y, tm, te); }, x,
                                                     quad.tolerance());
  return {r.value, r.error};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(matsubara_tail_tol > 0.0)) {
    throw DomainError("QuadratureConfig: tolerances must be > 0");
  }
  if (max_l < 1) throw DomainError("QuadratureConfig: max_l must be >= 1");
}

quadrature::Tolerance QuadratureConfig::tolerance() const {
  return {static_cast<real>(rel_tol), static_cast<real>(abs_tol), max_intervals};
}

QuadratureConfig QuadratureConfig::extended() {
  QuadratureConfig q;
  q.rel_tol = 1e-16;
  q.abs_tol = 1e-40;
  q.matsubara_tail_tol = 1e-20;
  q.max_intervals = 20000;
  return q;
}

real kappa_squared(ModelKind kind, real zeta, const DimensionlessParams& p) {
  const real w2 = p.omega_p_tilde * p.omega_p_tilde;
  if (kind == ModelKind::Plasma) return w2;
  if (zeta == 0.0L) return 0.0L;
  return w2 * zeta / (zeta + p.gamma_tilde);
}

ReflectionPair reflection(ModelKind kind, real zeta, real y, const DimensionlessParams& p) {
  if (!(zeta >= 0.0L)) throw DomainError("reflection: zeta must be >= 0");
  if (y < zeta) throw DomainError("reflection: requires y >= zeta");
  const Kernel kern = make_kernel(kind, zeta, p);
  if (zeta == 0.0L && kind == ModelKind::Plasma && !kern.vacuum) {
    const real k = std::sqrt(y * y + kern.kappa2);
    return {-1.0L, kern.kappa2 / ((k + y) * (k + y))};
  }
  return kern.reflect(y, std::sqrt(y * y + kern.kappa2));
}

ReflectionPair reflection(const DielectricModel& model, real zeta, real y, const DimensionlessParams& p) {
  return reflection(model.kind, zeta, y, p);
}

real integrand(ModelKind kind, Polarization pol, real zeta, real y, const DimensionlessParams& p) {
  if (y < zeta) throw DomainError("integrand: requires y >= zeta");
  return make_kernel(kind, zeta, p).eval(y, pol == Polarization::TM, pol == Polarization::TE);
}

PhiValue phi_alpha(ModelKind kind, Polarization pol, real x, const DimensionlessParams& p,
                   const QuadratureConfig& quad) {
  if (!(x >= 0.0L)) throw DomainError("phi_alpha: x must be >= 0");
  return integrate_phi(make_kernel(kind, x, p), x, pol == Polarization::TM, pol == Polarization::TE, quad);
}

PhiValue phi(ModelKind kind, real x, const DimensionlessParams& p, const QuadratureConfig& quad) {
  if (!(x >= 0.0L)) throw DomainError("phi: x must be >= 0");
  return integrate_phi(make_kernel(kind, x, p), x, true, true, quad);
}

real free_energy_prefactor(const FilmState& s) {
  return static_cast<real>(cst::k_B) * static_cast<real>(s.T) /
         (8.0L * cst::pi * static_cast<real>(s.a) * static_cast<real>(s.a));
}

real energy_prefactor(double a) {
  const real al = a;
  return static_cast<real>(cst::hbar) * static_cast<real>(cst::c) / (32.0L * cst::pi * cst::pi * al * al * al);
}

MatsubaraSum sum_over_matsubara(const std::function<PhiValue(std::size_t)>& term, const QuadratureConfig& quad,
                                real reference) {
  MatsubaraSum out;
  // Neumaier compensated summation.
  real sum = 0.0L, comp = 0.0L;
  real t_prev2 = 0.0L, t_prev1 = 0.0L;
  for (std::size_t l = 1; l <= quad.max_l; ++l) {
    const PhiValue pv = term(l);
    const real t = pv.value;
    const real next = sum + t;
    comp += std::fabs(sum) >= std::fabs(t) ? (sum - next) + t : (t - next) + sum;
    sum = next;
    out.error += pv.error;
    out.terms = l;

    const real total = std::fabs(sum + comp + reference);
    if (t == 0.0L) {
      if (l >= 2 || total == 0.0L) break;
      continue;
    }
    if (l >= 3 && t_prev1 != 0.0L && t_prev2 != 0.0L) {
      const real q1 = t_prev1 / t_prev2;
      const real q2 = t / t_prev1;
      const real q = std::max({q1, q2, q2 + (q2 - q1)});
      if (q > 0.0L && q < 1.0L) {
        const real tail = std::fabs(t) * q / (1.0L - q);
        if (tail <= static_cast<real>(quad.matsubara_tail_tol) * total) {
          out.error += tail;
          out.sum = sum + comp;
          return out;
        }
      }
    }
    t_prev2 = t_prev1;
    t_prev1 = t;
  }
  out.sum = sum + comp;
  if (out.terms >= quad.max_l) {
    throw ConvergenceError("Matsubara sum not converged after max_l = " + std::to_string(quad.max_l) + " terms",
                           static_cast<double>(std::fabs(t_prev1)));
  }
  return out;
}

MatsubaraSum nonzero_matsubara_sum(ModelKind kind, const DimensionlessParams& p, const QuadratureConfig& quad,
                                   real reference) {
  quad.validate();
  if (!(p.tau > 0.0L)) throw DomainError("Matsubara sum requires T > 0");
  return sum_over_matsubara(
      [&](std::size_t l) {
        const real zeta = p.tau * static_cast<real>(l);
        return integrate_phi(make_kernel(kind, zeta, p), zeta, true, true, quad);
      },
      quad, reference);
}

FreeEnergyResult free_energy(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad) {
  quad.validate();
  model.material.validate();
  s.validate();
  if (!(s.T > 0.0)) throw DomainError("free_energy: T must be > 0 (use zero_T_energy at T = 0)");
  const DimensionlessParams p = dielectric::dimensionless_params(model.material, s);

  PhiValue zero;
  if (model.kind == ModelKind::Drude) {
    zero.value = -cst::zeta3;
  } else {
    zero = phi(ModelKind::Plasma, 0.0L, p, quad);
  }
  const MatsubaraSum rest = nonzero_matsubara_sum(model.kind, p, quad, 0.5L * zero.value);

  FreeEnergyResult out;
  out.model = model.kind;
  out.matsubara_sum = 0.5L * zero.value + rest.sum;
  out.sum_error = 0.5L * zero.error + rest.error;
  out.n_matsubara = rest.terms + 1;
  const real pref = free_energy_prefactor(s);
  out.value = static_cast<double>(pref * out.matsubara_sum);
  out.err_estimate = static_cast<double>(pref * out.sum_error);
  out.sign_ok = out.value <= 0.0;
  return out;
}

ZeroTemperatureEnergy zero_T_energy(const DielectricModel& model, const FilmState& s, const QuadratureConfig& quad) {
  quad.validate();
  model.material.validate();
  if (!(s.a > 0.0)) throw DomainError("zero_T_energy: a must be > 0");
  DimensionlessParams p = dielectric::dimensionless_params(model.material, FilmState{s.a, 0.0});
  p.gamma_tilde = 0.0L;

  QuadratureConfig inner = quad;
  inner.rel_tol = quad.rel_tol * 0.1;
  inner.abs_tol = quad.abs_tol * 0.1;
  auto f = [&](real zeta) { return phi(ModelKind::Plasma, zeta, p, inner).value; };
  const auto r = quadrature::integrate_semi_infinite(f, 0.0L, quad.tolerance());

  ZeroTemperatureEnergy out;
  out.integral = r.value;
  out.integral_error = r.error;
  const real pref = energy_prefactor(s.a);
  out.value = static_cast<double>(pref * r.value);
  out.err_estimate = static_cast<double>(pref * r.error);
  return out;
}

}  // namespace casimir::lifshitz
