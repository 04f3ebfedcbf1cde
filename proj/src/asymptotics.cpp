#include "casimir/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specialfn.hpp"

namespace casimir::asymptotics {

namespace cst = casimir::constants;
using dielectric::ModelKind;
using lifshitz::Polarization;

namespace {

constexpr real kHbar = cst::hbar;
constexpr real kBoltzmann = cst::k_B;
constexpr real kLight = cst::c;

void check_state(const FilmState& s) {
  if (!(s.a > 0.0)) throw DomainError("film thickness a must be > 0");
  if (!(s.T >= 0.0)) throw DomainError("temperature T must be >= 0");
}

real omega_p_tilde(const FilmState& s, const Material& mat) {
  return 2.0L * static_cast<real>(s.a) * static_cast<real>(mat.omega_p) / kLight;
}

// 1 / (e^w - 1), zero once e^w overflows.
real inv_expm1(real w) {
  const real d = std::expm1(w);
  return std::isinf(d) ? 0.0L : 1.0L / d;
}

// e^w / (e^w - 1)^2 = e^{-w} / (1 - e^{-w})^2.
real exp_over_expm1_squared(real w) {
  const real e = std::exp(-w);
  const real d = -std::expm1(-w);
  return e / (d * d);
}

real zero_frequency_prefactor(const FilmState& s) {
  return kBoltzmann * static_cast<real>(s.T) / (16.0L * cst::pi * static_cast<real>(s.a) * static_cast<real>(s.a));
}

real integrate_y(const std::function<real(real)>& f, real from, const QuadratureConfig& quad) {
  quad.validate();
  return quadrature::integrate_semi_infinite(f, from, quad.tolerance()).value;
}

// log(1 - x) / x, tending to -1 as x -> 0.
real log1m_over_x(real x) { return x == 0.0L ? -1.0L : std::log1p(-x) / x; }

real r_te_plasma(real y, real w) {
  const real k = std::sqrt(y * y + w * w);
  return w * w / ((k + y) * (k + y));
}

}  // namespace

double delta_f_plasma(const FilmState& s, const Material& mat) {
  check_state(s);
  const real kT = kBoltzmann * static_cast<real>(s.T);
  const real kT2 = kT * kT;
  return static_cast<double>(-2.0L * cst::pi * cst::pi * kT2 * kT2 * inv_expm1(omega_p_tilde(s, mat)) /
                             (15.0L * kHbar * kHbar * kHbar * kLight * kLight * static_cast<real>(mat.omega_p)));
}

double delta_p_plasma(const FilmState& s, const Material& mat) {
  check_state(s);
  const real kT = kBoltzmann * static_cast<real>(s.T);
  const real kT2 = kT * kT;
  return static_cast<double>(-4.0L * cst::pi * cst::pi * kT2 * kT2 *
                             exp_over_expm1_squared(omega_p_tilde(s, mat)) /
                             (15.0L * kHbar * kHbar * kHbar * kLight * kLight * kLight));
}

double entropy_plasma_asymptotic(const FilmState& s, const Material& mat) {
  check_state(s);
  const real kT = kBoltzmann * static_cast<real>(s.T);
  return static_cast<double>(8.0L * cst::pi * cst::pi * kBoltzmann * kT * kT * kT *
                             inv_expm1(omega_p_tilde(s, mat)) /
                             (15.0L * kHbar * kHbar * kHbar * kLight * kLight * static_cast<real>(mat.omega_p)));
}

double delta_f_plasma_expansion(const FilmState& s, const Material& mat) {
  return kExpansionToClosedFormRatio * delta_f_plasma(s, mat);
}

double delta_p_plasma_expansion(const FilmState& s, const Material& mat) {
  return kExpansionToClosedFormRatio * delta_p_plasma(s, mat);
}

double entropy_plasma_expansion(const FilmState& s, const Material& mat) {
  return kExpansionToClosedFormRatio * entropy_plasma_asymptotic(s, mat);
}

PhiDerivativesAtZero phi_te_derivatives_at_zero(real w) {
  if (!(w > 0.0L)) throw DomainError("phi_te_derivatives_at_zero: w must be > 0");
  return {0.0L, -std::log1p(-std::exp(-w)), -8.0L / w * inv_expm1(w)};
}

PhiDerivativesAtZero phi_tm_derivatives_at_zero(real w, const QuadratureConfig& quad) {
  if (!(w > 0.0L)) throw DomainError("phi_tm_derivatives_at_zero: w must be > 0");
  const real bose = integrate_y(
      [w](real y) {
        const real k = std::sqrt(y * y + w * w);
        return k / std::expm1(k);
      },
      0.0L, quad);
  return {0.0L, 8.0L / (w * w) * bose - std::log1p(-std::exp(-w)), -16.0L / w * inv_expm1(w)};
}

real phi_tm_third_derivative_expansion(real w) {
  if (!(w > 0.0L)) throw DomainError("phi_tm_third_derivative_expansion: w must be > 0");
  return -24.0L / w * inv_expm1(w);
}

real i1_closed(real w) {
  if (!(w >= 0.0L)) throw DomainError("i1_closed: w must be >= 0");
  const real z = std::exp(-w);
  specialfn::Accuracy acc;
  acc.abs_tol = 1e-18L;
  return -(specialfn::polylog(3, z, acc) + w * specialfn::polylog(2, z, acc));
}

// The zero-frequency integrands carry an overall e^{-w}; integrating the
// rescaled integrand keeps the absolute tolerance meaningful at large w.
real i1_quadrature(real w, const QuadratureConfig& quad) {
  if (!(w >= 0.0L)) throw DomainError("i1_quadrature: w must be >= 0");
  return integrate_y(
             [w](real y) {
               const real k = std::sqrt(y * y + w * w);
               return y * log1m_over_x(std::exp(-k)) * std::exp(w - k);
             },
             0.0L, quad) *
         std::exp(-w);
}

bool i2_closed_valid(real w) { return w >= 0.5L; }

real i2_closed(real w) {
  if (!(w > 0.0L)) throw DomainError("i2_closed: w must be > 0");
  specialfn::Accuracy acc;
  acc.abs_tol = 1e-18L;
  const real w2 = w * w;
  const real poly = w + 17.0L + 112.0L / w + 432.0L / w2 + 960.0L / (w2 * w) + 960.0L / (w2 * w2);
  const real bessel = w * specialfn::bessel_k(1, w, acc) + 9.0L * specialfn::bessel_k(2, w, acc) +
                      30.0L / w * specialfn::bessel_k(3, w, acc);
  return -poly * std::exp(-w) + 4.0L * bessel;
}

real i2_first_order_quadrature(real w, const QuadratureConfig& quad) {
  if (!(w > 0.0L)) throw DomainError("i2_first_order_quadrature: w must be > 0");
  return -integrate_y(
      [w](real y) {
        const real r = r_te_plasma(y, w);
        return y * r * r * std::exp(w - std::sqrt(y * y + w * w));
      },
      0.0L, quad) *
         std::exp(-w);
}

real i2_exact(real w, const QuadratureConfig& quad) {
  if (!(w > 0.0L)) throw DomainError("i2_exact: w must be > 0");
  return integrate_y(
             [w](real y) {
               const real k = std::sqrt(y * y + w * w);
               const real r2 = r_te_plasma(y, w) * r_te_plasma(y, w);
               return y * r2 * log1m_over_x(r2 * std::exp(-k)) * std::exp(w - k);
             },
             0.0L, quad) *
         std::exp(-w);
}

ZeroFrequencyPlasma f0_plasma(const FilmState& s, const Material& mat, const QuadratureConfig& quad) {
  check_state(s);
  const real w = omega_p_tilde(s, mat);
  if (!(w > 0.0L)) throw DomainError("f0_plasma: omega_p must be > 0");
  const real pref = zero_frequency_prefactor(s);
  ZeroFrequencyPlasma out;
  out.value = static_cast<double>(pref * (i1_quadrature(w, quad) + i2_exact(w, quad)));
  out.closed_form = static_cast<double>(pref * (i1_closed(w) + i2_closed(w)));
  return out;
}

double f0_drude(const FilmState& s) {
  check_state(s);
  return static_cast<double>(-zero_frequency_prefactor(s) * cst::zeta3);
}

real drude_zero_frequency_integral(const QuadratureConfig& quad) {
  return integrate_y([](real y) { return y * std::log1p(-std::exp(-y)); }, 0.0L, quad);
}

EntropyAtZero entropy_bracket(real w) {
  EntropyAtZero out;
  out.i1 = i1_closed(w);
  out.i2 = i2_closed(w);
  out.c_bracket = cst::zeta3 + out.i1 + out.i2;
  out.i2_valid = i2_closed_valid(w);
  return out;
}

EntropyAtZero entropy_drude_zero(const FilmState& s, const Material& mat) {
  check_state(s);
  EntropyAtZero out = entropy_bracket(omega_p_tilde(s, mat));
  out.s0 = static_cast<double>(kBoltzmann * out.c_bracket /
                               (16.0L * cst::pi * static_cast<real>(s.a) * static_cast<real>(s.a)));
  return out;
}

EntropyAtZero entropy_drude_zero_exact(const FilmState& s, const Material& mat, const QuadratureConfig& quad) {
  check_state(s);
  const real w = omega_p_tilde(s, mat);
  EntropyAtZero out;
  out.i1 = i1_closed(w);
  out.i2 = i2_exact(w, quad);
  out.c_bracket = cst::zeta3 + out.i1 + out.i2;
  out.s0 = static_cast<double>(kBoltzmann * out.c_bracket /
                               (16.0L * cst::pi * static_cast<real>(s.a) * static_cast<real>(s.a)));
  return out;
}

RQKernels r_q_kernels(real zeta, real y, const DimensionlessParams& p) {
  if (!(zeta > 0.0L)) throw DomainError("r_q_kernels: zeta must be > 0");
  if (y < zeta) throw DomainError("r_q_kernels: requires y >= zeta");
  const real w2 = p.omega_p_tilde * p.omega_p_tilde;
  const real z2 = zeta * zeta;
  const real k = std::sqrt(y * y + w2);
  RQKernels out;
  const real d_tm = w2 * y + z2 * y + z2 * k;
  out.r_tm = 2.0L * w2 * z2 * y * (w2 + 2.0L * y * y - z2) * (w2 * y + z2 * y - z2 * k) / (k * d_tm * d_tm * d_tm);
  const real kpy = k + y;
  out.r_te = 2.0L * w2 * y * (k - y) / (k * kpy * kpy * kpy);
  const real head = w2 / (2.0L * k);
  out.q_tm = head - out.r_tm;
  out.q_te = head - out.r_te;
  return out;
}

double FGamma::first_order_deviation() const {
  return exact == 0.0 ? std::fabs(first_order) : std::fabs(first_order - exact) / std::fabs(exact);
}

FGamma f_gamma(const DimensionlessParams& p, real prefactor, const QuadratureConfig& quad) {
  quad.validate();
  if (!(p.tau > 0.0L)) throw DomainError("f_gamma: T must be > 0");
  const real w = p.omega_p_tilde;
  const real w2 = w * w;

  auto exact_term = [&](std::size_t l) {
    const real zeta = p.tau * static_cast<real>(l);
    auto f = [&](real y) {
      const real drude = lifshitz::integrand(ModelKind::Drude, Polarization::TM, zeta, y, p) +
                         lifshitz::integrand(ModelKind::Drude, Polarization::TE, zeta, y, p);
      const real plasma = lifshitz::integrand(ModelKind::Plasma, Polarization::TM, zeta, y, p) +
                          lifshitz::integrand(ModelKind::Plasma, Polarization::TE, zeta, y, p);
      return drude - plasma;
    };
    const auto r = quadrature::integrate_semi_infinite(f, zeta, quad.tolerance());
    return lifshitz::PhiValue{r.value, r.error};
  };

  // ln(1 - r_D^2 e^{-k_D}) - ln(1 - r_p^2 e^{-k}) = -delta B e^{-k} / (1 - r_p^2 e^{-k}) + O(delta^2).
  // Expanding both r_D^2 and e^{-k_D} gives B = r_p^2 w^2 / (2k) - R; `q_kernel` uses B = Q instead.
  auto linear_term = [&](std::size_t l, bool q_kernel) {
    const real zeta = p.tau * static_cast<real>(l);
    const real delta = p.gamma_tilde / zeta;
    auto f = [&](real y) {
      const real k = std::sqrt(y * y + w2);
      const real e = std::exp(-k);
      if (e == 0.0L) return 0.0L;
      const lifshitz::ReflectionPair r = lifshitz::reflection(ModelKind::Plasma, zeta, y, p);
      const RQKernels rq = r_q_kernels(zeta, y, p);
      const real rtm2 = r.r_tm * r.r_tm;
      const real rte2 = r.r_te * r.r_te;
      const real head = w2 / (2.0L * k);
      const real b_tm = q_kernel ? rq.q_tm : rtm2 * head - rq.r_tm;
      const real b_te = q_kernel ? rq.q_te : rte2 * head - rq.r_te;
      return -y * e * (b_tm / (1.0L - rtm2 * e) + b_te / (1.0L - rte2 * e));
    };
    const auto r = quadrature::integrate_semi_infinite(f, zeta, quad.tolerance());
    return lifshitz::PhiValue{delta * r.value, std::fabs(delta) * r.error};
  };

  FGamma out;
  const lifshitz::MatsubaraSum exact = lifshitz::sum_over_matsubara(exact_term, quad);
  const lifshitz::MatsubaraSum linear =
      lifshitz::sum_over_matsubara([&](std::size_t l) { return linear_term(l, false); }, quad);
  const lifshitz::MatsubaraSum linear_q =
      lifshitz::sum_over_matsubara([&](std::size_t l) { return linear_term(l, true); }, quad);
  out.exact = static_cast<double>(prefactor * exact.sum);
  out.exact_error = static_cast<double>(std::fabs(prefactor) * exact.error);
  out.first_order = static_cast<double>(prefactor * linear.sum);
  out.first_order_q_kernel = static_cast<double>(prefactor * linear_q.sum);
  out.terms = exact.terms;
  return out;
}

FGamma f_gamma(const FilmState& s, const Material& mat, const QuadratureConfig& quad) {
  if (!(s.T > 0.0)) throw DomainError("f_gamma: T must be > 0");
  const DimensionlessParams p = dielectric::dimensionless_params(mat, s);
  return f_gamma(p, lifshitz::free_energy_prefactor(s), quad);
}

XBound x_bound(const FilmState& s, const Material& mat) {
  check_state(s);
  if (!(s.T > 0.0)) throw DomainError("x_bound: T must be > 0");
  const DimensionlessParams p = dielectric::dimensionless_params(mat, s);
  const real w = p.omega_p_tilde;
  if (!(w > 0.0L)) throw DomainError("x_bound: omega_p must be > 0");
  const real q = std::exp(-w / std::sqrt(2.0L));
  const real ln2 = std::log(2.0L);

  XBound out;
  out.c1 = std::log1p(-q);
  real c2 = 0.0L, series = 0.0L, qn = 1.0L;
  for (long n = 1;; ++n) {
    qn *= q;
    const real nn = static_cast<real>(n);
    const real c2_term = (2.0L * std::log(nn) - ln2) / (2.0L * nn) * qn;
    const real series_term = -qn / nn * std::log(-std::expm1(-nn * p.tau / std::sqrt(2.0L)));
    c2 += c2_term;
    series += series_term;
    // Terms fall off at least like q^n once ln n / n is decreasing.
    const real tail_factor = q / (1.0L - q);
    if (n >= 3 && std::fabs(c2_term) * tail_factor <= 1e-15L * std::fabs(c2) &&
        std::fabs(series_term) * tail_factor <= 1e-15L * std::fabs(series)) {
      break;
    }
    if (qn == 0.0L || n > 10'000'000) break;
  }
  out.c2 = c2;
  const real gamma = dielectric::gamma_of_T(mat, s.T);
  const real omega_p = mat.omega_p;
  const real pref = kHbar * gamma * omega_p * omega_p / (4.0L * cst::pi * cst::pi * kLight * kLight);
  out.value = static_cast<double>(pref * (out.c1 * std::log(p.tau) - out.c2));
  out.series_value = static_cast<double>(pref * series);
  out.log_linear_ok = p.tau / std::sqrt(2.0L) <= 0.1L;
  return out;
}

DrudeDecomposition drude_decompose(const FilmState& s, const Material& mat, const QuadratureConfig& quad) {
  if (!(s.T > 0.0)) throw DomainError("drude_decompose: T must be > 0");
  const lifshitz::FreeEnergyResult fp =
      lifshitz::free_energy({ModelKind::Plasma, mat}, s, quad);
  const FGamma fg = f_gamma(s, mat, quad);
  DrudeDecomposition out;
  out.f_plasma = fp.value;
  out.f0_drude = f0_drude(s);
  out.f0_plasma = f0_plasma(s, mat, quad).value;
  out.f_gamma = fg.exact;
  out.total = out.f_plasma + out.f0_drude - out.f0_plasma + out.f_gamma;
  out.error = fp.err_estimate + fg.exact_error;
  return out;
}

}  // namespace casimir::asymptotics
