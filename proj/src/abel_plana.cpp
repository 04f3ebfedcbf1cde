#include "casimir/abel_plana.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <complex>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::abel_plana {

namespace cst = casimir::constants;
using complex = std::complex<real>;

namespace {

// ln(1 + z) without loss of accuracy for small |z|.
complex log1p(const complex& z) {
  const real x = z.real(), y = z.imag();
  return {0.5L * std::log1p(2.0L * x + x * x + y * y), std::atan2(y, 1.0L + x)};
}

// ln(1 - r_TE^2 e^{-k}) + ln(1 - e^{-k}) at y = i v; both depend on y only.
real im_static_logs(real v, real w2) {
  const complex y(0.0L, v);
  const complex k = std::sqrt(y * y + w2);
  const complex e = std::exp(-k);
  const complex kpy = k + y;
  const complex r_te = w2 / (kpy * kpy);
  return (log1p(-r_te * r_te * e) + log1p(-e)).imag();
}

// y {ln[1 - r_TM^2 e^{-k}] - ln[1 - e^{-k}]} at zeta^2 = -s^2, complex y; O(s^2).
complex tm_remainder(const complex& y, real s2, real w2) {
  const complex k = std::sqrt(y * y + w2);
  const complex e = std::exp(-k);
  const complex kpy = k + y;
  const complex den = -s2 * kpy + w2 * y;
  const complex r_tm = (-s2 * w2 / kpy - w2 * y) / den;
  const complex one_plus_r = -2.0L * s2 * k / den;
  const complex one_minus_r2 = (1.0L - r_tm) * one_plus_r;
  return y * log1p(one_minus_r2 * e / (1.0L - e));
}

}  // namespace

bool applicable(const DimensionlessParams& p) {
  return p.omega_p_tilde >= 0.5L && p.tau > 0.0L && p.tau * kTMax <= p.omega_p_tilde / 4.0L;
}

lifshitz::PhiValue im_phi_imaginary(real s, real w, const QuadratureConfig& quad) {
  if (!(w > 0.0L)) throw DomainError("im_phi_imaginary: w must be > 0");
  if (!(s >= 0.0L) || s > w / 4.0L) throw DomainError("im_phi_imaginary: requires 0 <= s <= w/4");
  if (s == 0.0L) return {};
  const real w2 = w * w;
  const real s2 = s * s;
  // Phi(z) = int_0^inf y g_0 dy - int_0^z y g_0 dy + int_z^inf y [g_TM - ln(1 - e^{-k})] dy with
  // g_0 = ln(1 - e^{-k}) + ln(1 - r_TE^2 e^{-k}). The middle term runs along y = i v; the last along
  // the straight path from z = i s to Y = w / 2, beyond which the integrand is real.
  const auto axis = quadrature::integrate([&](real v) { return v * im_static_logs(v, w2); }, 0.0L, s,
                                          quad.tolerance());
  const complex start(0.0L, s);
  const complex end(w / 2.0L, 0.0L);
  const complex dy = end - start;
  const auto path = quadrature::integrate(
      [&](real u) { return (dy * tm_remainder(start + u * dy, s2, w2)).imag(); }, 0.0L, 1.0L, quad.tolerance());
  return {axis.value + path.value, axis.error + path.error};
}

ThermalCorrection thermal_correction(const Material& mat, const FilmState& s, const QuadratureConfig& quad) {
  quad.validate();
  if (!(s.T > 0.0)) throw DomainError("Abel-Plana thermal correction: T must be > 0");
  const DimensionlessParams p = dielectric::dimensionless_params(mat, s);
  if (!applicable(p)) {
    throw DomainError("Abel-Plana thermal correction requires omega_p_tilde >= 0.5 and tau <= omega_p_tilde / " +
                      std::to_string(static_cast<double>(4.0L * kTMax)));
  }
  // Im Phi(i s) ~ s^3 / (w (e^w - 1)); absolute tolerances are taken relative to
  // that magnitude so that they do not swamp the integrals at low T or large w.
  const real w = p.omega_p_tilde;
  real magnitude = p.tau * p.tau * p.tau / (w * std::expm1(w));
  if (!(magnitude > 0.0L) || !std::isfinite(magnitude)) magnitude = 1.0L;
  magnitude = std::min(magnitude, 1.0L);
  QuadratureConfig inner = quad;
  inner.rel_tol = quad.rel_tol * 0.1;
  inner.abs_tol = std::max(quad.abs_tol * 0.1 * static_cast<double>(magnitude), 1e-300);
  QuadratureConfig outer = quad;
  outer.abs_tol = std::max(quad.abs_tol * static_cast<double>(magnitude), 1e-300);
  // Weighted inner errors at every node; their trapezoid integral is the
  // inner-quadrature contribution to the error.
  std::vector<std::pair<real, real>> inner_err;
  auto f = [&](real t) -> real {
    if (t == 0.0L) return 0.0L;
    const lifshitz::PhiValue im = im_phi_imaginary(p.tau * t, p.omega_p_tilde, inner);
    const real weight = 1.0L / std::expm1(2.0L * cst::pi * t);
    inner_err.emplace_back(t, im.error * weight);
    return im.value * weight;
  };
  const auto r = quadrature::integrate(f, 0.0L, kTMax, outer.tolerance());
  std::sort(inner_err.begin(), inner_err.end());
  real inner_total = inner_err.empty() ? 0.0L : inner_err.front().first * inner_err.front().second;
  for (std::size_t i = 1; i < inner_err.size(); ++i) {
    inner_total += 0.5L * (inner_err[i].first - inner_err[i - 1].first) *
                   (inner_err[i].second + inner_err[i - 1].second);
  }

  ThermalCorrection out;
  out.dimensionless = -2.0L * p.tau * r.value;
  out.dimensionless_error = 2.0L * p.tau * (r.error + inner_total);
  const real pref = lifshitz::energy_prefactor(s.a);
  out.value = static_cast<double>(pref * out.dimensionless);
  out.error = static_cast<double>(pref * out.dimensionless_error);
  return out;
}

}  // namespace casimir::abel_plana
