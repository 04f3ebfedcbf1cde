// Acceptance run: one PASS/FAIL line per criterion with the measured values.
//
// Criteria whose published reference values disagree with what the formulas
// produce are listed in kKnownDeviations together with the reason. They are
// still reported as FAIL; the exit status is non-zero only when an outcome
// differs from this table (an unexpected failure or an unexpected pass).

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/specialfn.hpp"
#include "casimir/thermo.hpp"
#include "support/phi_fit.hpp"

using namespace casimir;
using casimir::real;
using dielectric::DielectricModel;
using dielectric::FilmState;
using dielectric::Material;
using dielectric::ModelKind;

namespace {

const std::map<int, const char*> kKnownDeviations = {
    {1, "the tabulated I_2 at w = 1, 5 and C at w = 1 are values of the exact I_2 integral; the closed form "
        "evaluates its first-order-in-r_TE^2 truncation, which differs by 4.7% (w = 1) and 0.1% (w = 5)"},
    {3, "the closed form for the thermal correction is 3/4 of the leading term tau^4 Phi'''(0) / 720: it uses "
        "Phi'''_TM(0) = -16 / (w (e^w - 1)) where the small-x expansion gives -24 / (w (e^w - 1)); the direct "
        "ratio tends to 4/3"},
    {6, "the TM third derivative at zero is -24 / (w (e^w - 1)), 3/2 of the stated closed form"},
};

struct Line {
  std::string text;
  bool pass = true;

  void check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Line::check(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  text += std::string("\n    ") + (ok ? "ok   " : "FAIL ") + buf;
  pass = pass && ok;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double thickness_for(double w) { return w * constants::c / (2.0 * dielectric::gold().omega_p); }

bool within_last_digit(real value, real printed, real unit) { return std::fabs(value - printed) <= unit * 1.000001L; }

// ---------------------------------------------------------------------------

Line criterion_1() {
  Line l;
  l.text = "tabulated I_1, I_2, C at w = 1, 5, 15 to +-1 in the last printed digit";
  Timer t;
  struct Row {
    real w;
    real i1, i1_unit, i2, i2_unit, c, c_unit;
  };
  const Row rows[] = {
      {1.0L, -0.79575L, 1e-5L, -0.02456L, 1e-5L, 0.38175L, 1e-5L},
      {5.0L, -0.04049L, 1e-5L, -0.006684L, 1e-6L, 1.15489L, 1e-5L},
      {15.0L, -4.894e-6L, 1e-9L, -1.5966e-6L, 1e-10L, 1.20205L, 1e-5L},
  };
  for (const auto& r : rows) {
    const real i1 = asymptotics::i1_closed(r.w);
    const real i2 = asymptotics::i2_closed(r.w);
    const real c = asymptotics::entropy_bracket(r.w).c_bracket;
    const double w = static_cast<double>(r.w);
    l.check(within_last_digit(i1, r.i1, r.i1_unit), "w = %g: I_1 = %.7Lg (table %.5Lg)", w, i1, r.i1);
    l.check(within_last_digit(i2, r.i2, r.i2_unit), "w = %g: I_2 = %.7Lg (table %.5Lg)", w, i2, r.i2);
    l.check(within_last_digit(c, r.c, r.c_unit), "w = %g: C = %.7Lg (table %.6Lg)", w, c, r.c);
  }
  const double elapsed = t.seconds();
  l.check(elapsed < 1.0, "runtime %.3f s < 1 s", elapsed);
  for (const auto& r : rows) {
    const real i2 = asymptotics::i2_exact(r.w);
    const real c = constants::zeta3 + asymptotics::i1_closed(r.w) + i2;
    l.text += "\n    info exact I_2 integral at w = " + std::to_string(static_cast<int>(r.w)) + ": I_2 = ";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.7Lg, C = %.7Lg", i2, c);
    l.text += buf;
  }
  return l;
}

Line criterion_2() {
  Line l;
  l.text = "zero-frequency Drude integral equals -zeta(3)";
  Timer t;
  const real v = asymptotics::drude_zero_frequency_integral();
  const real rel = std::fabs(v + constants::zeta3) / constants::zeta3;
  const double elapsed = t.seconds();
  l.check(rel <= 1e-10L, "integral = %.16Lg, relative deviation %.2Le <= 1e-10", v, rel);
  l.check(elapsed < 1.0, "runtime %.3f s < 1 s", elapsed);
  return l;
}

Line criterion_3() {
  Line l;
  l.text = "plasma thermal correction over the closed form at a = 100 nm: 1 +- 0.05 (50 K), 1 +- 0.005 (10 K)";
  const Material au = dielectric::gold();
  const DielectricModel plasma{ModelKind::Plasma, au};
  const struct {
    double T;
    double tol;
  } points[] = {{50.0, 0.05}, {10.0, 0.005}};
  for (const auto& p : points) {
    Timer t;
    const FilmState s{100e-9, p.T};
    const auto tc = thermo::thermal_correction(plasma, s, {}, true);
    const double closed = asymptotics::delta_f_plasma(s, au);
    const double ratio = *tc.subtraction / closed;
    const double ratio_ap = *tc.abel_plana / closed;
    l.check(std::fabs(ratio - 1.0) <= p.tol,
            "T = %g K: (F - E) / closed form = %.6f, Abel-Plana route %.6f, over 4/3 closed form %.6f (%.1f s)", p.T,
            ratio, ratio_ap, ratio_ap * 0.75, t.seconds());
  }
  return l;
}

Line criterion_4() {
  Line l;
  l.text = "plasma entropy slope d ln S / d ln T over [1, 10] K at a = 100 nm is 3.00 +- 0.05, S > 0";
  const DielectricModel plasma{ModelKind::Plasma, dielectric::gold()};
  std::vector<double> x, y;
  bool positive = true;
  for (int i = 0; i < 8; ++i) {
    const double T = std::pow(10.0, i / 7.0);
    const auto s = thermo::entropy(plasma, {100e-9, T});
    positive = positive && s.value > 0.0;
    x.push_back(std::log(T));
    y.push_back(std::log(std::max(s.value, 1e-300)));
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  l.check(std::fabs(slope - 3.0) <= 0.05, "least-squares slope on 8 log-spaced points = %.5f", slope);
  l.check(positive, "S > 0 at all points");
  return l;
}

Line criterion_5() {
  Line l;
  l.text = "Drude entropy extrapolated to T = 0 equals S_D(a, 0) within 2% at w = 1, 5, 15; S_D(a, 0) > 0";
  const Material au = dielectric::gold();
  const DielectricModel drude{ModelKind::Drude, au};
  for (double w : {15.0, 5.0, 1.0}) {
    Timer t;
    const double a = thickness_for(w);
    const double s8 = thermo::entropy(drude, {a, 8.0}).value;
    const double s4 = thermo::entropy(drude, {a, 4.0}).value;
    // Linear Richardson step towards T = 0 from T and T/2.
    const double extrapolated = 2.0 * s4 - s8;
    const auto zero = asymptotics::entropy_drude_zero({a, 0.0}, au);
    const double rel = std::fabs(extrapolated / zero.s0 - 1.0);
    l.check(rel <= 0.02 && zero.s0 > 0.0,
            "w = %g (a = %.4g nm): S(8 K) = %.6e, S(4 K) = %.6e, extrapolated %.6e, S_D(a, 0) = %.6e, "
            "deviation %.2e (%.0f s)",
            w, a * 1e9, s8, s4, extrapolated, zero.s0, rel, t.seconds());
  }
  return l;
}

Line criterion_6() {
  Line l;
  l.text = "derivatives of Phi_TE, Phi_TM at x = 0 against the closed forms (1e-5 mixed tolerance)";
  auto mixed = [](real value, real expected) {
    return std::fabs(value - expected) <= 1e-5L * std::max(1.0L, std::fabs(expected));
  };
  for (real w : {1.0L, 5.0L, 15.0L}) {
    const double wd = static_cast<double>(w);
    const auto te = casimir::testing::fit_phi_derivatives(lifshitz::Polarization::TE, w);
    const auto tm = casimir::testing::fit_phi_derivatives(lifshitz::Polarization::TM, w);
    const auto te_cf = asymptotics::phi_te_derivatives_at_zero(w);
    const auto tm_cf = asymptotics::phi_tm_derivatives_at_zero(w);
    l.check(std::fabs(te.first) < 1e-6L * te.scale, "w = %g TE: Phi'(0) = %.2Le", wd, te.first);
    l.check(mixed(te.second, te_cf.second), "w = %g TE: Phi''(0) = %.10Lg (closed %.10Lg)", wd, te.second,
            te_cf.second);
    l.check(mixed(te.third, te_cf.third), "w = %g TE: Phi'''(0) = %.10Lg (closed %.10Lg)", wd, te.third, te_cf.third);
    l.check(std::fabs(tm.first) < 1e-6L * tm.scale, "w = %g TM: Phi'(0) = %.2Le", wd, tm.first);
    l.check(mixed(tm.second, tm_cf.second), "w = %g TM: Phi''(0) = %.10Lg (closed %.10Lg)", wd, tm.second,
            tm_cf.second);
    l.check(mixed(tm.third, tm_cf.third), "w = %g TM: Phi'''(0) = %.10Lg (closed %.10Lg, expansion %.10Lg)", wd,
            tm.third, tm_cf.third, asymptotics::phi_tm_third_derivative_expansion(w));
  }
  return l;
}

Line criterion_7() {
  Line l;
  l.text = "F^(gamma) < 0 and |F^(gamma)| < X on a in {11, 55, 165} nm x T in {2, 5, 10} K; first order -> exact";
  const Material au = dielectric::gold();
  Timer t;
  for (double a : {11e-9, 55e-9, 165e-9}) {
    for (double T : {2.0, 5.0, 10.0}) {
      const FilmState s{a, T};
      const auto g = asymptotics::f_gamma(s, au);
      const auto x = asymptotics::x_bound(s, au);
      l.check(g.exact < 0.0 && std::fabs(g.exact) < x.value,
              "a = %g nm, T = %g K: F^(gamma) = %.6e, X = %.6e, |F|/X = %.3f", a * 1e9, T, g.exact, x.value,
              std::fabs(g.exact) / x.value);
    }
  }
  l.text += "\n    info grid time " + std::to_string(static_cast<int>(t.seconds())) + " s";

  const FilmState s{55e-9, 10.0};
  auto p = dielectric::dimensionless_params(au, s);
  const real pref = lifshitz::free_energy_prefactor(s);
  std::vector<double> gaps;
  for (double d : {1e-2, 1e-3, 1e-4}) {
    p.gamma_tilde = d * p.tau;
    const auto g = asymptotics::f_gamma(p, pref);
    gaps.push_back(std::fabs(g.first_order - g.exact));
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "\n    info delta_1 = %.0e: exact %.8e, first order %.8e, |gap| %.3e, Q-numerator form / exact %.4f", d,
                  g.exact, g.first_order, gaps.back(), g.first_order_q_kernel / g.exact);
    l.text += buf;
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    const double order = std::log10(gaps[i - 1] / gaps[i]);
    l.check(std::fabs(order - 2.0) <= 0.1, "gap order between successive delta_1 = %.4f (expected 2)", order);
  }
  return l;
}

Line criterion_8() {
  Line l;
  l.text = "Drude decomposition total against the direct Drude free energy, 1e-6 relative";
  const Material au = dielectric::gold();
  for (const FilmState s : {FilmState{11e-9, 300.0}, FilmState{100e-9, 50.0}}) {
    const auto d = asymptotics::drude_decompose(s, au);
    const auto f = lifshitz::free_energy({ModelKind::Drude, au}, s);
    const double rel = std::fabs(d.total - f.value) / std::fabs(f.value);
    l.check(rel <= 1e-6, "a = %g nm, T = %g K: total %.12e, direct %.12e, deviation %.2e", s.a * 1e9, s.T, d.total,
            f.value, rel);
  }
  return l;
}

Line criterion_9() {
  Line l;
  l.text = "Li_2, Li_3 against the series and K_1..K_3 against the integral on 20-point log grids (1e-12)";
  auto grid = [](real lo, real hi, int i) { return lo * std::pow(hi / lo, static_cast<real>(i) / 19.0L); };
  real worst_li = 0.0L, worst_k = 0.0L, worst_rec = 0.0L;
  for (int i = 0; i < 20; ++i) {
    const real z = std::exp(-grid(1e-2L, 30.0L, i));
    for (int k : {2, 3}) {
      real sum = 0.0L, zn = 1.0L;
      for (long n = 1;; ++n) {
        zn *= z;
        const real term = zn / std::pow(static_cast<real>(n), k);
        sum += term;
        if (term < 1e-24L * sum) break;
      }
      worst_li = std::max(worst_li, std::fabs(specialfn::polylog(k, z) - sum) / sum);
    }
    const real x = grid(0.05L, 50.0L, i);
    for (int n : {1, 2, 3}) {
      const real h = 1.0L / 128.0L;
      real sum = 0.5L * std::exp(-x);
      for (long j = 1;; ++j) {
        const real tt = h * static_cast<real>(j);
        const real term = std::exp(-x * std::cosh(tt)) * std::cosh(n * tt);
        sum += term;
        if (term < 1e-30L * sum) break;
      }
      const real ref = h * sum;
      worst_k = std::max(worst_k, std::fabs(specialfn::bessel_k(n, x) - ref) / ref);
    }
    for (int n : {1, 2}) {
      const real lhs = specialfn::bessel_k(n + 1, x);
      const real rhs = specialfn::bessel_k(n - 1, x) + 2.0L * n / x * specialfn::bessel_k(n, x);
      worst_rec = std::max(worst_rec, std::fabs(lhs - rhs) / lhs);
    }
  }
  l.check(worst_li <= 1e-12L, "max relative deviation Li_k: %.2Le", worst_li);
  l.check(worst_k <= 1e-12L, "max relative deviation K_n: %.2Le", worst_k);
  l.check(worst_rec <= 1e-12L, "max recurrence residual: %.2Le", worst_rec);
  return l;
}

Line criterion_10() {
  Line l;
  l.text = "validity window: a = 100 nm applicable for T <= 1000 K, a = 1 um for T <= 100 K";
  const auto w100 = thermo::validate_window({100e-9, 1000.0});
  const auto w1u = thermo::validate_window({1e-6, 100.0});
  const auto w1u_hot = thermo::validate_window({1e-6, 300.0});
  l.check(w100.inside, "a = 100 nm, T = 1000 K: ratio %.4f inside", w100.ratio);
  l.check(w1u.inside, "a = 1 um, T = 100 K: ratio %.4f inside", w1u.ratio);
  l.check(!w1u_hot.inside, "a = 1 um, T = 300 K: ratio %.4f outside", w1u_hot.ratio);
  l.text += "\n    info largest T inside: " + std::to_string(thermo::window_max_temperature(100e-9)) + " K (100 nm), " +
            std::to_string(thermo::window_max_temperature(1e-6)) + " K (1 um)";
  return l;
}

}  // namespace

int main() {
  const std::vector<std::function<Line()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                                       criterion_9, criterion_10};
  int unexpected = 0;
  std::vector<std::string> summary;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Line l;
    try {
      l = criteria[i]();
    } catch (const std::exception& e) {
      l.text = std::string("exception: ") + e.what();
      l.pass = false;
    }
    const auto known = kKnownDeviations.find(id);
    const bool expected_fail = known != kKnownDeviations.end();
    std::printf("criterion %d: %s  %s\n", id, l.pass ? "PASS" : "FAIL", l.text.c_str());
    if (!l.pass && expected_fail) std::printf("    known deviation: %s\n", known->second);
    if (l.pass == expected_fail) {
      ++unexpected;
      std::printf("    UNEXPECTED %s\n", l.pass ? "pass" : "failure");
    }
    std::fflush(stdout);
    summary.push_back("criterion " + std::to_string(id) + ": " + (l.pass ? "PASS" : "FAIL"));
  }
  std::printf("\nsummary\n");
  for (const auto& s : summary) std::printf("%s\n", s.c_str());
  std::printf("unexpected outcomes: %d\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
