#include "casimir/specialfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::specialfn {

namespace {

constexpr real kEps = std::numeric_limits<real>::epsilon();

// B_2, B_4, ..., B_30.
constexpr std::array<real, 15> kBernoulliEven = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
};

// zeta(-n) for n >= 0; zero for even n >= 2.
real zeta_nonpositive(int n) {
  if (n == 0) return -0.5L;
  if (n % 2 == 0) return 0.0L;
  const int m = (n + 1) / 2;  // B_{n+1} = B_{2m}
  if (m > static_cast<int>(kBernoulliEven.size())) return 0.0L;
  return -kBernoulliEven[m - 1] / static_cast<real>(n + 1);
}

real polylog_series(int k, real z, const Accuracy& acc) {
  real sum = 0.0L;
  real zn = 1.0L;
  const real target = std::min<real>(acc.abs_tol, kEps);
  for (std::size_t n = 1; n <= acc.max_terms; ++n) {
    zn *= z;
    const real nn = static_cast<real>(n);
    const real term = zn / (k == 2 ? nn * nn : nn * nn * nn);
    sum += term;
    // Remaining terms are bounded by a geometric series of ratio z.
    if (term * z / (1.0L - z) <= target * std::max<real>(sum, 1.0L)) return sum;
  }
  throw ConvergenceError("polylog: series did not converge within max_terms",
                         static_cast<double>(zn));
}

// Li_k(e^mu) for mu <= 0 small: sum_j zeta(k-j) mu^j / j! with the j = k-1
// term replaced by mu^{k-1}/(k-1)! (H_{k-1} - ln(-mu)).
real polylog_log_expansion(int k, real mu) {
  const real log_term = mu == 0.0L ? 0.0L : std::log(-mu);
  real sum = 0.0L;
  if (k == 2) {
    sum = constants::zeta2 + (mu == 0.0L ? 0.0L : mu * (1.0L - log_term));
  } else {
    sum = constants::zeta3 + constants::zeta2 * mu +
          (mu == 0.0L ? 0.0L : 0.5L * mu * mu * (1.5L - log_term));
  }
  if (mu == 0.0L) return sum;
  real power = 1.0L;  // mu^j / j!
  for (int j = 1; j < k; ++j) power *= mu / static_cast<real>(j);
  for (int j = k; j < 2 * static_cast<int>(kBernoulliEven.size()); ++j) {
    power *= mu / static_cast<real>(j);
    const real term = zeta_nonpositive(j - k) * power;
    sum += term;
    if (j > k + 2 && std::fabs(power) < kEps * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace

void Accuracy::validate() const {
  if (!(abs_tol > 0.0L)) throw DomainError("Accuracy: abs_tol must be > 0");
  if (max_terms < 1) throw DomainError("Accuracy: max_terms must be >= 1");
}

real polylog(int k, real z, const Accuracy& acc) {
  acc.validate();
  if (k != 2 && k != 3) {
    throw DomainError("polylog: order " + std::to_string(k) + " unsupported (need 2 or 3)");
  }
  if (!(z >= 0.0L && z <= 1.0L)) throw DomainError("polylog: z must lie in [0, 1]");
  if (z == 0.0L) return 0.0L;
  if (z <= 0.5L) return polylog_series(k, z, acc);
  return polylog_log_expansion(k, std::log(z));
}

real zeta3() { return constants::zeta3; }

namespace detail {

K01 bessel_k01_series(real x, const Accuracy& acc) {
  const real q = 0.25L * x * x;
  const real log_half = std::log(0.5L * x);
  const real g = constants::euler_gamma;

  real t = 1.0L;  // (x^2/4)^j / (j!)^2
  real harmonic = 0.0L;
  real i0 = 0.0L, k0_tail = 0.0L;
  real i1_sum = 0.0L, k1_sum = 0.0L;
  for (std::size_t j = 0; j <= acc.max_terms; ++j) {
    const real jj = static_cast<real>(j);
    if (j > 0) {
      t *= q / (jj * jj);
      harmonic += 1.0L / jj;
    }
    const real u = t / (jj + 1.0L);  // (x^2/4)^j / (j! (j+1)!)
    i0 += t;
    k0_tail += harmonic * t;
    i1_sum += u;
    // psi(j+1) + psi(j+2) = -2 gamma + 2 H_j + 1/(j+1)
    k1_sum += (-2.0L * g + 2.0L * harmonic + 1.0L / (jj + 1.0L)) * u;
    if (t < kEps * kEps && j > 2) {
      K01 out;
      out.k0 = -(log_half + g) * i0 + k0_tail;
      out.k1 = 1.0L / x + log_half * 0.5L * x * i1_sum - 0.25L * x * k1_sum;
      return out;
    }
  }
  throw ConvergenceError("bessel_k: small-argument series did not converge", static_cast<double>(t));
}

// Steed's continued fraction (Temme's normalisation) for nu = 0.
K01 bessel_k01_continued_fraction(real x, const Accuracy& acc) {
  const real a1 = 0.25L;
  real b = 2.0L * (1.0L + x);
  real d = 1.0L / b;
  real h = d, delh = d;
  real q1 = 0.0L, q2 = 1.0L;
  real q = a1, c = a1;
  real a = -a1;
  real s = 1.0L + q * delh;
  for (std::size_t i = 2; i <= acc.max_terms; ++i) {
    const real ii = static_cast<real>(i);
    a -= 2.0L * (ii - 1.0L);
    c = -a * c / ii;
    const real qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0L;
    d = 1.0L / (b + a * d);
    delh = (b * d - 1.0L) * delh;
    h += delh;
    const real dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) {
      h *= a1;
      K01 out;
      out.k0 = std::sqrt(constants::pi / (2.0L * x)) * std::exp(-x) / s;
      out.k1 = out.k0 * (x + 0.5L - h) / x;
      return out;
    }
  }
  throw ConvergenceError("bessel_k: continued fraction did not converge", 0.0);
}

}  // namespace detail

real bessel_k(int n, real x, const Accuracy& acc) {
  acc.validate();
  if (n < 0 || n > 3) throw DomainError("bessel_k: order must be 0, 1, 2 or 3");
  if (!(x > 0.0L)) throw DomainError("bessel_k: x must be > 0 (K_n diverges at 0)");
  const detail::K01 base = x <= detail::bessel_branch_seam ? detail::bessel_k01_series(x, acc)
                                                           : detail::bessel_k01_continued_fraction(x, acc);
  if (n == 0) return base.k0;
  if (n == 1) return base.k1;
  // Upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m is stable for K.
  const real k2 = base.k0 + (2.0L / x) * base.k1;
  if (n == 2) return k2;
  return base.k1 + (4.0L / x) * k2;
}

}  // namespace casimir::specialfn
