#include <cmath>
#include <vector>

#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/specialfn.hpp"

using namespace casimir;
using casimir::real;

namespace {

real polylog_series(int k, real z) {
  real sum = 0.0L, zn = 1.0L;
  for (long n = 1; n < 10'000'000; ++n) {
    zn *= z;
    const real term = zn / std::pow(static_cast<real>(n), k);
    sum += term;
    if (term < 1e-24L * sum) break;
  }
  return sum;
}

// K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt; the trapezoid rule converges
// exponentially for this analytic, rapidly decaying integrand.
real bessel_integral(int n, real x) {
  const real h = 1.0L / 128.0L;
  real sum = 0.5L * std::exp(-x);
  for (long i = 1;; ++i) {
    const real t = h * static_cast<real>(i);
    const real term = std::exp(-x * std::cosh(t)) * std::cosh(n * t);
    sum += term;
    if (term < 1e-30L * sum) break;
  }
  return h * sum;
}

std::vector<real> log_grid(real lo, real hi, int n) {
  std::vector<real> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<real>(i) / (n - 1)));
  return out;
}

}  // namespace

TEST_SUITE("specialfn") {
  TEST_CASE("polylog matches the direct series on a log grid of e^{-w}") {
    for (real w : log_grid(1e-2L, 30.0L, 20)) {
      const real z = std::exp(-w);
      for (int k : {2, 3}) {
        const real ref = polylog_series(k, z);
        CHECK(std::fabs(specialfn::polylog(k, z) - ref) <= 1e-12L * ref);
      }
    }
  }

  TEST_CASE("polylog reference values and endpoints") {
    CHECK(specialfn::polylog(2, 0.0L) == 0.0L);
    CHECK(static_cast<double>(specialfn::polylog(2, 1.0L)) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-15));
    CHECK(static_cast<double>(specialfn::polylog(3, 1.0L)) == doctest::Approx(1.2020569031595943).epsilon(1e-15));
    CHECK(static_cast<double>(specialfn::polylog(2, 0.5L)) == doctest::Approx(0.5822405264650125).epsilon(1e-14));
    CHECK(static_cast<double>(specialfn::polylog(3, 0.5L)) == doctest::Approx(0.5372131936080402).epsilon(1e-14));
    CHECK(static_cast<double>(specialfn::polylog(2, 0.999L)) == doctest::Approx(1.6370226052761177).epsilon(1e-14));
    CHECK(static_cast<double>(specialfn::polylog(3, 0.999L)) == doctest::Approx(1.2004153539954643).epsilon(1e-14));
    CHECK_THROWS_AS(specialfn::polylog(4, 0.5L), DomainError);
    CHECK_THROWS_AS(specialfn::polylog(2, 1.5L), DomainError);
    CHECK_THROWS_AS(specialfn::polylog(2, -0.1L), DomainError);
  }

  TEST_CASE("bessel_k matches the integral representation on a log grid") {
    for (real x : log_grid(0.05L, 50.0L, 20)) {
      for (int n : {0, 1, 2, 3}) {
        const real ref = bessel_integral(n, x);
        CHECK(std::fabs(specialfn::bessel_k(n, x) - ref) <= 1e-12L * ref);
      }
    }
  }

  TEST_CASE("bessel_k reference values") {
    const struct {
      double x;
      double k[4];
    } table[] = {
        {0.1, {2.427069024702017, 9.853844780870606, 199.5039646421141, 7990.012430465435}},
        {1.0, {0.4210244382407083, 0.6019072301972346, 1.624838898635177, 7.101262824737945}},
        {2.0, {0.1138938727495334, 0.1398658818165225, 0.2537597545660559, 0.6473853909486342}},
        {5.0, {0.003691098334042594, 0.004044613445452164, 0.005308943712223460, 0.008291768415230932}},
        {20.0, {5.741237815336524e-10, 5.883057969557038e-10, 6.329543612292228e-10, 7.148966692015484e-10}},
    };
    for (const auto& row : table) {
      for (int n = 0; n < 4; ++n) {
        CHECK(static_cast<double>(specialfn::bessel_k(n, row.x)) == doctest::Approx(row.k[n]).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("bessel recurrence K_{n+1} = K_{n-1} + (2n/x) K_n") {
    for (real x : log_grid(0.05L, 50.0L, 20)) {
      for (int n : {1, 2}) {
        const real lhs = specialfn::bessel_k(n + 1, x);
        const real rhs = specialfn::bessel_k(n - 1, x) + 2.0L * n / x * specialfn::bessel_k(n, x);
        CHECK(std::fabs(lhs - rhs) <= 1e-12L * lhs);
      }
    }
  }

  TEST_CASE("series and continued-fraction branches agree at the seam") {
    const specialfn::Accuracy acc{1e-18L, 100000};
    for (real x : {1.5L, specialfn::detail::bessel_branch_seam, 2.5L}) {
      const auto s = specialfn::detail::bessel_k01_series(x, acc);
      const auto c = specialfn::detail::bessel_k01_continued_fraction(x, acc);
      CHECK(std::fabs(s.k0 - c.k0) <= 1e-14L * c.k0);
      CHECK(std::fabs(s.k1 - c.k1) <= 1e-14L * c.k1);
    }
  }

  TEST_CASE("bessel_k domain") {
    CHECK_THROWS_AS(specialfn::bessel_k(1, 0.0L), DomainError);
    CHECK_THROWS_AS(specialfn::bessel_k(4, 1.0L), DomainError);
    CHECK(specialfn::bessel_k(3, 2000.0L) >= 0.0L);
  }

  TEST_CASE("zeta3") { CHECK(specialfn::zeta3() == constants::zeta3); }

  TEST_CASE("Accuracy validation") {
    CHECK_THROWS_AS(specialfn::Accuracy({0.0L, 10}).validate(), DomainError);
    CHECK_THROWS_AS(specialfn::Accuracy({1e-12L, 0}).validate(), DomainError);
  }
}
