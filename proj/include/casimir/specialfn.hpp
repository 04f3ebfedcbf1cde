#pragma once

#include <cstddef>

#include "casimir/real.hpp"

namespace casimir::specialfn {

struct Accuracy {
  real abs_tol = 1e-12L;
  std::size_t max_terms = 100000;

  /// Throws DomainError unless abs_tol > 0 and max_terms >= 1.
  void validate() const;
};

/// Li_k(z) for k in {2, 3} and z in [0, 1].
///
/// Direct power series for z <= 1/2; above that the expansion in powers of
/// ln z around z = 1 (coefficients zeta(k - j) / j!), which converges like
/// (ln z / 2 pi)^j and reaches Li_k(1) = zeta(k) exactly.
real polylog(int k, real z, const Accuracy& acc = {});

/// Modified Bessel function of the second kind K_n(x), n in {0, 1, 2, 3}, x > 0.
real bessel_k(int n, real x, const Accuracy& acc = {});

/// Apery's constant zeta(3).
real zeta3();

namespace detail {
// The two branches of bessel_k, exposed so the seam at x = 2 can be tested.
// Both return {K_0(x), K_1(x)}.
struct K01 {
  real k0;
  real k1;
};
K01 bessel_k01_series(real x, const Accuracy& acc);
K01 bessel_k01_continued_fraction(real x, const Accuracy& acc);

inline constexpr real bessel_branch_seam = 2.0L;
}  // namespace detail

}  // namespace casimir::specialfn
