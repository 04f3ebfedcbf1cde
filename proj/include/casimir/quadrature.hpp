#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature on finite and
// semi-infinite intervals. Nodes and weights come from Boost.Math at
// extended precision; the subdivision driver follows the QUADPACK QAG
// scheme (bisect the interval with the largest error estimate).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/errors.hpp"
#include "casimir/real.hpp"

namespace casimir::quadrature {

struct Tolerance {
  real rel_tol = 1e-10L;
  real abs_tol = 1e-14L;
  std::size_t max_intervals = 4000;
};

struct Result {
  real value = 0.0L;
  real error = 0.0L;
  std::size_t evaluations = 0;
};

namespace detail {

inline constexpr unsigned kKronrodPoints = 21;
using Kronrod = boost::math::quadrature::gauss_kronrod<real, kKronrodPoints>;
using Gauss = boost::math::quadrature::gauss<real, (kKronrodPoints - 1) / 2>;

struct Segment {
  real a;
  real b;
  real value;
  real error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment apply_rule(F& f, real a, real b) {
  const real mid = 0.5L * (a + b);
  const real half = 0.5L * (b - a);
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  // For 21 points the Gauss order (10) is even: the centre is a Kronrod-only
  // node, Gauss nodes sit at odd indices of the Kronrod abscissa table.
  const real fc = f(mid);
  real kronrod = fc * wk[0];
  real gauss = 0.0L;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const real fp = f(mid + half * x[i]);
    const real fm = f(mid - half * x[i]);
    kronrod += (fp + fm) * wk[i];
    if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
  }
  Segment s{a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
  // Errors below rounding level carry no information.
  s.error = std::max(s.error, 10.0L * std::numeric_limits<real>::epsilon() * std::fabs(s.value));
  return s;
}

}  // namespace detail

/// Integrates f over the finite interval [a, b].
/// Throws ConvergenceError (carrying the achieved estimate) when
/// max_intervals is exhausted before max(abs_tol, rel_tol |I|) is met.
template <class F>
Result integrate(F&& f, real a, real b, const Tolerance& tol = {}) {
  Result out;
  if (a == b) return out;
  std::priority_queue<detail::Segment> heap;
  const detail::Segment first = detail::apply_rule(f, a, b);
  heap.push(first);
  real total = first.value;
  real total_err = first.error;
  std::size_t intervals = 1;
  auto done = [&] { return total_err <= std::max(tol.abs_tol, tol.rel_tol * std::fabs(total)); };
  while (!done()) {
    if (intervals >= tol.max_intervals) {
      throw ConvergenceError("quadrature: interval limit reached (achieved error " +
                                 std::to_string(static_cast<double>(total_err)) + ")",
                             static_cast<double>(total_err));
    }
    const detail::Segment worst = heap.top();
    heap.pop();
    const real mid = 0.5L * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval can no longer be split; accept what we have.
      heap.push(worst);
      break;
    }
    const detail::Segment left = detail::apply_rule(f, worst.a, mid);
    const detail::Segment right = detail::apply_rule(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++intervals;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
  }
  // Final accurate resummation in ascending error order.
  std::vector<detail::Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  real v = 0.0L, e = 0.0L;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    v += it->value;
    e += it->error;
  }
  out.value = v;
  out.error = e;
  out.evaluations = (2 * intervals - 1) * detail::kKronrodPoints;
  return out;
}

/// Integrates f over [a, inf) with u = a + t/(1 - t), t in [0, 1).
/// f must decay fast enough that f(u) (1 + u)^2 -> 0.
template <class F>
Result integrate_semi_infinite(F&& f, real a, const Tolerance& tol = {}) {
  auto mapped = [&](real t) -> real {
    const real one_minus = 1.0L - t;
    if (one_minus <= 0.0L) return 0.0L;
    const real u = t / one_minus;
    const real value = f(a + u);
    if (value == 0.0L) return 0.0L;
    return value / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0L, 1.0L, tol);
}

}  // namespace casimir::quadrature
