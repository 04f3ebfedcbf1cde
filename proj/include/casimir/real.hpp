#pragma once

namespace casimir {

// Dimensionless Lifshitz sums are accumulated in extended precision: the
// thermal correction is the small difference of a Matsubara sum and its
// zero-temperature integral.
using real = long double;

}  // namespace casimir
