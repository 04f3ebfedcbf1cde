#pragma once

// CODATA 2018 exact / recommended values, SI units.
namespace casimir::constants {

inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double k_B = 1.380649e-23;       // J / K
inline constexpr double c = 2.99792458e8;         // m / s

inline constexpr long double pi = 3.141592653589793238462643383279502884L;
inline constexpr long double zeta3 = 1.202056903159594285399738161511449991L;
inline constexpr long double zeta2 = 1.644934066848226436472415166646025189L;
inline constexpr long double euler_gamma = 0.577215664901532860606512090082402431L;

}  // namespace casimir::constants
