#pragma once

namespace kpzlab::kernels {

struct AiryValues {
  double ai;   // Ai(x)
  double aip;  // Ai'(x)
  double bi;   // Bi(x)
  double bip;  // Bi'(x)
};

/// Airy functions of the first and second kind with derivatives.
///
/// Supported range x in [-40, 40] (ConfigError outside). Absolute error of
/// Ai, Ai' is well below 1e-10 across [-15, 10]; relative error stays near
/// machine level over the whole range.
///
/// Method: Maclaurin series around 0 for |x| <= 2.5; modified-Bessel-K
/// integral representation for Ai on the right; Taylor-series marching of
/// the ODE y'' = xy for the oscillatory region and for Bi on the right
/// (where Bi is the dominant solution, so marching is stable). Values are
/// tabulated once on a fine grid and each call does a single short Taylor
/// step from the nearest station.
AiryValues airy_fn(double x);

/// Range accepted by airy_fn.
inline constexpr double kAiryRangeMax = 40.0;

}  // namespace kpzlab::kernels
