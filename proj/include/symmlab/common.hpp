#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace symmlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Angular widths below this are treated as H^1-null and dropped.
inline constexpr double kAngleEps = 1e-12;

// Strict-positivity threshold for support indicators ({mu > 0}, {v > 0}).
inline constexpr double kPosEps = 1e-12;

// Relative slack for the full-slice flag: mu >= 2*pi*r*(1 - kFullSlack).
inline constexpr double kFullSlack = 1e-9;

/// Bad or inconsistent input data (malformed JSON, schema violation,
/// region outside domain, degenerate geometry). CLI exit code 3.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result violated a structural invariant. CLI exit code 2.
class invariant_error : public std::runtime_error {
public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

#define SYMMLAB_REQUIRE(cond, msg)                                             \
  do {                                                                         \
    if (!(cond)) throw ::symmlab::input_error(msg);                            \
  } while (0)

#define SYMMLAB_CHECK(cond, msg)                                               \
  do {                                                                         \
    if (!(cond)) throw ::symmlab::invariant_error(msg);                        \
  } while (0)

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double t) {
  double w = std::remainder(t, kTwoPi);  // [-pi, pi], ties to even
  if (w <= -kPi) w = kPi;
  return w;
}

/// Signed minimal angular difference a - b in (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

}  // namespace symmlab
