#include "edgeloc/geometry.hpp"

#include <cmath>
#include <numbers>

namespace edgeloc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double principal_value(double theta) {
  if (!std::isfinite(theta)) {
    throw GeometryError("principal_value: angle is not finite");
  }
  double r = std::fmod(theta + kPi, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod is exact, but the += above can round up to exactly 2*pi; keep the
  // result inside the half-open interval.
  if (r >= kTwoPi) {
    r -= kTwoPi;
  }
  return r - kPi;
}

double bearing_angle(const Position& from, const Position& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  if (dx == 0.0 && dy == 0.0) {
    throw GeometryError("bearing_angle: coincident positions");
  }
  // atan2 may return +pi; fold onto [-pi, pi).
  return principal_value(std::atan2(dy, dx));
}

BearingVector bearing_vector(double angle) {
  return BearingVector{std::cos(angle), std::sin(angle)};
}

double subtended_angle(const Position& observer, const Position& from,
                       const Position& to) {
  return principal_value(bearing_angle(observer, to) -
                         bearing_angle(observer, from));
}

}  // namespace edgeloc
