#pragma once

#include "edgeloc/errors.hpp"

namespace edgeloc {

// Planar position in the global frame. Coordinates must be finite.
struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Unit direction vector, (cos a, sin a) for some angle a.
struct BearingVector {
  double x = 0.0;
  double y = 0.0;
};

// Folds an angle (radians) into the half-open interval [-pi, pi):
// ((theta + pi) mod 2*pi) - pi with the nonnegative remainder.
// Throws GeometryError for non-finite input.
double principal_value(double theta);

// Angle of the unit vector pointing from `from` toward `to`, in [-pi, pi).
// Throws GeometryError when the two positions coincide.
double bearing_angle(const Position& from, const Position& to);

// Unit vector for a bearing angle.
BearingVector bearing_vector(double angle);

// Signed angle at `observer` from its bearing toward `from` to its bearing
// toward `to`, measured counter-clockwise, in [-pi, pi). Throws GeometryError
// when either endpoint coincides with the observer.
double subtended_angle(const Position& observer, const Position& from,
                       const Position& to);

}  // namespace edgeloc
