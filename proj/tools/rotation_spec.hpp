#pragma once

// Parsing of the --rotation argument: a named preset ("identity",
// "xw:<angle>"), an angle tuple ("zyz:t,p,s" or "so4:psi,phi,theta,t,p,s"),
// or 9/16 comma-separated matrix entries in row-major order.  Angles are
// radians unless prefixed with "deg:".

#include <string>

#include "cliffsym/rotation.hpp"

namespace cliffsymtool {

struct RotationSpec {
  int dim = 4;  // 3 or 4
  cliffsym::Rotation3 r3;
  cliffsym::Rotation4 r4;
};

double parse_angle(const std::string& token);

// dim_hint selects the dimension of dimension-agnostic presets.  Explicit
// matrices are validated at tolerance 1e-6 and may throw geometry_error.
RotationSpec parse_rotation_spec(const std::string& text, int dim_hint);

}  // namespace cliffsymtool
