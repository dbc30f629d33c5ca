#pragma once

#include <stdexcept>
#include <string>

namespace cliffsym {

// Distinguished failure kinds surfaced by the geometry routines.  Plain
// precondition violations (bad indices, zero vectors, mismatched norms)
// throw std::invalid_argument instead.
enum class errc {
  not_orthogonal,
  determinant_minus_one,
  pole_projection,
  not_on_sphere,
  degenerate_intersection,
  great_circle,
  center_inversion,
  not_great_sphere,
  center_in_forbidden_segment,
  block_form_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_orthogonal: return "NotOrthogonal";
    case errc::determinant_minus_one: return "DeterminantMinusOne";
    case errc::pole_projection: return "PoleProjection";
    case errc::not_on_sphere: return "NotOnSphere";
    case errc::degenerate_intersection: return "DegenerateIntersection";
    case errc::great_circle: return "GreatCircle";
    case errc::center_inversion: return "CenterInversion";
    case errc::not_great_sphere: return "NotGreatSphere";
    case errc::center_in_forbidden_segment: return "CenterInForbiddenSegment";
    case errc::block_form_failure: return "BlockFormFailure";
  }
  return "UnknownError";
}

class geometry_error : public std::runtime_error {
 public:
  geometry_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cliffsym
