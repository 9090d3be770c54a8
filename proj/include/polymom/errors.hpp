#ifndef POLYMOM_ERRORS_HPP
#define POLYMOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polymom {

enum class errc {
  invalid_input,
  invalid_cycle,
  invalid_triangulation,
  mode_error,
  on_boundary,
  no_convergence,
  singular_matrix,
  degenerate_input,
  degree_overflow,
  consistency_failure,
  recurrence_violation,
  insufficient_moments,
  singular_moment_matrix,
  no_matching_order,
  non_generic_config,
  degree_mismatch,
  root_mismatch,
  degenerate_triangle,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "InvalidInput";
    case errc::invalid_cycle: return "InvalidCycle";
    case errc::invalid_triangulation: return "InvalidTriangulation";
    case errc::mode_error: return "ModeError";
    case errc::on_boundary: return "OnBoundary";
    case errc::no_convergence: return "NoConvergence";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::consistency_failure: return "ConsistencyFailure";
    case errc::recurrence_violation: return "RecurrenceViolation";
    case errc::insufficient_moments: return "InsufficientMoments";
    case errc::singular_moment_matrix: return "SingularMomentMatrix";
    case errc::no_matching_order: return "NoMatchingOrder";
    case errc::non_generic_config: return "NonGenericConfig";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::root_mismatch: return "RootMismatch";
    case errc::degenerate_triangle: return "DegenerateTriangle";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace polymom

#endif
