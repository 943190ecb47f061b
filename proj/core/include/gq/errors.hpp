#pragma once

#include <stdexcept>
#include <string>

namespace gq {

enum class errc {
  config_error,
  bad_index,
  not_invertible,
  nilpotent_element,
  not_a_cover,
  generator_outside_lambda_max,
  diagonal_parameter_not_in_lambda,
  dimension_mismatch,
  precondition_violated,
  not_congruent_at_zero,
  not_normalized_at_zero,
  unresolved_relation,
  verification_failed,
  cap_exceeded,
  too_large,
  unsupported,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::config_error: return "ConfigError";
    case errc::bad_index: return "BadIndex";
    case errc::not_invertible: return "NotInvertible";
    case errc::nilpotent_element: return "NilpotentElement";
    case errc::not_a_cover: return "NotACover";
    case errc::generator_outside_lambda_max: return "GeneratorOutsideLambdaMax";
    case errc::diagonal_parameter_not_in_lambda: return "DiagonalParameterNotInLambda";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::not_congruent_at_zero: return "NotCongruentAtZero";
    case errc::not_normalized_at_zero: return "NotNormalizedAtZero";
    case errc::unresolved_relation: return "UnresolvedRelation";
    case errc::verification_failed: return "VerificationFailed";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::too_large: return "TooLarge";
    case errc::unsupported: return "Unsupported";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gq
