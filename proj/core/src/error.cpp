#include "valtree/error.hpp"

namespace valtree {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::incompatible_valuation: return "IncompatibleValuation";
    case Errc::incompatible_field: return "IncompatibleField";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_irreducible_modulus: return "NotIrreducibleModulus";
    case Errc::parse_error: return "ParseError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::not_special_linear: return "NotSpecialLinear";
    case Errc::not_unipotent_form: return "NotUnipotentForm";
    case Errc::not_diagonal: return "NotDiagonal";
    case Errc::ball_too_large: return "BallTooLarge";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::infinite_residue_field: return "InfiniteResidueField";
    case Errc::needs_evaluation_point: return "NeedsEvaluationPoint";
    case Errc::mixed_families: return "MixedFamilies";
    case Errc::degenerate_span: return "DegenerateSpan";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace valtree
