#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valtree {

enum class Errc {
  division_by_zero,
  incompatible_valuation,
  incompatible_field,
  invalid_argument,
  not_prime,
  not_irreducible_modulus,
  parse_error,
  dimension_mismatch,
  singular_matrix,
  not_special_linear,
  not_unipotent_form,
  not_diagonal,
  ball_too_large,
  unsupported_dimension,
  infinite_residue_field,
  needs_evaluation_point,
  mixed_families,
  degenerate_span,
  not_irreducible,
  invariant_violation,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace valtree
