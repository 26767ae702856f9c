#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schmidt {

enum class errc {
  non_fundamental,
  mixed_discriminant,
  both_zero,
  not_euclidean_field,
  division_by_zero,
  not_prime,
  non_unit_determinant,
  not_coprime,
  not_reduced,
  not_a_unit,
  not_tangent,
  not_principal,
  rank_deficient,
  not_primeval,
  search_exhausted,
  not_invertible_residue,
  non_integer_result,
  no_ghost_circle,
  certificate_failure,
  parse_error,
  io_error,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::non_fundamental: return "NonFundamental";
    case errc::mixed_discriminant: return "MixedDiscriminant";
    case errc::both_zero: return "BothZero";
    case errc::not_euclidean_field: return "NotEuclideanField";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_prime: return "NotPrime";
    case errc::non_unit_determinant: return "NonUnitDeterminant";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_reduced: return "NotReduced";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_tangent: return "NotTangent";
    case errc::not_principal: return "NotPrincipal";
    case errc::rank_deficient: return "RankDeficient";
    case errc::not_primeval: return "NotPrimeval";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::not_invertible_residue: return "NotInvertibleResidue";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::no_ghost_circle: return "NoGhostCircle";
    case errc::certificate_failure: return "CertificateFailure";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IOError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an `error` carrying a code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace schmidt
