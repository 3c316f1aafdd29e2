#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bottloc/profile.hpp"
#include "bottloc/rational_function.hpp"

namespace bottloc {

/// Equivariant Dolbeault character sum_i prod_j 1/(1 - t^(-k_j^(i))), as an
/// exact rational function in t. Each term is singular at t = 1; only the
/// full sum can be a Laurent polynomial, and for genuine almost-complex
/// actions it is one.
inline RationalFunction dolbeault_character(const FixedPointProfile& p) {
  require_valid(p);
  if (p.flavor != Flavor::almost_complex)
    throw std::invalid_argument("dolbeault_character: requires almost-complex flavor");
  std::vector<RationalFunction> terms;
  terms.reserve(p.points.size());
  for (const auto& pt : p.points) {
    RationalFunction term = RationalFunction::one();
    for (int k : pt.tangent_weights) {
      LaurentPolynomial den = LaurentPolynomial::one() - LaurentPolynomial::monomial(1, -k);
      term = term * RationalFunction(LaurentPolynomial::one(), den);
    }
    terms.push_back(std::move(term));
  }
  return ratfun_sum(terms);
}

enum class ToddStatus {
  ok,           // character is a Laurent polynomial with integer value at t = 1
  not_laurent,  // character has a pole: data cannot come from an almost-complex action
  non_integral, // Laurent but non-integer at t = 1 (should not occur; reported, not hidden)
};

struct ToddGenusResult {
  ToddStatus status = ToddStatus::not_laurent;
  RationalFunction character;
  std::optional<LaurentPolynomial> laurent;
  Rational value_at_one;
  Integer todd; // valid when status == ok
};

/// Todd genus Td(M)[M] from fixed-point data: the character evaluated at
/// t = 1 once it is known to be a Laurent polynomial.
inline ToddGenusResult todd_genus(const FixedPointProfile& p) {
  ToddGenusResult result;
  result.character = dolbeault_character(p);
  result.laurent = as_laurent(result.character);
  if (!result.laurent) {
    result.status = ToddStatus::not_laurent;
    return result;
  }
  result.value_at_one = result.laurent->evaluate_at_one();
  if (!result.value_at_one.is_integer()) {
    result.status = ToddStatus::non_integral;
    return result;
  }
  result.status = ToddStatus::ok;
  result.todd = result.value_at_one.numerator();
  return result;
}

} // namespace bottloc
