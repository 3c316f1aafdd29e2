#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bottloc/rational.hpp"

namespace bottloc {

/// e_0..e_m of the given values, as exact integers.
inline std::vector<Integer> elementary_symmetric(const std::vector<int>& values) {
  std::vector<Integer> e(values.size() + 1);
  e[0] = 1;
  std::size_t used = 0;
  for (int v : values) {
    ++used;
    for (std::size_t d = used; d >= 1; --d) e[d] += Integer(v) * e[d - 1];
  }
  return e;
}

/// Weighted-homogeneous polynomial in the elementary-symmetric generators
/// e_1..e_m. A term maps an exponent vector (d_1..d_m) to a nonzero
/// coefficient; every term has the same weighted degree sum(i*d_i).
class SymmetricPolynomial {
public:
  SymmetricPolynomial(int rank, std::map<std::vector<int>, Rational> terms)
      : rank_(rank), terms_(std::move(terms)) {
    if (rank_ < 1) throw std::invalid_argument("SymmetricPolynomial: rank must be positive");
    if (terms_.empty()) throw std::invalid_argument("SymmetricPolynomial: no terms");
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
      if (static_cast<int>(exps.size()) != rank_)
        throw std::invalid_argument("SymmetricPolynomial: exponent vector length != rank");
      if (coeff.is_zero())
        throw std::invalid_argument("SymmetricPolynomial: zero coefficient stored");
      int degree = 0;
      for (int i = 0; i < rank_; ++i) {
        if (exps[i] < 0) throw std::invalid_argument("SymmetricPolynomial: negative exponent");
        degree += (i + 1) * exps[i];
      }
      if (first) {
        weighted_degree_ = degree;
        first = false;
      } else if (degree != weighted_degree_) {
        throw std::invalid_argument("SymmetricPolynomial: mixed weighted degrees");
      }
    }
  }

  /// The single term e_i^power (1-based generator index).
  static SymmetricPolynomial generator_power(int rank, int generator, int power) {
    if (generator < 1 || generator > rank)
      throw std::invalid_argument("SymmetricPolynomial: generator index out of range");
    std::vector<int> exps(static_cast<std::size_t>(rank), 0);
    exps[static_cast<std::size_t>(generator - 1)] = power;
    return SymmetricPolynomial(rank, {{std::move(exps), Rational(1)}});
  }

  int rank() const { return rank_; }
  int weighted_degree() const { return weighted_degree_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  /// Substitutes concrete values for the generators; e_values[i] is e_{i+1}.
  Rational evaluate_at_elementary(const std::vector<Integer>& e_values) const {
    if (static_cast<int>(e_values.size()) != rank_)
      throw std::invalid_argument("SymmetricPolynomial: wrong number of generator values");
    Rational sum = 0;
    for (const auto& [exps, coeff] : terms_) {
      Rational term = coeff;
      for (int i = 0; i < rank_; ++i)
        if (exps[i] > 0)
          term *= Rational(pow_integer(e_values[static_cast<std::size_t>(i)],
                                       static_cast<unsigned>(exps[i])));
      sum += term;
    }
    return sum;
  }

private:
  int rank_;
  int weighted_degree_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

} // namespace bottloc
