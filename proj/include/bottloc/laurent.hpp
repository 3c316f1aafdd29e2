#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bottloc/rational.hpp"

namespace bottloc {

/// Laurent polynomial in one formal variable t, stored as a sorted
/// association exponent -> coefficient. No stored coefficient is zero,
/// so equality is plain coefficient-wise comparison.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default; // zero polynomial

  static LaurentPolynomial constant(Rational c) { return monomial(std::move(c), 0); }
  static LaurentPolynomial one() { return constant(1); }

  static LaurentPolynomial monomial(Rational c, int exponent) {
    LaurentPolynomial p;
    if (!c.is_zero()) p.coeffs_.emplace(exponent, std::move(c));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == Rational(1);
  }

  const std::map<int, Rational>& terms() const { return coeffs_; }

  Rational coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational() : it->second;
  }

  int min_exponent() const {
    require_nonzero();
    return coeffs_.begin()->first;
  }
  int max_exponent() const {
    require_nonzero();
    return coeffs_.rbegin()->first;
  }

  Rational coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add_term(int exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  /// Multiplication by t^delta.
  LaurentPolynomial shifted(int delta) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + delta, c);
    return out;
  }

  Rational evaluate(const Rational& x) const {
    if (x.is_zero() && !is_zero() && min_exponent() < 0)
      throw std::domain_error("LaurentPolynomial: evaluation at 0 with negative exponents");
    Rational sum = 0;
    for (const auto& [e, c] : coeffs_) {
      if (e >= 0) {
        sum += c * Rational(pow_integer(x.numerator(), static_cast<unsigned>(e)),
                            pow_integer(x.denominator(), static_cast<unsigned>(e)));
      } else {
        sum += c * Rational(pow_integer(x.denominator(), static_cast<unsigned>(-e)),
                            pow_integer(x.numerator(), static_cast<unsigned>(-e)));
      }
    }
    return sum;
  }

  Rational evaluate_at_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.coeffs_) out.add_term(e, c);
    return out;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.coeffs_) out.add_term(e, -c);
    return out;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out;
    for (const auto& [e, c] : a.coeffs_) out.coeffs_.emplace(e, -c);
    return out;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) {
    LaurentPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.coeffs_) out.coeffs_.emplace(e, c * pc);
    return out;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Rational a = bottloc::abs(c);
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      bool unit = a == Rational(1);
      if (e == 0) {
        out += a.str();
      } else {
        if (!unit) out += a.str() + "*";
        out += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
    return os << p.str();
  }

private:
  void require_nonzero() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPolynomial: zero polynomial has no exponent range");
  }

  std::map<int, Rational> coeffs_;
};

} // namespace bottloc
