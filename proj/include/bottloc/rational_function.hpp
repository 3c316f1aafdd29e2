#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bottloc/laurent.hpp"

namespace bottloc {

namespace detail {

// Dense univariate polynomial over Q, index = exponent. Trimmed: no trailing zeros.
using DensePoly = std::vector<Rational>;

inline void trim(DensePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline DensePoly to_dense(const LaurentPolynomial& p) {
  DensePoly out;
  if (p.is_zero()) return out;
  if (p.min_exponent() < 0) throw std::logic_error("to_dense: negative exponent");
  out.resize(static_cast<std::size_t>(p.max_exponent()) + 1);
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

inline LaurentPolynomial from_dense(const DensePoly& p) {
  LaurentPolynomial out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) out.add_term(static_cast<int>(i), p[i]);
  return out;
}

// Remainder of a modulo b (b nonzero).
inline DensePoly poly_mod(DensePoly a, const DensePoly& b) {
  trim(a);
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational q = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

inline void make_monic(DensePoly& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  if (lead == Rational(1)) return;
  for (auto& c : p) c /= lead;
}

// Monic gcd; remainders are rescaled each step to keep coefficients small.
inline DensePoly poly_gcd(DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = poly_mod(std::move(a), b);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

inline DensePoly poly_divide_exact(const DensePoly& a, const DensePoly& b) {
  if (b.empty()) throw std::domain_error("poly_divide_exact: division by zero");
  DensePoly rem = a;
  trim(rem);
  DensePoly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
  const Rational& lead = b.back();
  while (rem.size() >= b.size()) {
    Rational q = rem.back() / lead;
    std::size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw std::logic_error("poly_divide_exact: nonzero remainder");
  trim(quot);
  return quot;
}

} // namespace detail

/// Quotient of Laurent polynomials in canonical reduced form:
/// the denominator is an ordinary polynomial with constant coefficient 1,
/// numerator and denominator share no nonconstant factor, and any t-power
/// factor is carried on the numerator. Equality is structural.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(LaurentPolynomial::one()) {}

  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator) {
    if (denominator.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (numerator.is_zero()) {
      num_ = LaurentPolynomial();
      den_ = LaurentPolynomial::one();
      return;
    }
    int en = numerator.min_exponent();
    int ed = denominator.min_exponent();
    detail::DensePoly n0 = detail::to_dense(numerator.shifted(-en));
    detail::DensePoly d0 = detail::to_dense(denominator.shifted(-ed));
    detail::DensePoly g = detail::poly_gcd(n0, d0);
    if (g.size() > 1) {
      n0 = detail::poly_divide_exact(n0, g);
      d0 = detail::poly_divide_exact(d0, g);
    }
    // Both constant terms are nonzero after the shift; anchor den[0] at 1.
    Rational scale = d0.front();
    for (auto& c : n0) c /= scale;
    for (auto& c : d0) c /= scale;
    num_ = detail::from_dense(n0).shifted(en - ed);
    den_ = detail::from_dense(d0);
  }

  static RationalFunction from_laurent(LaurentPolynomial p) {
    return RationalFunction(std::move(p), LaurentPolynomial::one());
  }
  static RationalFunction constant(Rational c) {
    return from_laurent(LaurentPolynomial::constant(std::move(c)));
  }
  static RationalFunction one() { return constant(1); }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
  }

private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// Exact sum of a list of rational functions, in canonical form.
inline RationalFunction ratfun_sum(const std::vector<RationalFunction>& terms) {
  RationalFunction sum;
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

/// The Laurent polynomial equal to f, when one exists; NotLaurent otherwise.
inline std::optional<LaurentPolynomial> as_laurent(const RationalFunction& f) {
  if (f.denominator().is_one()) return f.numerator();
  return std::nullopt;
}

} // namespace bottloc
