#pragma once

#include <stdexcept>
#include <vector>

#include "bottloc/profile.hpp"
#include "bottloc/symmetric.hpp"

namespace bottloc {

/// Product of the tangent weights at one fixed point. Well-defined in both
/// flavors: an even number of sign changes leaves it fixed.
inline Integer tangent_product(const PointDatum& pt) {
  Integer prod = 1;
  for (int w : pt.tangent_weights) prod *= w;
  return prod;
}

/// The localized power sum  sum_i a_i^t / prod_j k_j^(i),  with 0^0 = 1.
/// For realizable data this vanishes for t < n and equals (c_1(L))^n[M] at t = n.
inline Rational power_sum(const FixedPointProfile& p, int t) {
  require_valid(p);
  if (t < 0) throw std::invalid_argument("power_sum: negative exponent");
  Rational sum = 0;
  for (const auto& pt : p.points)
    sum += Rational(pow_integer(Integer(pt.line_weight), static_cast<unsigned>(t)),
                    tangent_product(pt));
  return sum;
}

/// The localized value of (c_1(L))^n[M]: the t = n power sum.
inline Rational chern_top(const FixedPointProfile& p) {
  return power_sum(p, p.dimension);
}

struct MomentCheck {
  int t = 0;
  Rational value;
  bool pass = false; // value == 0
};

struct ConsistencyReport {
  std::vector<MomentCheck> moments; // t = 0 .. n-1
  Rational chern_top;
  bool chern_integral = true; // a genuine Chern number is an integer
  bool consistent = false;    // all moments vanish
};

/// Checks the necessary power-sum constraints t = 0..n-1 and reports the
/// top Chern value. Non-integral chern_top is a warning, not an error: it
/// certifies the data is unrealizable but the profile is still well-formed.
inline ConsistencyReport consistency_check(const FixedPointProfile& p) {
  require_valid(p);
  ConsistencyReport report;
  report.consistent = true;
  for (int t = 0; t < p.dimension; ++t) {
    MomentCheck check;
    check.t = t;
    check.value = power_sum(p, t);
    check.pass = check.value.is_zero();
    if (!check.pass) report.consistent = false;
    report.moments.push_back(std::move(check));
  }
  report.chern_top = chern_top(p);
  report.chern_integral = report.chern_top.is_integer();
  return report;
}

/// Localized Chern-number sum for a rank-m bundle: evaluates f at the
/// elementary symmetric values of each fiber's weights and divides by the
/// tangent-weight product. The weighted degree of f must equal n exactly;
/// for general bundles the low-degree identity fails, so a mismatch is an
/// error rather than a silent zero.
inline Rational localize_symmetric(const FixedPointProfile& p, const BundleFiberData& b,
                                   const SymmetricPolynomial& f) {
  require_valid(p);
  if (f.rank() != b.rank)
    throw std::invalid_argument("localize_symmetric: polynomial rank != bundle rank");
  if (static_cast<int>(b.fibers.size()) != p.point_count())
    throw std::invalid_argument("localize_symmetric: one fiber per fixed point required");
  for (const auto& fiber : b.fibers)
    if (static_cast<int>(fiber.size()) != b.rank)
      throw std::invalid_argument("localize_symmetric: fiber weight count != rank");
  if (f.weighted_degree() != p.dimension)
    throw std::invalid_argument("localize_symmetric: weighted degree of f must equal the dimension");
  Rational sum = 0;
  for (int i = 0; i < p.point_count(); ++i) {
    std::vector<Integer> e = elementary_symmetric(b.fibers[static_cast<std::size_t>(i)]);
    e.erase(e.begin()); // evaluate_at_elementary expects e_1..e_m
    sum += f.evaluate_at_elementary(e) / Rational(tangent_product(p.points[static_cast<std::size_t>(i)]));
  }
  return sum;
}

} // namespace bottloc
