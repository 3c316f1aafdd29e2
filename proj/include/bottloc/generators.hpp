#pragma once

#include <stdexcept>
#include <vector>

#include "bottloc/profile.hpp"

namespace bottloc {

/// CP^n with the standard action of exponents lambda_0..lambda_n (mutually
/// distinct) and the line bundle O(d). Point i carries tangent weights
/// lambda_j - lambda_i (j != i) and line weight -d*lambda_i, which makes the
/// top Chern value come out as d^n. Always consistent.
inline FixedPointProfile cpn(const std::vector<int>& lambdas, int d) {
  if (lambdas.size() < 2) throw std::invalid_argument("cpn: need at least two exponents");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) throw std::invalid_argument("cpn: repeated exponents");
  FixedPointProfile p;
  p.dimension = static_cast<int>(lambdas.size()) - 1;
  p.flavor = Flavor::almost_complex;
  p.points.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    PointDatum pt;
    pt.tangent_weights.reserve(lambdas.size() - 1);
    for (std::size_t j = 0; j < lambdas.size(); ++j)
      if (j != i) pt.tangent_weights.push_back(lambdas[j] - lambdas[i]);
    pt.line_weight = -d * lambdas[i];
    p.points.push_back(std::move(pt));
  }
  return p;
}

/// Product manifold with the external tensor product of the two line bundles:
/// one point per pair, concatenated tangent weights, summed line weights.
/// Consistency of both factors carries over to the product.
inline FixedPointProfile product(const FixedPointProfile& p, const FixedPointProfile& q) {
  require_valid(p);
  require_valid(q);
  if (p.flavor != q.flavor) throw std::invalid_argument("product: flavor mismatch");
  FixedPointProfile out;
  out.dimension = p.dimension + q.dimension;
  out.flavor = p.flavor;
  out.points.reserve(p.points.size() * q.points.size());
  for (const auto& a : p.points)
    for (const auto& b : q.points) {
      PointDatum pt;
      pt.tangent_weights = a.tangent_weights;
      pt.tangent_weights.insert(pt.tangent_weights.end(), b.tangent_weights.begin(),
                                b.tangent_weights.end());
      pt.line_weight = a.line_weight + b.line_weight;
      out.points.push_back(std::move(pt));
    }
  return out;
}

/// Lift of the trivial bundle: every line weight becomes a.
inline FixedPointProfile constant_lift(FixedPointProfile p, int a) {
  require_valid(p);
  for (auto& pt : p.points) pt.line_weight = a;
  return p;
}

} // namespace bottloc
