#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bottloc/rational.hpp"

namespace bottloc {

/// Sign regime for tangent weights. Almost-complex data has fixed signs;
/// oriented data is defined only up to an even number of sign changes per point.
enum class Flavor { oriented, almost_complex };

inline std::string to_string(Flavor f) {
  return f == Flavor::oriented ? "oriented" : "almost-complex";
}

/// One isolated fixed point: n nonzero tangent weights and one line-bundle weight.
struct PointDatum {
  std::vector<int> tangent_weights;
  int line_weight = 0;

  friend auto operator<=>(const PointDatum&, const PointDatum&) = default;
};

/// Localized weight data of a circle action: dimension n (half the real
/// dimension), a sign flavor, and one PointDatum per fixed point.
struct FixedPointProfile {
  int dimension = 0;
  Flavor flavor = Flavor::almost_complex;
  std::vector<PointDatum> points;

  int point_count() const { return static_cast<int>(points.size()); }

  friend bool operator==(const FixedPointProfile&, const FixedPointProfile&) = default;

  // Lexicographic: (n, r, flavor), then the point list.
  friend bool operator<(const FixedPointProfile& a, const FixedPointProfile& b) {
    int ra = a.point_count();
    int rb = b.point_count();
    return std::tie(a.dimension, ra, a.flavor, a.points) <
           std::tie(b.dimension, rb, b.flavor, b.points);
  }
};

/// Integer fiber weights of a rank-m equivariant bundle, one m-tuple per fixed point.
struct BundleFiberData {
  int rank = 0;
  std::vector<std::vector<int>> fibers;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Reports every structural violation; an empty report means the profile is usable.
inline ValidationReport validate(const FixedPointProfile& p) {
  ValidationReport report;
  if (p.dimension < 1) report.violations.push_back("dimension must be at least 1");
  if (p.points.empty()) report.violations.push_back("profile has no fixed points");
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const auto& pt = p.points[i];
    if (static_cast<int>(pt.tangent_weights.size()) != p.dimension)
      report.violations.push_back("point " + std::to_string(i) + ": wrong tangent-weight count");
    for (int w : pt.tangent_weights)
      if (w == 0) {
        report.violations.push_back("point " + std::to_string(i) + ": zero tangent weight");
        break;
      }
  }
  return report;
}

inline void require_valid(const FixedPointProfile& p) {
  ValidationReport report = validate(p);
  if (report.ok()) return;
  std::string msg = "invalid profile:";
  for (const auto& v : report.violations) msg += " " + v + ";";
  throw std::invalid_argument(msg);
}

/// Switches to another lifting: every line weight shifts by the same integer.
inline FixedPointProfile relift(FixedPointProfile p, int shift) {
  for (auto& pt : p.points) pt.line_weight += shift;
  return p;
}

/// Replaces each line weight by the sum of the point's tangent weights,
/// the weight of the induced action on the top exterior power of the
/// tangent bundle. Meaningful only when tangent signs are fixed data.
inline FixedPointProfile determinant_lift(FixedPointProfile p) {
  if (p.flavor != Flavor::almost_complex)
    throw std::invalid_argument("determinant_lift: requires almost-complex flavor");
  for (auto& pt : p.points) {
    int sum = 0;
    for (int w : pt.tangent_weights) sum += w;
    pt.line_weight = sum;
  }
  return p;
}

namespace detail {

// Lexicographically least sorted weight vector over the allowed sign changes.
inline std::vector<int> minimal_tangent_form(std::vector<int> weights, Flavor flavor) {
  std::sort(weights.begin(), weights.end());
  if (flavor == Flavor::almost_complex) return weights;
  std::vector<int> best = weights;
  const unsigned n = static_cast<unsigned>(weights.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<int> variant = weights;
    for (unsigned j = 0; j < n; ++j)
      if (mask >> j & 1) variant[j] = -variant[j];
    std::sort(variant.begin(), variant.end());
    if (variant < best) best = variant;
  }
  return best;
}

inline FixedPointProfile canonical_candidate(const FixedPointProfile& p, int direction) {
  FixedPointProfile out;
  out.dimension = p.dimension;
  out.flavor = p.flavor;
  out.points.reserve(p.points.size());
  for (const auto& pt : p.points) {
    PointDatum q;
    q.tangent_weights = pt.tangent_weights;
    for (int& w : q.tangent_weights) w *= direction;
    q.tangent_weights = minimal_tangent_form(std::move(q.tangent_weights), p.flavor);
    q.line_weight = direction * pt.line_weight;
    out.points.push_back(std::move(q));
  }
  if (!out.points.empty()) {
    int min_line = out.points.front().line_weight;
    for (const auto& pt : out.points) min_line = std::min(min_line, pt.line_weight);
    for (auto& pt : out.points) pt.line_weight -= min_line;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

} // namespace detail

/// The lexicographically least profile in the equivalence class generated by
/// point permutation, within-point weight reordering (plus even sign flips in
/// the oriented flavor), a common line-weight shift (anchored at min = 0),
/// and reversal of the circle direction (global negation).
inline FixedPointProfile canonicalize(const FixedPointProfile& p) {
  FixedPointProfile pos = detail::canonical_candidate(p, +1);
  FixedPointProfile neg = detail::canonical_candidate(p, -1);
  return neg < pos ? neg : pos;
}

} // namespace bottloc
