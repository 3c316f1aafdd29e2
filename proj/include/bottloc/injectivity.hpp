#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bottloc/localize.hpp"

namespace bottloc {

/// One group of fixed points sharing a line weight s, with the localized
/// sum A = sum 1/prod(k) over the group.
struct Level {
  int line_weight = 0;
  Rational localized_sum;
  int multiplicity = 0;
};

/// The distinct line weights s_1 < ... < s_l with their sums A_1..A_l.
struct LevelDecomposition {
  std::vector<Level> levels;
  int level_count() const { return static_cast<int>(levels.size()); }
};

inline LevelDecomposition aggregate_levels(const FixedPointProfile& p) {
  require_valid(p);
  std::map<int, Level> grouped;
  for (const auto& pt : p.points) {
    Level& level = grouped[pt.line_weight];
    level.line_weight = pt.line_weight;
    level.localized_sum += Rational(Integer(1), tangent_product(pt));
    level.multiplicity += 1;
  }
  LevelDecomposition out;
  out.levels.reserve(grouped.size());
  for (auto& [s, level] : grouped) out.levels.push_back(std::move(level));
  return out;
}

enum class Classification {
  everywhere_injective,     // all line weights mutually distinct (l = r)
  somewhere_injective_only, // some line weight occurs exactly once, but not all
  not_somewhere_injective,  // no line weight occurs exactly once
};

inline bool somewhere_injective(Classification c) {
  return c != Classification::not_somewhere_injective;
}

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::everywhere_injective: return "everywhere-injective";
    case Classification::somewhere_injective_only: return "somewhere-injective-only";
    case Classification::not_somewhere_injective: return "not-somewhere-injective";
  }
  return "?";
}

/// Pure lift data: depends on the line weights only, not on consistency.
inline Classification classify(const FixedPointProfile& p) {
  LevelDecomposition levels = aggregate_levels(p);
  bool any_single = false;
  bool all_single = true;
  for (const auto& level : levels.levels) {
    if (level.multiplicity == 1)
      any_single = true;
    else
      all_single = false;
  }
  if (all_single) return Classification::everywhere_injective;
  if (any_single) return Classification::somewhere_injective_only;
  return Classification::not_somewhere_injective;
}

/// Recovers the level sums A_1..A_l from the first l moments by solving the
/// (transposed) Vandermonde system  sum_t s_t^u A_t = moment_u, u = 0..l-1.
/// Distinct s values make the system nonsingular. When l exceeds the number
/// of supplied moments the system is underdetermined and nullopt is returned.
inline std::optional<std::vector<Rational>>
vandermonde_reconstruct(const std::vector<int>& levels, const std::vector<Rational>& moments) {
  const std::size_t l = levels.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (levels[i] == levels[j])
        throw std::invalid_argument("vandermonde_reconstruct: repeated level values");
  if (l > moments.size()) return std::nullopt;
  // Gaussian elimination on the l x l system; exact over Q.
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l + 1));
  for (std::size_t u = 0; u < l; ++u) {
    for (std::size_t t = 0; t < l; ++t)
      m[u][t] = Rational(pow_integer(Integer(levels[t]), static_cast<unsigned>(u)));
    m[u][l] = moments[u];
  }
  for (std::size_t col = 0; col < l; ++col) {
    std::size_t pivot = col;
    while (pivot < l && m[pivot][col].is_zero()) ++pivot;
    if (pivot == l) throw std::logic_error("vandermonde_reconstruct: singular system");
    std::swap(m[col], m[pivot]);
    for (std::size_t row = 0; row < l; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k <= l; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  std::vector<Rational> a(l);
  for (std::size_t t = 0; t < l; ++t) a[t] = m[t][l] / m[t][t];
  return a;
}

enum class Verdict { verified, violated, not_applicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

enum class DichotomyCase { none, nonzero_everywhere, zero_not_somewhere };

/// Fixed-point lower-bound verdicts on one profile. The three statements are
/// implications; a verdict is not-applicable when the hypothesis fails,
/// verified/violated otherwise. A violated verdict on a consistent profile
/// certifies the data is unrealizable by a smooth action; on an inconsistent
/// profile the verdicts are vacuous and flagged as such.
struct TheoremReport {
  ConsistencyReport consistency;
  Classification classification = Classification::not_somewhere_injective;
  LevelDecomposition levels;
  Rational chern_top;
  std::array<Verdict, 3> verdicts{};
  DichotomyCase dichotomy = DichotomyCase::none;
  bool vacuous = false;

  bool any_violated() const {
    for (Verdict v : verdicts)
      if (v == Verdict::violated) return true;
    return false;
  }
};

/// Statement (1): chern_top != 0 implies r >= n+1.
/// Statement (2): consistent and somewhere injective implies r >= n+1.
/// Statement (3): r = n+1 and consistent implies exactly one of
///   {chern_top != 0 and everywhere injective} or
///   {chern_top  = 0 and not somewhere injective}.
inline TheoremReport theorem_report(const FixedPointProfile& p) {
  TheoremReport report;
  report.consistency = consistency_check(p);
  report.classification = classify(p);
  report.levels = aggregate_levels(p);
  report.chern_top = report.consistency.chern_top;
  report.vacuous = !report.consistency.consistent;

  const int n = p.dimension;
  const int r = p.point_count();
  const bool chern_nonzero = !report.chern_top.is_zero();
  const bool enough_points = r >= n + 1;

  report.verdicts[0] = !chern_nonzero ? Verdict::not_applicable
                       : enough_points ? Verdict::verified
                                       : Verdict::violated;

  const bool stmt2_hyp = report.consistency.consistent && somewhere_injective(report.classification);
  report.verdicts[1] = !stmt2_hyp       ? Verdict::not_applicable
                       : enough_points ? Verdict::verified
                                       : Verdict::violated;

  if (r != n + 1 || !report.consistency.consistent) {
    report.verdicts[2] = Verdict::not_applicable;
  } else if (chern_nonzero && report.classification == Classification::everywhere_injective) {
    report.verdicts[2] = Verdict::verified;
    report.dichotomy = DichotomyCase::nonzero_everywhere;
  } else if (!chern_nonzero && report.classification == Classification::not_somewhere_injective) {
    report.verdicts[2] = Verdict::verified;
    report.dichotomy = DichotomyCase::zero_not_somewhere;
  } else {
    report.verdicts[2] = Verdict::violated;
  }
  return report;
}

} // namespace bottloc
