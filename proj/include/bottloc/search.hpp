#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "bottloc/injectivity.hpp"
#include "bottloc/profile.hpp"

namespace bottloc {

/// Bounds for an exhaustive enumeration: r fixed points in dimension n,
/// tangent weights in [-B, B] \ {0}, canonical line weights in [0, A].
struct SearchSpec {
  int dimension = 1;
  int points = 1;
  int tangent_bound = 1;
  int line_bound = 0;
  Flavor flavor = Flavor::almost_complex;

  void validate_or_throw() const {
    if (dimension < 1) throw std::invalid_argument("SearchSpec: dimension must be >= 1");
    if (points < 1) throw std::invalid_argument("SearchSpec: point count must be >= 1");
    if (tangent_bound < 1) throw std::invalid_argument("SearchSpec: tangent bound must be >= 1");
    if (line_bound < 0) throw std::invalid_argument("SearchSpec: line bound must be >= 0");
  }
};

namespace detail {

struct TangentChoice {
  std::vector<int> weights; // sorted ascending
  Rational inverse_product; // 1 / prod(weights)
};

// All nondecreasing n-vectors over [-B..B] \ {0}, in lexicographic order.
inline std::vector<TangentChoice> tangent_choices(int n, int bound) {
  std::vector<TangentChoice> out;
  std::vector<int> current(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int depth, int low) -> void {
    if (depth == n) {
      TangentChoice choice;
      choice.weights = current;
      Integer prod = 1;
      for (int w : current) prod *= w;
      choice.inverse_product = Rational(Integer(1), prod);
      out.push_back(std::move(choice));
      return;
    }
    for (int w = low; w <= bound; ++w) {
      if (w == 0) continue;
      current[static_cast<std::size_t>(depth)] = w;
      self(self, depth + 1, w);
    }
  };
  rec(rec, 0, -bound);
  return out;
}

class ConsistentEnumerator {
public:
  ConsistentEnumerator(const SearchSpec& spec, const std::vector<TangentChoice>& choices)
      : spec_(spec), choices_(choices) {
    moments_.resize(static_cast<std::size_t>(spec.dimension));
    line_powers_.resize(static_cast<std::size_t>(spec.dimension));
    for (int t = 1; t < spec.dimension; ++t)
      line_powers_[static_cast<std::size_t>(t)] =
          pow_integer(Integer(spec.line_bound), static_cast<unsigned>(t));
  }

  // Explores every point multiset whose first choice index lies in `first`.
  void run(const std::vector<std::size_t>& first, std::set<FixedPointProfile>& results) {
    results_ = &results;
    chosen_.assign(static_cast<std::size_t>(spec_.points), 0);
    lines_.assign(static_cast<std::size_t>(spec_.points), 0);
    for (std::size_t idx : first) {
      chosen_[0] = idx;
      extend_points(1, idx, choices_[idx].inverse_product);
    }
  }

private:
  // Tangent phase: the t = 0 moment is line-weight independent and is the
  // cheapest filter. Each remaining term has magnitude at most 1.
  void extend_points(int depth, std::size_t min_index, const Rational& moment0) {
    const int remaining = spec_.points - depth;
    if (remaining == 0) {
      if (moment0.is_zero()) assign_lines(0);
      return;
    }
    if (abs(moment0) > Rational(remaining)) return;
    for (std::size_t idx = min_index; idx < choices_.size(); ++idx) {
      chosen_[static_cast<std::size_t>(depth)] = idx;
      extend_points(depth + 1, idx, moment0 + choices_[idx].inverse_product);
    }
  }

  // Line phase: check the higher moments t = 1..n-1 incrementally. A term
  // a^t / prod(k) has magnitude at most A^t.
  void assign_lines(int depth) {
    const int r = spec_.points;
    const int remaining = r - depth;
    for (int t = 1; t < spec_.dimension; ++t) {
      Rational slack = Rational(Integer(remaining) * line_powers_[static_cast<std::size_t>(t)]);
      if (abs(moments_[static_cast<std::size_t>(t)]) > slack) return;
    }
    if (remaining == 0) {
      for (int t = 1; t < spec_.dimension; ++t)
        if (!moments_[static_cast<std::size_t>(t)].is_zero()) return;
      if (std::find(lines_.begin(), lines_.end(), 0) == lines_.end()) return;
      emit();
      return;
    }
    const Rational& w = choices_[chosen_[static_cast<std::size_t>(depth)]].inverse_product;
    for (int a = 0; a <= spec_.line_bound; ++a) {
      lines_[static_cast<std::size_t>(depth)] = a;
      for (int t = 1; t < spec_.dimension; ++t)
        moments_[static_cast<std::size_t>(t)] +=
            Rational(pow_integer(Integer(a), static_cast<unsigned>(t))) * w;
      assign_lines(depth + 1);
      for (int t = 1; t < spec_.dimension; ++t)
        moments_[static_cast<std::size_t>(t)] -=
            Rational(pow_integer(Integer(a), static_cast<unsigned>(t))) * w;
    }
  }

  void emit() {
    FixedPointProfile p;
    p.dimension = spec_.dimension;
    p.flavor = spec_.flavor;
    p.points.reserve(static_cast<std::size_t>(spec_.points));
    for (int i = 0; i < spec_.points; ++i) {
      PointDatum pt;
      pt.tangent_weights = choices_[chosen_[static_cast<std::size_t>(i)]].weights;
      pt.line_weight = lines_[static_cast<std::size_t>(i)];
      p.points.push_back(std::move(pt));
    }
    results_->insert(canonicalize(p));
  }

  SearchSpec spec_;
  const std::vector<TangentChoice>& choices_;
  std::vector<std::size_t> chosen_;
  std::vector<int> lines_;
  std::vector<Rational> moments_;    // index t, used for t = 1..n-1
  std::vector<Integer> line_powers_; // A^t
  std::set<FixedPointProfile>* results_ = nullptr;
};

} // namespace detail

/// All canonical representatives of profiles within the bounds that satisfy
/// the power-sum constraints t = 0..n-1. Output is sorted and isomorph-free;
/// the worker count affects wall time only, never the result.
inline std::vector<FixedPointProfile> enumerate_consistent(const SearchSpec& spec, int workers = 1) {
  spec.validate_or_throw();
  const std::vector<detail::TangentChoice> choices =
      detail::tangent_choices(spec.dimension, spec.tangent_bound);

  std::set<FixedPointProfile> merged;
  if (workers <= 1) {
    std::vector<std::size_t> all(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) all[i] = i;
    detail::ConsistentEnumerator enumerator(spec, choices);
    enumerator.run(all, merged);
  } else {
    // Partition the tree by the first point's choice; workers share nothing.
    std::vector<std::vector<std::size_t>> slices(static_cast<std::size_t>(workers));
    for (std::size_t i = 0; i < choices.size(); ++i)
      slices[i % static_cast<std::size_t>(workers)].push_back(i);
    std::vector<std::set<FixedPointProfile>> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        detail::ConsistentEnumerator enumerator(spec, choices);
        enumerator.run(slices[static_cast<std::size_t>(w)], partial[static_cast<std::size_t>(w)]);
      });
    for (auto& t : threads) t.join();
    for (auto& s : partial) merged.merge(s);
  }
  return {merged.begin(), merged.end()};
}

/// Tally of theorem_report verdicts over a catalog of consistent profiles.
struct AuditReport {
  std::size_t profile_count = 0;
  std::array<std::size_t, 3> verified{};
  std::array<std::size_t, 3> violated{};
  std::array<std::size_t, 3> not_applicable{};
  std::size_t dichotomy_nonzero_everywhere = 0;
  std::size_t dichotomy_zero_not_somewhere = 0;
  std::size_t inconsistent = 0; // precondition breaches, reported rather than thrown
  std::optional<std::pair<FixedPointProfile, int>> first_violation; // profile, statement 1..3

  bool clean() const { return !first_violation.has_value() && inconsistent == 0; }
};

inline AuditReport catalog_audit(const std::vector<FixedPointProfile>& profiles) {
  AuditReport report;
  for (const auto& p : profiles) {
    ++report.profile_count;
    TheoremReport tr = theorem_report(p);
    if (!tr.consistency.consistent) ++report.inconsistent;
    for (std::size_t s = 0; s < 3; ++s) {
      switch (tr.verdicts[s]) {
        case Verdict::verified: ++report.verified[s]; break;
        case Verdict::violated:
          ++report.violated[s];
          if (!report.first_violation) report.first_violation = {p, static_cast<int>(s) + 1};
          break;
        case Verdict::not_applicable: ++report.not_applicable[s]; break;
      }
    }
    if (tr.dichotomy == DichotomyCase::nonzero_everywhere) ++report.dichotomy_nonzero_everywhere;
    if (tr.dichotomy == DichotomyCase::zero_not_somewhere) ++report.dichotomy_zero_not_somewhere;
  }
  return report;
}

} // namespace bottloc
