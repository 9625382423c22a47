#ifndef PACT_COVER_HPP
#define PACT_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pact/entropy.hpp"
#include "pact/system.hpp"

namespace pact::cover {

struct FiniteCover {
    std::vector<Bits> sets;
    std::vector<std::string> labels;  // may be empty

    int size() const { return static_cast<int>(sets.size()); }
};

// Throws unless the members are nonempty and jointly cover the carrier.
void validate_cover(const FinitePartialSystem& sys, const FiniteCover& U);

// Cells of metric balls of radius eps, taken greedily in carrier order.
FiniteCover ball_partition(const FinitePartialSystem& sys, double eps);

// The pulled-back family: preimages alpha_n^{-1}(U & X_n) plus the members
// meeting the complement of X_{-n}. Always a cover of the carrier (checked).
FiniteCover pull_back(const FinitePartialSystem& sys, const FiniteCover& U, int n);

// All nonempty intersections, one member from each cover; deduplicated.
FiniteCover join(const std::vector<FiniteCover>& covers);

// The n-step refinement: join of the pullbacks at times 0..n-1.
FiniteCover refinement(const FinitePartialSystem& sys, const FiniteCover& U, int n);

struct SubcoverCount {
    int64_t count = 0;
    bool exact = false;
};

// Minimal subcover cardinality of the n-step refinement. Exact for pairwise
// disjoint refinements and for carriers within the exact threshold; greedy
// upper bound otherwise.
SubcoverCount minimal_subcover(const FinitePartialSystem& sys, const FiniteCover& U, int n,
                               int exact_threshold = counting::kDefaultExactThreshold);

// Largest delta such that every open delta-ball sits inside some member.
double lebesgue_number(const FinitePartialSystem& sys, const FiniteCover& U);

struct CoverTrace {
    std::string label;
    std::vector<entropy::FitPoint> points;
    entropy::FitResult fit;
    bool degenerate = false;
    bool all_exact = true;
};

struct CoverEntropyEstimate {
    std::vector<CoverTrace> per_cover;
    double hbar_top = 0.0;  // max over the supplied covers; a lower bound for the sup
    int chosen = -1;
};

// Growth rate of minimal subcover counts, maximized over a family of covers
// (default: ball partitions at each eps of the grid).
CoverEntropyEstimate cover_entropy(const FinitePartialSystem& sys, const entropy::SweepConfig& cfg,
                                   const std::vector<FiniteCover>& covers = {});

struct CoverBoundsReport {
    double delta = 0.0;     // Lebesgue number of U
    int64_t subcover = 0;   // N(U, n)
    int64_t span_at_delta = 0;
    bool part1_ok = false;  // N(U, n) <= span(n, delta)
    double max_diameter = 0.0;
    bool part2_applicable = false;  // max member diameter < eps
    int64_t sep_at_eps = 0;
    bool part2_ok = true;  // sep(n, eps) <= N(U, n), when applicable
    bool exact = false;    // all three counts certified exact
};

// Exact two-sided comparison between subcover counts and spanning/separated
// counts; requires a carrier within the exact threshold.
CoverBoundsReport cover_bounds_check(const FinitePartialSystem& sys, const FiniteCover& U, int n,
                                     double eps, int exact_threshold = counting::kDefaultExactThreshold);

} // namespace pact::cover

#endif
