#ifndef PACT_ENTROPY_HPP
#define PACT_ENTROPY_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pact/counting.hpp"
#include "pact/orbit.hpp"
#include "pact/system.hpp"

namespace pact::entropy {

enum class CountKind { Separated, Spanning, WeakSpanning, Cover };

const char* count_kind_name(CountKind k);

struct SweepConfig {
    std::vector<double> eps_grid{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};  // strictly decreasing
    int n_min = 2;
    int n_max = 10;
    CountKind kind = CountKind::Separated;
    int exact_threshold = counting::kDefaultExactThreshold;
    double slope_agree_tol = 0.1;

    void validate() const;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double rss = 0.0;
    int points = 0;
};

// Least squares on (n, log count); needs >= 2 points.
FitResult fit_loglinear(const std::vector<std::pair<int, double>>& pts);

struct FitPoint {
    int n;
    int64_t count;
    bool saturated;  // count == |K| (for |K| > 1); excluded from the fit
};

struct EpsTrace {
    double eps = 0.0;
    std::vector<FitPoint> points;
    FitResult fit;
    double max_stat = 0.0;   // max over usable n of (1/n) log count
    bool degenerate = false; // fewer than 2 usable points
    bool flat = false;       // all usable counts equal
};

struct EntropyEstimate {
    std::vector<EpsTrace> per_eps;
    double hbar = 0.0;
    int chosen = -1;  // index into per_eps
    bool slopes_monotone = true;

    const EpsTrace& chosen_trace() const { return per_eps[static_cast<size_t>(chosen)]; }
};

template <class View>
int64_t count_of(const View& v, CountKind kind, int n, double eps) {
    switch (kind) {
        case CountKind::Separated:
        case CountKind::WeakSpanning:
            return static_cast<int64_t>(counting::greedy_separated(v, n, eps).size());
        case CountKind::Spanning:
            return static_cast<int64_t>(counting::greedy_spanning(v, n, eps).size());
        case CountKind::Cover:
            return static_cast<int64_t>(counting::greedy_cover_groups(v, n, eps).size());
    }
    return 0;
}

// Finite-horizon stand-in for the growth rate at one eps: least-squares slope
// of log count against n, with the max statistic kept as a cross-check.
template <class View>
EpsTrace h_eps_trace(const View& v, double eps, const SweepConfig& cfg) {
    EpsTrace t;
    t.eps = eps;
    const int n_hi = std::min(cfg.n_max, v.horizon());
    const int64_t carrier = v.size();
    std::vector<std::pair<int, double>> pts;
    std::optional<int64_t> first, last;
    bool all_equal = true;
    for (int n = cfg.n_min; n <= n_hi; ++n) {
        const int64_t c = count_of(v, cfg.kind, n, eps);
        const bool sat = (carrier > 1 && c == carrier);
        t.points.push_back({n, c, sat});
        if (sat) continue;
        pts.emplace_back(n, std::log(static_cast<double>(c)));
        t.max_stat = std::max(t.max_stat, std::log(static_cast<double>(c)) / n);
        if (first && *first != c) all_equal = false;
        if (!first) first = c;
        last = c;
    }
    if (pts.size() < 2) {
        t.degenerate = true;
        t.flat = pts.size() == 1;
        return t;
    }
    t.flat = all_equal;
    t.fit = all_equal ? FitResult{0.0, std::log(static_cast<double>(*first)), 0.0,
                                  static_cast<int>(pts.size())}
                      : fit_loglinear(pts);
    return t;
}

// Growth rate across the eps sweep; the estimate is the fitted slope at the
// smallest eps that still has at least two unsaturated data points.
template <class View>
EntropyEstimate hbar_estimate(const View& v, const SweepConfig& cfg) {
    cfg.validate();
    EntropyEstimate est;
    for (double eps : cfg.eps_grid) est.per_eps.push_back(h_eps_trace(v, eps, cfg));
    for (int i = static_cast<int>(est.per_eps.size()) - 1; i >= 0; --i) {
        if (!est.per_eps[static_cast<size_t>(i)].degenerate) {
            est.chosen = i;
            break;
        }
    }
    if (est.chosen < 0)
        throw std::runtime_error(
            "every eps saturates the carrier; use a larger carrier or add larger eps values");
    est.hbar = std::max(0.0, est.chosen_trace().fit.slope);
    for (size_t i = 0; i + 1 < est.per_eps.size(); ++i) {
        const auto& coarse = est.per_eps[i];
        const auto& fine = est.per_eps[i + 1];
        if (!coarse.degenerate && !fine.degenerate &&
            coarse.fit.slope > fine.fit.slope + 0.05)
            est.slopes_monotone = false;
    }
    return est;
}

// ---- finite-system wrappers -------------------------------------------------

EntropyEstimate estimate(const FinitePartialSystem& sys, const SweepConfig& cfg);
EntropyEstimate estimate(const FinitePartialSystem& sys, const std::vector<int>& K,
                         const SweepConfig& cfg);

std::vector<counting::CountReport> count_table(const FinitePartialSystem& sys,
                                               const std::vector<int>& K, const SweepConfig& cfg);

struct ChainSweepReport {
    std::vector<counting::CountReport> cells;
    double chosen_eps = 0.0;
    double slope_sep = 0.0, slope_span = 0.0, slope_weak = 0.0, slope_cov = 0.0;
    double max_disagreement = 0.0;
    bool agree = false;
};

// Exact-count chain on every cell plus growth-rate agreement between the
// separated, spanning and cover statistics.
ChainSweepReport verify_chain_sweep(const FinitePartialSystem& sys, const std::vector<int>& K,
                                    const SweepConfig& cfg);

struct ProductIneqSample {
    int n = 0;
    double eps = 0.0;
    int64_t sep_a = 0, sep_b = 0, sep_ab = 0;
    int64_t span_a = 0, span_b = 0, span_ab = 0;
    bool sep_ok = false, span_ok = false;
};

struct ProductReport {
    EntropyEstimate est_a, est_b, est_ab;
    double defect = 0.0;
    double tol = 0.15;
    bool ok = false;
    std::vector<ProductIneqSample> exact_samples;  // populated when |a||b| fits the exact threshold
    bool inequalities_ok = true;
};

ProductReport product_experiment(const FinitePartialSystem& a, const FinitePartialSystem& b,
                                 const SweepConfig& cfg, double tol = 0.15);

struct DecompositionReport {
    EntropyEstimate est_full;
    std::vector<EntropyEstimate> est_pieces;
    double max_piece = 0.0;
    double defect = 0.0;
    double tol = 0.1;
    bool ok = false;
};

// Pieces must be partially invariant; a failing piece raises
// std::invalid_argument naming the witness (n, x).
DecompositionReport decomposition_experiment(const FinitePartialSystem& sys,
                                             const std::vector<Bits>& pieces,
                                             const SweepConfig& cfg, double tol = 0.1);

struct MetricInvarianceReport {
    EntropyEstimate est_base, est_bounded, est_clipped;
    double max_diff = 0.0;
    double tol = 0.1;
    bool ok = false;
};

// Re-estimates under d/(1+d) and min(1, 2d) with order-matched eps grids.
MetricInvarianceReport metric_invariance_experiment(const FinitePartialSystem& sys,
                                                    const SweepConfig& cfg, double tol = 0.1);

} // namespace pact::entropy

#endif
