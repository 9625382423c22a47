#include "pact/entropy.hpp"

#include <algorithm>
#include <numeric>

namespace pact::entropy {

const char* count_kind_name(CountKind k) {
    switch (k) {
        case CountKind::Separated: return "sep";
        case CountKind::Spanning: return "span";
        case CountKind::WeakSpanning: return "weak-span";
        case CountKind::Cover: return "cov";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (n_min < 1) throw std::invalid_argument("n_min must be >= 1");
    if (n_max < n_min) throw std::invalid_argument("n_max must be >= n_min");
    if (eps_grid.empty()) throw std::invalid_argument("empty eps grid");
    for (size_t i = 0; i + 1 < eps_grid.size(); ++i)
        if (!(eps_grid[i] > eps_grid[i + 1]))
            throw std::invalid_argument("eps grid must be strictly decreasing");
    if (eps_grid.back() <= 0) throw std::invalid_argument("eps values must be positive");
}

FitResult fit_loglinear(const std::vector<std::pair<int, double>>& pts) {
    FitResult r;
    r.points = static_cast<int>(pts.size());
    if (r.points < 2) throw std::invalid_argument("need at least two points for a slope");
    double sx = 0, sy = 0;
    for (auto [n, y] : pts) {
        sx += n;
        sy += y;
    }
    const double mx = sx / r.points, my = sy / r.points;
    double sxx = 0, sxy = 0;
    for (auto [n, y] : pts) {
        sxx += (n - mx) * (n - mx);
        sxy += (n - mx) * (y - my);
    }
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    for (auto [n, y] : pts) {
        const double e = y - (r.intercept + r.slope * n);
        r.rss += e * e;
    }
    return r;
}

namespace {

std::vector<int> full_carrier(const FinitePartialSystem& sys) {
    std::vector<int> k(static_cast<size_t>(sys.size()));
    std::iota(k.begin(), k.end(), 0);
    return k;
}

FiniteOrbitView make_view(const FinitePartialSystem& sys, const std::vector<int>& K,
                          const SweepConfig& cfg) {
    const int horizon = std::min(cfg.n_max, sys.window() + 1);
    return FiniteOrbitView(sys, K, horizon);
}

} // namespace

EntropyEstimate estimate(const FinitePartialSystem& sys, const SweepConfig& cfg) {
    return estimate(sys, full_carrier(sys), cfg);
}

EntropyEstimate estimate(const FinitePartialSystem& sys, const std::vector<int>& K,
                         const SweepConfig& cfg) {
    return hbar_estimate(make_view(sys, K, cfg), cfg);
}

std::vector<counting::CountReport> count_table(const FinitePartialSystem& sys,
                                               const std::vector<int>& K, const SweepConfig& cfg) {
    cfg.validate();
    FiniteOrbitView v = make_view(sys, K, cfg);
    std::vector<counting::CountReport> cells;
    for (int n = cfg.n_min; n <= v.horizon(); ++n)
        for (double eps : cfg.eps_grid)
            cells.push_back(counting::count_report(v, n, eps, cfg.exact_threshold));
    return cells;
}

ChainSweepReport verify_chain_sweep(const FinitePartialSystem& sys, const std::vector<int>& K,
                                    const SweepConfig& cfg) {
    ChainSweepReport rep;
    rep.cells = count_table(sys, K, cfg);  // count_report raises on any exact-chain violation

    FiniteOrbitView v = make_view(sys, K, cfg);
    SweepConfig c = cfg;
    c.kind = CountKind::Separated;
    EntropyEstimate sep = hbar_estimate(v, c);
    rep.chosen_eps = sep.chosen_trace().eps;
    rep.slope_sep = sep.hbar;
    c.kind = CountKind::Spanning;
    rep.slope_span = h_eps_trace(v, rep.chosen_eps, c).fit.slope;
    c.kind = CountKind::WeakSpanning;
    rep.slope_weak = h_eps_trace(v, rep.chosen_eps, c).fit.slope;
    c.kind = CountKind::Cover;
    rep.slope_cov = h_eps_trace(v, rep.chosen_eps, c).fit.slope;
    rep.max_disagreement = std::max({std::abs(rep.slope_sep - rep.slope_span),
                                     std::abs(rep.slope_sep - rep.slope_cov),
                                     std::abs(rep.slope_span - rep.slope_cov)});
    rep.agree = rep.max_disagreement <= cfg.slope_agree_tol;
    return rep;
}

ProductReport product_experiment(const FinitePartialSystem& a, const FinitePartialSystem& b,
                                 const SweepConfig& cfg, double tol) {
    ProductReport rep;
    rep.tol = tol;
    FinitePartialSystem ab = product_system(a, b);
    rep.est_a = estimate(a, cfg);
    rep.est_b = estimate(b, cfg);
    rep.est_ab = estimate(ab, cfg);
    rep.defect = std::abs(rep.est_ab.hbar - rep.est_a.hbar - rep.est_b.hbar);
    rep.ok = rep.defect <= tol;

    if (static_cast<int64_t>(a.size()) * b.size() <= cfg.exact_threshold) {
        FiniteOrbitView va = make_view(a, full_carrier(a), cfg);
        FiniteOrbitView vb = make_view(b, full_carrier(b), cfg);
        FiniteOrbitView vab = make_view(ab, full_carrier(ab), cfg);
        const int n_hi = std::min({cfg.n_max, a.window() + 1, b.window() + 1});
        for (int n = cfg.n_min; n <= n_hi; ++n) {
            for (double eps : cfg.eps_grid) {
                ProductIneqSample s;
                s.n = n;
                s.eps = eps;
                auto need = [](std::optional<int64_t> v) {
                    if (!v) throw std::logic_error("exact count unavailable below the threshold");
                    return *v;
                };
                s.sep_a = need(counting::exact_separated(va, n, eps, cfg.exact_threshold));
                s.sep_b = need(counting::exact_separated(vb, n, eps, cfg.exact_threshold));
                s.sep_ab = need(counting::exact_separated(vab, n, eps, cfg.exact_threshold));
                s.span_a = need(counting::exact_spanning(va, n, eps, cfg.exact_threshold));
                s.span_b = need(counting::exact_spanning(vb, n, eps, cfg.exact_threshold));
                s.span_ab = need(counting::exact_spanning(vab, n, eps, cfg.exact_threshold));
                s.sep_ok = s.sep_ab >= s.sep_a * s.sep_b;
                s.span_ok = s.span_ab <= s.span_a * s.span_b;
                if (!s.sep_ok || !s.span_ok) rep.inequalities_ok = false;
                rep.exact_samples.push_back(s);
            }
        }
    }
    return rep;
}

DecompositionReport decomposition_experiment(const FinitePartialSystem& sys,
                                             const std::vector<Bits>& pieces,
                                             const SweepConfig& cfg, double tol) {
    if (pieces.empty()) throw std::invalid_argument("no pieces given");
    Bits all(sys.size());
    for (const auto& p : pieces) {
        if (auto w = partial_invariance_witness(sys, p))
            throw std::invalid_argument("piece is not partially invariant (n=" +
                                        std::to_string(w->first) + ", x=" + sys.name(w->second) +
                                        ")");
        all |= p;
    }
    if (all.count() != sys.size())
        throw std::invalid_argument("pieces do not cover the carrier");

    DecompositionReport rep;
    rep.tol = tol;
    rep.est_full = estimate(sys, cfg);
    for (const auto& p : pieces) {
        rep.est_pieces.push_back(estimate(sys, p.to_indices(), cfg));
        rep.max_piece = std::max(rep.max_piece, rep.est_pieces.back().hbar);
    }
    rep.defect = std::abs(rep.est_full.hbar - rep.max_piece);
    rep.ok = rep.defect <= tol;
    return rep;
}

MetricInvarianceReport metric_invariance_experiment(const FinitePartialSystem& sys,
                                                    const SweepConfig& cfg, double tol) {
    if (!sys.metric().is_dense())
        throw std::invalid_argument("metric rescaling needs a dense metric table");
    MetricInvarianceReport rep;
    rep.tol = tol;
    rep.est_base = estimate(sys, cfg);

    auto rebuilt = [&](auto&& f) {
        std::vector<Bits> domains;
        std::vector<std::vector<int32_t>> maps;
        for (int n = -sys.window(); n <= sys.window(); ++n) {
            domains.push_back(sys.domain(n));
            maps.push_back(sys.map_row(n));
        }
        return FinitePartialSystem(sys.names(), sys.metric().transformed(f), sys.window(),
                                   std::move(domains), std::move(maps), sys.origin());
    };

    SweepConfig bounded_cfg = cfg;
    for (double& e : bounded_cfg.eps_grid) e = e / (1.0 + e);
    rep.est_bounded = estimate(rebuilt([](double d) { return d / (1.0 + d); }), bounded_cfg);

    SweepConfig clipped_cfg = cfg;
    for (double& e : clipped_cfg.eps_grid) e = std::min(1.0, 2.0 * e);
    for (size_t i = 0; i + 1 < clipped_cfg.eps_grid.size();)
        if (!(clipped_cfg.eps_grid[i] > clipped_cfg.eps_grid[i + 1]))
            clipped_cfg.eps_grid.erase(clipped_cfg.eps_grid.begin() + static_cast<long>(i));
        else
            ++i;
    rep.est_clipped = estimate(rebuilt([](double d) { return std::min(1.0, 2.0 * d); }), clipped_cfg);

    rep.max_diff = std::max({std::abs(rep.est_base.hbar - rep.est_bounded.hbar),
                             std::abs(rep.est_base.hbar - rep.est_clipped.hbar),
                             std::abs(rep.est_bounded.hbar - rep.est_clipped.hbar)});
    rep.ok = rep.max_diff <= tol;
    return rep;
}

} // namespace pact::entropy
