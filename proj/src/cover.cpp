#include "pact/cover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "pact/exact64.hpp"
#include "pact/orbit.hpp"

namespace pact::cover {

void validate_cover(const FinitePartialSystem& sys, const FiniteCover& U) {
    if (U.sets.empty()) throw std::invalid_argument("empty cover");
    Bits all(sys.size());
    for (const auto& s : U.sets) {
        if (s.universe_size() != sys.size()) throw std::invalid_argument("cover member size mismatch");
        if (s.empty()) throw std::invalid_argument("cover member is empty");
        all |= s;
    }
    if (all.count() != sys.size()) throw std::invalid_argument("sets do not cover the carrier");
}

FiniteCover ball_partition(const FinitePartialSystem& sys, double eps) {
    FiniteCover U;
    Bits covered(sys.size());
    for (int x = 0; x < sys.size(); ++x) {
        if (covered.test(x)) continue;
        Bits cell(sys.size());
        for (int y = 0; y < sys.size(); ++y)
            if (!covered.test(y) && sys.dist(x, y) < eps) cell.set(y);
        covered |= cell;
        U.sets.push_back(std::move(cell));
        U.labels.push_back("cell@" + sys.name(x));
    }
    return U;
}

FiniteCover pull_back(const FinitePartialSystem& sys, const FiniteCover& U, int n) {
    if (std::abs(n) > sys.window()) throw std::invalid_argument("pullback index outside the window");
    validate_cover(sys, U);
    FiniteCover out;
    const Bits& Xn = sys.domain(n);
    const Bits outside = sys.domain(-n).complement();  // carrier \ X_{-n}
    for (size_t k = 0; k < U.sets.size(); ++k) {
        Bits inter = U.sets[k] & Xn;
        if (!inter.empty()) {
            Bits pre(sys.size());
            sys.domain(-n).for_each([&](int x) {
                if (inter.test(sys.map(n, x))) pre.set(x);
            });
            if (!pre.empty()) {
                out.sets.push_back(std::move(pre));
                out.labels.push_back("pull" + std::to_string(n) + ":" +
                                     (k < U.labels.size() ? U.labels[k] : std::to_string(k)));
            }
        }
        if (U.sets[k].intersects(outside)) {
            out.sets.push_back(U.sets[k]);
            out.labels.push_back("keep:" + (k < U.labels.size() ? U.labels[k] : std::to_string(k)));
        }
    }
    Bits all(sys.size());
    for (const auto& s : out.sets) all |= s;
    if (all.count() != sys.size())
        throw std::logic_error("pulled-back family fails to cover the carrier");
    return out;
}

FiniteCover join(const std::vector<FiniteCover>& covers) {
    if (covers.empty()) throw std::invalid_argument("nothing to join");
    FiniteCover acc = covers.front();
    for (size_t c = 1; c < covers.size(); ++c) {
        FiniteCover next;
        std::unordered_set<uint64_t> seen;
        for (const auto& a : acc.sets) {
            for (const auto& b : covers[c].sets) {
                Bits inter = a & b;
                if (inter.empty()) continue;
                if (!seen.insert(inter.hash()).second) {
                    bool dup = false;
                    for (const auto& s : next.sets)
                        if (s == inter) {
                            dup = true;
                            break;
                        }
                    if (dup) continue;
                }
                next.sets.push_back(std::move(inter));
            }
        }
        if (next.sets.size() > 200000) throw std::runtime_error("cover join grew too large");
        acc = std::move(next);
    }
    return acc;
}

FiniteCover refinement(const FinitePartialSystem& sys, const FiniteCover& U, int n) {
    if (n < 1) throw std::invalid_argument("refinement depth must be >= 1");
    std::vector<FiniteCover> stages;
    for (int i = 0; i < n; ++i) stages.push_back(pull_back(sys, U, i));
    return join(stages);
}

namespace {

bool pairwise_disjoint(const FiniteCover& U) {
    for (size_t i = 0; i < U.sets.size(); ++i)
        for (size_t j = i + 1; j < U.sets.size(); ++j)
            if (U.sets[i].intersects(U.sets[j])) return false;
    return true;
}

int64_t greedy_bits_cover(int universe, const std::vector<Bits>& sets) {
    Bits covered(universe);
    int64_t used = 0;
    while (covered.count() < universe) {
        int best = -1, gain = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            const int g = sets[i].minus(covered).count();
            if (g > gain) {
                gain = g;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) throw std::logic_error("greedy subcover stalled on a non-cover");
        covered |= sets[static_cast<size_t>(best)];
        ++used;
    }
    return used;
}

} // namespace

SubcoverCount minimal_subcover(const FinitePartialSystem& sys, const FiniteCover& U, int n,
                               int exact_threshold) {
    FiniteCover R = refinement(sys, U, n);
    if (pairwise_disjoint(R)) return {static_cast<int64_t>(R.sets.size()), true};
    const int P = sys.size();
    if (P <= std::min(exact_threshold, 64)) {
        std::vector<uint64_t> masks;
        for (const auto& s : R.sets) {
            uint64_t m = 0;
            s.for_each([&](int i) { m |= uint64_t{1} << i; });
            masks.push_back(m);
        }
        const uint64_t universe = (P >= 64) ? ~uint64_t{0} : ((uint64_t{1} << P) - 1);
        const int r = exact64::min_set_cover(universe, masks);
        if (r >= 0) return {r, true};
    }
    return {greedy_bits_cover(P, R.sets), false};
}

double lebesgue_number(const FinitePartialSystem& sys, const FiniteCover& U) {
    validate_cover(sys, U);
    const double big = sys.metric().diameter() + 1.0;
    double delta = std::numeric_limits<double>::infinity();
    for (int x = 0; x < sys.size(); ++x) {
        double best = 0.0;
        for (const auto& s : U.sets) {
            if (!s.test(x)) continue;
            // largest r with B_r(x) inside s: distance to the member's complement
            double r = big;
            s.complement().for_each([&](int y) { r = std::min(r, sys.dist(x, y)); });
            best = std::max(best, r);
        }
        delta = std::min(delta, best);
    }
    return delta;
}

CoverEntropyEstimate cover_entropy(const FinitePartialSystem& sys, const entropy::SweepConfig& cfg,
                                   const std::vector<FiniteCover>& covers) {
    cfg.validate();
    std::vector<std::pair<std::string, FiniteCover>> family;
    if (covers.empty()) {
        for (double eps : cfg.eps_grid)
            family.emplace_back("balls(eps=" + std::to_string(eps) + ")", ball_partition(sys, eps));
    } else {
        for (size_t i = 0; i < covers.size(); ++i)
            family.emplace_back("cover" + std::to_string(i), covers[i]);
    }

    CoverEntropyEstimate est;
    const int n_hi = std::min(cfg.n_max, sys.window() + 1);
    for (size_t c = 0; c < family.size(); ++c) {
        CoverTrace tr;
        tr.label = family[c].first;
        std::vector<std::pair<int, double>> pts;
        for (int n = std::max(1, cfg.n_min); n <= n_hi; ++n) {
            SubcoverCount sc = minimal_subcover(sys, family[c].second, n, cfg.exact_threshold);
            const bool sat = sys.size() > 1 && sc.count == sys.size();
            tr.points.push_back({n, sc.count, sat});
            tr.all_exact = tr.all_exact && sc.exact;
            if (!sat) pts.emplace_back(n, std::log(static_cast<double>(sc.count)));
        }
        if (pts.size() < 2) {
            tr.degenerate = true;
        } else {
            bool flat = true;
            for (const auto& [nn, y] : pts) flat = flat && y == pts.front().second;
            tr.fit = flat ? entropy::FitResult{0.0, pts.front().second, 0.0,
                                               static_cast<int>(pts.size())}
                          : entropy::fit_loglinear(pts);
        }
        est.per_cover.push_back(std::move(tr));
    }
    for (size_t c = 0; c < est.per_cover.size(); ++c) {
        if (est.per_cover[c].degenerate) continue;
        if (est.chosen < 0 || est.per_cover[c].fit.slope > est.hbar_top) {
            est.hbar_top = est.per_cover[c].fit.slope;
            est.chosen = static_cast<int>(c);
        }
    }
    if (est.chosen < 0)
        throw std::runtime_error("every cover trace saturates; use finer covers or a larger carrier");
    est.hbar_top = std::max(0.0, est.hbar_top);
    return est;
}

CoverBoundsReport cover_bounds_check(const FinitePartialSystem& sys, const FiniteCover& U, int n,
                                     double eps, int exact_threshold) {
    CoverBoundsReport rep;
    validate_cover(sys, U);
    rep.delta = lebesgue_number(sys, U);
    SubcoverCount N = minimal_subcover(sys, U, n, exact_threshold);
    rep.subcover = N.count;

    std::vector<int> K(static_cast<size_t>(sys.size()));
    std::iota(K.begin(), K.end(), 0);
    FiniteOrbitView v(sys, K, std::max(n, 1));
    auto span = counting::exact_spanning(v, n, rep.delta, exact_threshold);
    auto sep = counting::exact_separated(v, n, eps, exact_threshold);
    rep.exact = N.exact && span.has_value() && sep.has_value();
    if (span) {
        rep.span_at_delta = *span;
        rep.part1_ok = rep.subcover <= rep.span_at_delta;
    }
    for (const auto& s : U.sets) {
        std::vector<int> idx = s.to_indices();
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j)
                rep.max_diameter = std::max(rep.max_diameter, sys.dist(idx[i], idx[j]));
    }
    rep.part2_applicable = rep.max_diameter < eps;
    if (rep.part2_applicable && sep) {
        rep.sep_at_eps = *sep;
        rep.part2_ok = rep.sep_at_eps <= rep.subcover;
    }
    return rep;
}

} // namespace pact::cover
