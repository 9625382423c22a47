#ifndef PACT_COUNTING_HPP
#define PACT_COUNTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pact/exact64.hpp"
#include "pact/kernels.hpp"

namespace pact::counting {

inline constexpr int kDefaultExactThreshold = 64;

// Cardinalities at one (n, eps) cell. Greedy bounds are always present; exact
// values only on carriers within the exact threshold. `span` is the
// equal-signature notion; `weak_span` drops the signature condition (the two
// differ on genuinely partial systems, and the provable inequality chain is
//   cov(2e) <= span,   weak_span <= sep <= cov(e),   weak_span <= span).
struct CountReport {
    int n = 0;
    double eps = 0.0;
    int64_t carrier_size = 0;
    int64_t sep_lower = 0;
    std::optional<int64_t> sep_exact;
    int64_t span_upper = 0;
    std::optional<int64_t> span_exact;
    int64_t weak_span_upper = 0;
    std::optional<int64_t> weak_span_exact;
    int64_t cov_upper = 0;
    std::optional<int64_t> cov_exact;
    int64_t cov2_upper = 0;  // at 2*eps
    std::optional<int64_t> cov2_exact;

    bool all_exact() const {
        return sep_exact && span_exact && weak_span_exact && cov_exact && cov2_exact;
    }
};

// Maximal (not maximum) separated subset in carrier order; a lower bound for
// sep and, being maximal, also a weak spanning set.
template <class View>
std::vector<int> greedy_separated(const View& v, int n, double eps) {
    return kernels::greedy_scan(v.size(), [&](int k, int y) { return v.dn(k, y, n) < eps; });
}

// First-fit equal-signature spanning set (upper bound for span).
template <class View>
std::vector<int> greedy_spanning(const View& v, int n, double eps) {
    return kernels::greedy_scan(v.size(), [&](int k, int y) {
        return v.sig(k, n) == v.sig(y, n) && v.dn(k, y, n) < eps;
    });
}

// Partition of the carrier into groups of d_n-diameter < eps (upper bound for cov).
template <class View>
std::vector<std::vector<int>> greedy_cover_groups(const View& v, int n, double eps) {
    std::vector<std::vector<int>> groups;
    const int m = v.size();
    for (int k = 0; k < m; ++k) {
        bool placed = false;
        for (auto& g : groups) {
            bool fits = true;
            for (int y : g)
                if (v.dn(k, y, n) >= eps) {
                    fits = false;
                    break;
                }
            if (fits) {
                g.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({k});
    }
    return groups;
}

template <class View>
std::optional<int64_t> exact_separated(const View& v, int n, double eps,
                                       int threshold = kDefaultExactThreshold) {
    const int m = v.size();
    if (m > std::min(threshold, 64)) return std::nullopt;
    auto adj = kernels::too_close_adj(v, n, eps);
    return exact64::max_independent_set(adj, m);
}

// Minimum equal-signature spanning cardinality: an exact set cover inside each
// signature class (a center only covers its own class).
template <class View>
std::optional<int64_t> exact_spanning(const View& v, int n, double eps,
                                      int threshold = kDefaultExactThreshold) {
    const int m = v.size();
    if (m > std::min(threshold, 64)) return std::nullopt;
    std::map<uint64_t, std::vector<int>> classes;
    for (int k = 0; k < m; ++k) classes[v.sig(k, n)].push_back(k);
    int64_t total = 0;
    for (const auto& [s, cls] : classes) {
        const int c = static_cast<int>(cls.size());
        std::vector<uint64_t> sets(cls.size(), 0);
        for (int a = 0; a < c; ++a)
            for (int b = 0; b < c; ++b)
                if (v.dn(cls[static_cast<size_t>(a)], cls[static_cast<size_t>(b)], n) < eps)
                    sets[static_cast<size_t>(a)] |= uint64_t{1} << b;
        const uint64_t universe = (c >= 64) ? ~uint64_t{0} : ((uint64_t{1} << c) - 1);
        const int r = exact64::min_set_cover(universe, sets);
        if (r < 0) return std::nullopt;
        total += r;
    }
    return total;
}

template <class View>
std::optional<int64_t> exact_weak_spanning(const View& v, int n, double eps,
                                           int threshold = kDefaultExactThreshold) {
    const int m = v.size();
    if (m > std::min(threshold, 64)) return std::nullopt;
    std::vector<uint64_t> sets(static_cast<size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (v.dn(a, b, n) < eps) sets[static_cast<size_t>(a)] |= uint64_t{1} << b;
    const uint64_t universe = (m >= 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
    const int r = exact64::min_set_cover(universe, sets);
    if (r < 0) return std::nullopt;
    return r;
}

// Minimum cover by sets of d_n-diameter < eps. Diameter-< eps sets are exactly
// the cliques of the "too close" graph, so candidates are its maximal cliques.
template <class View>
std::optional<int64_t> exact_cover(const View& v, int n, double eps,
                                   int threshold = kDefaultExactThreshold) {
    const int m = v.size();
    if (m > std::min(threshold, 64)) return std::nullopt;
    auto adj = kernels::too_close_adj(v, n, eps);
    for (int k = 0; k < m; ++k) adj[static_cast<size_t>(k)] |= uint64_t{1} << k;  // points cover themselves
    std::vector<uint64_t> selfless(adj);
    for (int k = 0; k < m; ++k) selfless[static_cast<size_t>(k)] &= ~(uint64_t{1} << k);
    auto cliques = exact64::maximal_cliques(selfless, m);
    const uint64_t universe = (m >= 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
    const int r = exact64::min_set_cover(universe, cliques);
    if (r < 0) return std::nullopt;
    return r;
}

template <class View>
CountReport count_report(const View& v, int n, double eps,
                         int threshold = kDefaultExactThreshold) {
    CountReport r;
    r.n = n;
    r.eps = eps;
    r.carrier_size = v.size();
    auto sep = greedy_separated(v, n, eps);
    r.sep_lower = static_cast<int64_t>(sep.size());
    r.weak_span_upper = r.sep_lower;  // a maximal separated set weakly spans
    r.span_upper = static_cast<int64_t>(greedy_spanning(v, n, eps).size());
    r.cov_upper = static_cast<int64_t>(greedy_cover_groups(v, n, eps).size());
    r.cov2_upper = static_cast<int64_t>(greedy_cover_groups(v, n, 2 * eps).size());
    r.sep_exact = exact_separated(v, n, eps, threshold);
    r.span_exact = exact_spanning(v, n, eps, threshold);
    r.weak_span_exact = exact_weak_spanning(v, n, eps, threshold);
    r.cov_exact = exact_cover(v, n, eps, threshold);
    r.cov2_exact = exact_cover(v, n, 2 * eps, threshold);

    auto bug = [&](const char* what) {
        throw std::logic_error(std::string("internal consistency: ") + what + " at n=" +
                               std::to_string(n) + " eps=" + std::to_string(eps));
    };
    if (r.sep_exact && r.sep_lower > *r.sep_exact) bug("greedy separated exceeds the exact maximum");
    if (r.span_exact && *r.span_exact > r.span_upper) bug("exact spanning exceeds its greedy bound");
    if (r.weak_span_exact && *r.weak_span_exact > r.weak_span_upper)
        bug("exact weak spanning exceeds its greedy bound");
    if (r.cov_exact && *r.cov_exact > r.cov_upper) bug("exact cover exceeds its greedy bound");
    if (r.cov2_exact && *r.cov2_exact > r.cov2_upper) bug("exact 2eps-cover exceeds its greedy bound");
    if (r.all_exact()) {
        if (*r.cov2_exact > *r.span_exact) bug("cover(2eps) <= span violated");
        if (*r.weak_span_exact > *r.sep_exact) bug("weak span <= sep violated");
        if (*r.sep_exact > *r.cov_exact) bug("sep <= cov violated");
        if (*r.cov2_exact > *r.cov_exact) bug("cov monotone in eps violated");
        if (*r.weak_span_exact > *r.span_exact) bug("weak span <= span violated");
    }
    return r;
}

} // namespace pact::counting

#endif
