#include "pact/exact64.hpp"

#include <bit>
#include <algorithm>

namespace pact::exact64 {

namespace {

struct MisCtx {
    const std::vector<uint64_t>* adj;
    int best = 0;
};

void mis_rec(MisCtx& c, uint64_t cand, int have) {
    if (have + std::popcount(cand) <= c.best) return;
    if (!cand) {
        c.best = std::max(c.best, have);
        return;
    }
    // pivot on the candidate of maximum degree inside cand
    uint64_t it = cand;
    int v = -1, vd = -1;
    while (it) {
        const int u = std::countr_zero(it);
        it &= it - 1;
        const int d = std::popcount((*c.adj)[static_cast<size_t>(u)] & cand);
        if (d > vd) {
            vd = d;
            v = u;
        }
    }
    if (vd == 0) {
        // cand is independent
        c.best = std::max(c.best, have + std::popcount(cand));
        return;
    }
    const uint64_t vbit = uint64_t{1} << v;
    mis_rec(c, cand & ~(vbit | (*c.adj)[static_cast<size_t>(v)]), have + 1);
    mis_rec(c, cand & ~vbit, have);
}

void bk_rec(const std::vector<uint64_t>& adj, uint64_t R, uint64_t P, uint64_t X,
            std::vector<uint64_t>& out) {
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    // pivot maximizing |P & N(u)|
    uint64_t px = P | X;
    int pivot = -1, best = -1;
    uint64_t it = px;
    while (it) {
        const int u = std::countr_zero(it);
        it &= it - 1;
        const int d = std::popcount(P & adj[static_cast<size_t>(u)]);
        if (d > best) {
            best = d;
            pivot = u;
        }
    }
    uint64_t ext = P & ~adj[static_cast<size_t>(pivot)];
    while (ext) {
        const int v = std::countr_zero(ext);
        const uint64_t vbit = uint64_t{1} << v;
        ext &= ext - 1;
        bk_rec(adj, R | vbit, P & adj[static_cast<size_t>(v)], X & adj[static_cast<size_t>(v)], out);
        P &= ~vbit;
        X |= vbit;
    }
}

struct CoverCtx {
    const std::vector<uint64_t>* sets;
    int best;
    std::vector<int> best_pick;
    std::vector<int> pick;
};

void cover_rec(CoverCtx& c, uint64_t rem) {
    if (!rem) {
        if (static_cast<int>(c.pick.size()) < c.best) {
            c.best = static_cast<int>(c.pick.size());
            c.best_pick = c.pick;
        }
        return;
    }
    int gain_max = 0;
    for (const uint64_t s : *c.sets) gain_max = std::max(gain_max, std::popcount(s & rem));
    if (gain_max == 0) return;
    const int lower = static_cast<int>(c.pick.size()) + (std::popcount(rem) + gain_max - 1) / gain_max;
    if (lower >= c.best) return;

    // branch on the element with the fewest covering sets
    int elem = -1, deg = 1 << 30;
    uint64_t it = rem;
    while (it) {
        const int e = std::countr_zero(it);
        it &= it - 1;
        int d = 0;
        for (const uint64_t s : *c.sets)
            if ((s >> e) & 1) ++d;
        if (d < deg) {
            deg = d;
            elem = e;
        }
    }
    if (deg == 0) return;  // element uncoverable

    std::vector<int> opts;
    for (size_t i = 0; i < c.sets->size(); ++i)
        if (((*c.sets)[i] >> elem) & 1) opts.push_back(static_cast<int>(i));
    std::sort(opts.begin(), opts.end(), [&](int a, int b) {
        return std::popcount((*c.sets)[static_cast<size_t>(a)] & rem) >
               std::popcount((*c.sets)[static_cast<size_t>(b)] & rem);
    });
    for (int i : opts) {
        c.pick.push_back(i);
        cover_rec(c, rem & ~(*c.sets)[static_cast<size_t>(i)]);
        c.pick.pop_back();
    }
}

} // namespace

int max_independent_set(const std::vector<uint64_t>& adj, int n) {
    MisCtx c;
    c.adj = &adj;
    const uint64_t all = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    mis_rec(c, all, 0);
    return c.best;
}

std::vector<uint64_t> maximal_cliques(const std::vector<uint64_t>& adj, int n) {
    std::vector<uint64_t> out;
    const uint64_t all = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    if (all) bk_rec(adj, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> greedy_set_cover(uint64_t universe, const std::vector<uint64_t>& sets) {
    std::vector<int> pick;
    uint64_t rem = universe;
    while (rem) {
        int best = -1, gain = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            const int g = std::popcount(sets[i] & rem);
            if (g > gain) {
                gain = g;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) return {};
        pick.push_back(best);
        rem &= ~sets[static_cast<size_t>(best)];
    }
    return pick;
}

int min_set_cover(uint64_t universe, const std::vector<uint64_t>& sets, std::vector<int>* chosen) {
    if (!universe) {
        if (chosen) chosen->clear();
        return 0;
    }
    std::vector<int> greedy = greedy_set_cover(universe, sets);
    if (greedy.empty()) return -1;
    CoverCtx c;
    c.sets = &sets;
    c.best = static_cast<int>(greedy.size());
    c.best_pick = greedy;
    cover_rec(c, universe);
    if (chosen) *chosen = c.best_pick;
    return c.best;
}

} // namespace pact::exact64
