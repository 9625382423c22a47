#include "pact/globalization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pact::globalization {

namespace {

struct UnionFind {
    std::vector<int32_t> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// (r,x) ~ (s,y) iff x in X_{s-r} and alpha_{r-s}(x) = y; evaluable when
// |s-r| <= window.
bool related(const FinitePartialSystem& sys, int r, int x, int s, int y) {
    const int t = s - r;
    if (std::abs(t) > sys.window()) return false;
    return sys.domain(t).test(x) && sys.map(-t, x) == y;
}

} // namespace

GlobalizationResult globalize(const FinitePartialSystem& sys, int radius) {
    if (radius < 1 || radius > sys.window())
        throw std::invalid_argument("window radius must lie in [1, window]");
    const int P = sys.size();
    const int W = sys.window();
    const int R = radius;
    const int levels = 2 * R + 1;

    GlobalizationResult res;
    res.radius = R;
    res.stride = P;

    UnionFind uf(levels * P);
    auto node = [&](int r, int x) { return (r + R) * P + x; };
    for (int r = -R; r <= R; ++r) {
        for (int s = r + 1; s <= R; ++s) {
            const int t = s - r;
            if (t > W) break;
            sys.domain(t).for_each([&](int x) { uf.unite(node(r, x), node(s, sys.map(-t, x))); });
        }
    }

    // symmetry and transitivity of the displayed relation on the window
    for (int r = -R; r <= R && res.relation_symmetric; ++r)
        for (int s = -R; s <= R && res.relation_symmetric; ++s) {
            const int t = s - r;
            if (std::abs(t) > W) continue;
            sys.domain(t).for_each([&](int x) {
                const int y = sys.map(-t, x);
                if (!related(sys, s, y, r, x)) res.relation_symmetric = false;
            });
        }
    for (int r = -R; r <= R && res.relation_transitive; ++r)
        for (int s = -R; s <= R && res.relation_transitive; ++s) {
            if (std::abs(s - r) > W) continue;
            for (int t2 = -R; t2 <= R && res.relation_transitive; ++t2) {
                if (std::abs(t2 - s) > W || std::abs(t2 - r) > W) continue;
                sys.domain(s - r).for_each([&](int x) {
                    const int y = sys.map(r - s, x);
                    if (!sys.domain(t2 - s).test(y)) return;
                    const int z = sys.map(s - t2, y);
                    if (!related(sys, r, x, t2, z)) res.relation_transitive = false;
                });
            }
        }
    if (!res.relation_symmetric || !res.relation_transitive)
        throw std::logic_error(
            "globalization relation failed symmetry/transitivity; the input cannot satisfy the "
            "partial-action axioms");

    // canonical class ids ordered by least member (r, x)
    res.class_index.assign(static_cast<size_t>(levels) * P, -1);
    std::vector<int> root_to_class(static_cast<size_t>(levels) * P, -1);
    int nclasses = 0;
    for (int r = -R; r <= R; ++r)
        for (int x = 0; x < P; ++x) {
            const int root = uf.find(node(r, x));
            if (root_to_class[static_cast<size_t>(root)] < 0)
                root_to_class[static_cast<size_t>(root)] = nclasses++;
            res.class_index[static_cast<size_t>(node(r, x))] =
                root_to_class[static_cast<size_t>(root)];
        }
    res.classes.assign(static_cast<size_t>(nclasses), {});
    for (int r = -R; r <= R; ++r)
        for (int x = 0; x < P; ++x)
            res.classes[static_cast<size_t>(res.class_of(r, x))].push_back({r, x});

    res.embedding.resize(static_cast<size_t>(P));
    for (int x = 0; x < P; ++x) res.embedding[static_cast<size_t>(x)] = res.class_of(0, x);
    for (int x = 0; x < P; ++x)
        for (int y = x + 1; y < P; ++y)
            if (res.embedding[static_cast<size_t>(x)] == res.embedding[static_cast<size_t>(y)])
                throw std::logic_error("embedding x -> [(0,x)] is not injective");

    // induced shift gamma_1 where some representative stays in the window
    res.shift.assign(static_cast<size_t>(nclasses), -1);
    for (int c = 0; c < nclasses; ++c) {
        int target = -1;
        for (const auto& [r, x] : res.classes[static_cast<size_t>(c)]) {
            if (r + 1 > R) continue;
            const int tc = res.class_of(r + 1, x);
            if (target < 0) target = tc;
            else if (target != tc)
                throw std::logic_error("induced shift is not well defined on classes");
        }
        res.shift[static_cast<size_t>(c)] = target;
    }

    // window exactness: free beyond some N <= R, or a global action
    bool global = true;
    for (int n = -W; n <= W && global; ++n)
        if (sys.domain(n).count() != P) global = false;
    bool free_tail = false;
    for (int N = 0; N <= R && !free_tail; ++N) {
        bool empty_beyond = true;
        for (int n = N + 1; n <= W && empty_beyond; ++n)
            if (!sys.domain(n).empty() || !sys.domain(-n).empty()) empty_beyond = false;
        if (empty_beyond) free_tail = true;
    }
    res.window_exact = global || free_tail;

    // the truncated quotient as a partial system over [-R, R] (discrete metric)
    {
        std::vector<std::string> names;
        for (int c = 0; c < nclasses; ++c) {
            const auto& rep = res.classes[static_cast<size_t>(c)].front();
            names.push_back("[" + std::to_string(rep.r) + "," + sys.name(rep.x) + "]");
        }
        std::vector<double> t(static_cast<size_t>(nclasses) * nclasses, 1.0);
        for (int c = 0; c < nclasses; ++c) t[static_cast<size_t>(c) * nclasses + c] = 0.0;
        std::vector<Bits> domains(static_cast<size_t>(2 * R + 1), Bits(nclasses));
        std::vector<std::vector<int32_t>> maps(static_cast<size_t>(2 * R + 1),
                                               std::vector<int32_t>(static_cast<size_t>(nclasses), -1));
        for (int n = -R; n <= R; ++n) {
            auto& dom = domains[static_cast<size_t>(n + R)];
            for (int c = 0; c < nclasses; ++c) {
                // class lies in X_n iff some representative shifts by -n inside the window
                for (const auto& [r, x] : res.classes[static_cast<size_t>(c)])
                    if (std::abs(r - n) <= R) {
                        dom.set(c);
                        break;
                    }
            }
        }
        for (int n = -R; n <= R; ++n) {
            auto& row = maps[static_cast<size_t>(n + R)];
            for (int c = 0; c < nclasses; ++c) {
                if (!domains[static_cast<size_t>(-n + R)].test(c)) continue;
                for (const auto& [r, x] : res.classes[static_cast<size_t>(c)])
                    if (std::abs(r + n) <= R) {
                        row[static_cast<size_t>(c)] = res.class_of(r + n, x);
                        break;
                    }
            }
        }
        FinitePartialSystem q(std::move(names), Metric::dense(nclasses, std::move(t)), R,
                              std::move(domains), std::move(maps));
        try {
            if (check_axioms(q).passed) res.quotient = std::move(q);
        } catch (const std::invalid_argument&) {
        }
    }

    // exact enveloping action for restriction systems: the orbit saturation
    if (sys.origin()) {
        const auto& o = *sys.origin();
        std::vector<char> in_sat(static_cast<size_t>(o.ambient_size), 0);
        for (int32_t a : o.carrier_to_ambient) {
            int v = a;
            do {
                in_sat[static_cast<size_t>(v)] = 1;
                v = o.perm[static_cast<size_t>(v)];
            } while (v != a);
        }
        std::vector<int32_t> sat;
        for (int v = 0; v < o.ambient_size; ++v)
            if (in_sat[static_cast<size_t>(v)]) sat.push_back(v);
        res.exact_global = restrict_global(o.ambient_names, o.ambient_metric, o.perm, sat, W);
        res.exact_embedding.resize(static_cast<size_t>(P));
        std::vector<int32_t> ambient_to_sat(static_cast<size_t>(o.ambient_size), -1);
        for (size_t i = 0; i < sat.size(); ++i)
            ambient_to_sat[static_cast<size_t>(sat[i])] = static_cast<int32_t>(i);
        for (int x = 0; x < P; ++x)
            res.exact_embedding[static_cast<size_t>(x)] =
                ambient_to_sat[static_cast<size_t>(o.carrier_to_ambient[static_cast<size_t>(x)])];
    }
    return res;
}

EquivalenceWitness check_equivalence(const FinitePartialSystem& a, const FinitePartialSystem& b,
                                     const std::vector<int32_t>& h) {
    EquivalenceWitness w;
    auto fail = [&](int n, int x, std::string what) {
        w.ok = false;
        w.failures.push_back({n, x, std::move(what)});
    };
    if (a.size() != b.size() || h.size() != static_cast<size_t>(a.size())) {
        fail(0, -1, "h is not a carrier bijection");
        return w;
    }
    std::vector<char> seen(static_cast<size_t>(b.size()), 0);
    for (int32_t v : h) {
        if (v < 0 || v >= b.size() || seen[static_cast<size_t>(v)]) {
            fail(0, -1, "h is not a carrier bijection");
            return w;
        }
        seen[static_cast<size_t>(v)] = 1;
    }
    const int W = std::min(a.window(), b.window());
    for (int n = -W; n <= W; ++n) {
        Bits image(b.size());
        a.domain(n).for_each([&](int x) { image.set(h[static_cast<size_t>(x)]); });
        if (image != b.domain(n)) {
            int witness = image.minus(b.domain(n)).first_set();
            if (witness < 0) witness = b.domain(n).minus(image).first_set();
            fail(n, witness, "h(X_n) != Y_n");
        }
        a.domain(-n).for_each([&](int x) {
            const int32_t lhs = h[static_cast<size_t>(a.map(n, x))];
            const int32_t rhs = b.map(n, h[static_cast<size_t>(x)]);
            if (lhs != rhs) fail(n, x, "h(alpha_n(x)) != beta_n(h(x))");
        });
    }
    return w;
}

GapReport globalization_gap(const FinitePartialSystem& sys, int radius,
                            const entropy::SweepConfig& cfg, double tol, bool allow_inexact) {
    GlobalizationResult g = globalize(sys, radius);
    GapReport rep;
    rep.window_exact = g.window_exact;
    rep.est_partial = entropy::estimate(sys, cfg);
    if (g.exact_global) {
        rep.path = "saturation";
        rep.est_global = entropy::estimate(*g.exact_global, cfg);
    } else if ((g.window_exact || allow_inexact) && g.quotient) {
        rep.path = "window-quotient";
        rep.est_global = entropy::estimate(*g.quotient, cfg);
    } else if (!g.window_exact && !allow_inexact) {
        throw std::invalid_argument(
            "window truncation is not exact here; rerun with a restriction-origin system or "
            "allow an inexact quotient estimate");
    } else {
        throw std::invalid_argument(
            "truncated quotient violates the axioms at this radius; enlarge the window");
    }
    rep.gap = rep.est_global.hbar - rep.est_partial.hbar;
    rep.ok = rep.gap >= -tol;
    return rep;
}

} // namespace pact::globalization
