#include "pact/system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "pact/kernels.hpp"

namespace pact {

FinitePartialSystem::FinitePartialSystem(std::vector<std::string> names,
                                         Metric metric,
                                         int window,
                                         std::vector<Bits> domains,
                                         std::vector<std::vector<int32_t>> maps,
                                         std::optional<RestrictionOrigin> origin)
    : names_(std::move(names)),
      metric_(std::move(metric)),
      window_(window),
      domains_(std::move(domains)),
      maps_(std::move(maps)),
      origin_(std::move(origin)) {
    const int p = size();
    if (p <= 0) throw std::invalid_argument("empty carrier");
    if (window_ < 1 || window_ > 62) throw std::invalid_argument("window must be in [1, 62]");
    if (metric_.size() != p) throw std::invalid_argument("metric size mismatch");
    if (domains_.size() != static_cast<size_t>(2 * window_ + 1) || maps_.size() != domains_.size())
        throw std::invalid_argument("domain/map families must cover n in [-window, window]");
    for (const auto& d : domains_)
        if (d.universe_size() != p) throw std::invalid_argument("domain bitset size mismatch");
    for (const auto& m : maps_)
        if (m.size() != static_cast<size_t>(p)) throw std::invalid_argument("map row size mismatch");
}

int FinitePartialSystem::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

uint64_t FinitePartialSystem::signature(int x, int n) const {
    uint64_t s = 0;
    for (int i = 0; i < n; ++i)
        if (domain(-i).test(x)) s |= (uint64_t{1} << i);
    return s;
}

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::IdentityAtZero: return "axiom (i) identity at zero";
        case Axiom::Bijection: return "axiom: alpha_n bijective X_{-n} -> X_n";
        case Axiom::DomainImage: return "axiom (ii) domain-image compatibility";
        case Axiom::Composition: return "axiom (iii) composition";
    }
    return "?";
}

std::optional<std::string> metric_defect(const Metric& m) {
    if (!m.is_dense()) return std::nullopt;  // combined metrics inherit validity from their factors
    const int p = m.size();
    const double* t = m.raw_table();
    for (int i = 0; i < p; ++i) {
        if (t[static_cast<size_t>(i) * p + i] != 0.0)
            return "nonzero diagonal at point " + std::to_string(i);
        for (int j = 0; j < p; ++j) {
            double v = t[static_cast<size_t>(i) * p + j];
            if (!(v >= 0.0) || !std::isfinite(v))
                return "negative or non-finite distance at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (v != t[static_cast<size_t>(j) * p + i])
                return "asymmetric entries at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (i != j && v == 0.0)
                return "zero distance between distinct points (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
    if (auto w = kernels::triangle_violation(t, p))
        return "triangle inequality fails on (" + std::to_string(w->i) + "," + std::to_string(w->j) + "," +
               std::to_string(w->k) + ")";
    return std::nullopt;
}

AxiomReport check_axioms(const FinitePartialSystem& sys) {
    if (auto defect = metric_defect(sys.metric()))
        throw std::invalid_argument("malformed metric: " + *defect);

    AxiomReport rep;
    auto fail = [&](Axiom a, int n, int m, int x, std::string d) {
        rep.passed = false;
        rep.violations.push_back({a, n, m, x, std::move(d)});
    };

    const int p = sys.size();
    const int W = sys.window();

    // (i)
    if (sys.domain(0).count() != p)
        fail(Axiom::IdentityAtZero, 0, 0, sys.domain(0).complement().first_set(), "X_0 is not the whole carrier");
    for (int x = 0; x < p; ++x)
        if (sys.map(0, x) != x) {
            fail(Axiom::IdentityAtZero, 0, 0, x, "alpha_0 is not the identity");
            break;
        }

    // bijectivity of each alpha_n
    for (int n = -W; n <= W; ++n) {
        if (n == 0) continue;
        const Bits& dom = sys.domain(-n);
        const Bits& ran = sys.domain(n);
        Bits image(p);
        bool ok = true;
        for (int x = 0; x < p && ok; ++x) {
            int32_t y = sys.map(n, x);
            if (dom.test(x)) {
                if (y < 0) {
                    fail(Axiom::Bijection, n, 0, x, "alpha_n undefined on its domain X_{-n}");
                    ok = false;
                } else if (!ran.test(y)) {
                    fail(Axiom::Bijection, n, 0, x, "alpha_n maps outside X_n");
                    ok = false;
                } else if (image.test(y)) {
                    fail(Axiom::Bijection, n, 0, x, "alpha_n is not injective");
                    ok = false;
                } else {
                    image.set(y);
                }
            } else if (y >= 0) {
                fail(Axiom::Bijection, n, 0, x, "alpha_n defined outside X_{-n}");
                ok = false;
            }
        }
        if (ok && image != ran)
            fail(Axiom::Bijection, n, 0, ran.minus(image).first_set(), "alpha_n is not onto X_n");
    }
    if (!rep.passed) return rep;  // (ii)/(iii) scans presume well-formed maps

    // (ii)
    for (int n = -W; n <= W; ++n) {
        for (int m = -W; m <= W; ++m) {
            if (std::abs(n + m) > W) continue;
            Bits lhs(p);
            Bits src = sys.domain(-n) & sys.domain(m);
            src.for_each([&](int x) { lhs.set(sys.map(n, x)); });
            Bits rhs = sys.domain(n) & sys.domain(n + m);
            if (lhs != rhs) {
                int w = lhs.minus(rhs).first_set();
                if (w < 0) w = rhs.minus(lhs).first_set();
                fail(Axiom::DomainImage, n, m, w, "alpha_n(X_{-n} & X_m) != X_n & X_{n+m}");
            }
        }
    }

    // (iii)
    for (int n = -W; n <= W; ++n) {
        for (int m = -W; m <= W; ++m) {
            if (std::abs(n + m) > W) continue;
            Bits src = sys.domain(-m) & sys.domain(-m - n);
            bool bad = false;
            src.for_each([&](int x) {
                if (bad) return;
                int32_t mid = sys.map(m, x);
                int32_t lhs = (mid >= 0 && sys.domain(-n).test(mid)) ? sys.map(n, mid) : -1;
                int32_t rhs = sys.map(n + m, x);
                if (lhs != rhs) {
                    fail(Axiom::Composition, n, m, x, "alpha_n(alpha_m(x)) != alpha_{n+m}(x)");
                    bad = true;
                }
            });
        }
    }
    return rep;
}

namespace {

std::vector<int32_t> power_of(const std::vector<int32_t>& f, int n) {
    const int p = static_cast<int>(f.size());
    std::vector<int32_t> inv(p);
    for (int i = 0; i < p; ++i) inv[f[static_cast<size_t>(i)]] = i;
    const std::vector<int32_t>& step = n >= 0 ? f : inv;
    std::vector<int32_t> r(p);
    for (int i = 0; i < p; ++i) r[static_cast<size_t>(i)] = i;
    for (int k = 0; k < std::abs(n); ++k)
        for (int i = 0; i < p; ++i) r[static_cast<size_t>(i)] = step[r[static_cast<size_t>(i)]];
    return r;
}

} // namespace

FinitePartialSystem restrict_global(const std::vector<std::string>& names,
                                    const Metric& metric,
                                    const std::vector<int32_t>& f,
                                    const std::vector<int32_t>& Y,
                                    int window) {
    const int p = static_cast<int>(names.size());
    if (metric.size() != p) throw std::invalid_argument("metric size mismatch");
    if (f.size() != static_cast<size_t>(p)) throw std::invalid_argument("bijection size mismatch");
    {
        std::vector<char> seen(static_cast<size_t>(p), 0);
        for (int32_t v : f) {
            if (v < 0 || v >= p || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("f is not a bijection of the point set");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    if (Y.empty()) throw std::invalid_argument("restriction subset Y is empty");

    std::vector<int32_t> carrier = Y;
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    const int m = static_cast<int>(carrier.size());

    std::vector<int32_t> ambient_to_carrier(static_cast<size_t>(p), -1);
    for (int i = 0; i < m; ++i) ambient_to_carrier[static_cast<size_t>(carrier[static_cast<size_t>(i)])] = i;

    std::vector<std::string> cnames(static_cast<size_t>(m));
    std::vector<double> table(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        cnames[static_cast<size_t>(i)] = names[static_cast<size_t>(carrier[static_cast<size_t>(i)])];
        for (int j = 0; j < m; ++j)
            table[static_cast<size_t>(i) * m + j] = metric(carrier[static_cast<size_t>(i)], carrier[static_cast<size_t>(j)]);
    }

    std::vector<Bits> domains(static_cast<size_t>(2 * window + 1), Bits(m));
    std::vector<std::vector<int32_t>> maps(static_cast<size_t>(2 * window + 1),
                                           std::vector<int32_t>(static_cast<size_t>(m), -1));
    for (int n = -window; n <= window; ++n) {
        std::vector<int32_t> fn = power_of(f, n);
        Bits& dom = domains[static_cast<size_t>(n + window)];
        // X_n = Y & f^n(Y): y with f^{-n}(y) in Y
        std::vector<int32_t> fneg = power_of(f, -n);
        for (int i = 0; i < m; ++i)
            if (ambient_to_carrier[static_cast<size_t>(fneg[static_cast<size_t>(carrier[static_cast<size_t>(i)])])] >= 0)
                dom.set(i);
        // alpha_n on X_{-n}
        for (int i = 0; i < m; ++i) {
            int32_t img = fn[static_cast<size_t>(carrier[static_cast<size_t>(i)])];
            int32_t ci = ambient_to_carrier[static_cast<size_t>(img)];
            if (ci >= 0) maps[static_cast<size_t>(n + window)][static_cast<size_t>(i)] = ci;
        }
    }
    // keep alpha_n only on X_{-n}
    for (int n = -window; n <= window; ++n) {
        const Bits& dom = domains[static_cast<size_t>(-n + window)];
        auto& row = maps[static_cast<size_t>(n + window)];
        for (int i = 0; i < m; ++i)
            if (!dom.test(i)) row[static_cast<size_t>(i)] = -1;
    }

    RestrictionOrigin origin;
    origin.ambient_size = p;
    origin.perm = f;
    origin.carrier_to_ambient = carrier;
    origin.ambient_names = names;
    origin.ambient_metric = metric;
    return FinitePartialSystem(std::move(cnames), Metric::dense(m, std::move(table)), window,
                               std::move(domains), std::move(maps), std::move(origin));
}

FinitePartialSystem product_system(const FinitePartialSystem& a,
                                   const FinitePartialSystem& b,
                                   int dense_table_limit) {
    const int window = std::min(a.window(), b.window());
    const int na = a.size(), nb = b.size();
    const int m = na * nb;

    std::vector<std::string> names(static_cast<size_t>(m));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names[static_cast<size_t>(i) * nb + j] = "(" + a.name(i) + "," + b.name(j) + ")";

    Metric metric;
    if (m <= dense_table_limit) {
        std::vector<double> t(static_cast<size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                t[static_cast<size_t>(i) * m + j] =
                    std::max(a.dist(i / nb, j / nb), b.dist(i % nb, j % nb));
        metric = Metric::dense(m, std::move(t));
    } else {
        metric = Metric::max_product(a.metric(), b.metric());
    }

    std::vector<Bits> domains(static_cast<size_t>(2 * window + 1), Bits(m));
    std::vector<std::vector<int32_t>> maps(static_cast<size_t>(2 * window + 1),
                                           std::vector<int32_t>(static_cast<size_t>(m), -1));
    for (int n = -window; n <= window; ++n) {
        Bits& dom = domains[static_cast<size_t>(n + window)];
        auto& row = maps[static_cast<size_t>(n + window)];
        for (int i = 0; i < na; ++i) {
            if (!a.domain(n).test(i)) continue;
            for (int j = 0; j < nb; ++j)
                if (b.domain(n).test(j)) dom.set(i * nb + j);
        }
        for (int i = 0; i < na; ++i) {
            int32_t ai = a.map(n, i);
            if (ai < 0) continue;
            for (int j = 0; j < nb; ++j) {
                int32_t bj = b.map(n, j);
                if (bj >= 0) row[static_cast<size_t>(i) * nb + j] = ai * nb + bj;
            }
        }
    }
    return FinitePartialSystem(std::move(names), std::move(metric), window, std::move(domains),
                               std::move(maps));
}

FinitePartialSystem disjoint_union(const FinitePartialSystem& a, const FinitePartialSystem& b) {
    const int window = std::min(a.window(), b.window());
    const int na = a.size(), nb = b.size();
    const int m = na + nb;
    const double cross = std::max(1.0, 0.5 * std::max(a.metric().diameter(), b.metric().diameter()));

    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int i = 0; i < na; ++i) names.push_back("A." + a.name(i));
    for (int j = 0; j < nb; ++j) names.push_back("B." + b.name(j));

    std::vector<double> t(static_cast<size_t>(m) * m, cross);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) t[static_cast<size_t>(i) * m + j] = a.dist(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) t[static_cast<size_t>(na + i) * m + (na + j)] = b.dist(i, j);

    std::vector<Bits> domains(static_cast<size_t>(2 * window + 1), Bits(m));
    std::vector<std::vector<int32_t>> maps(static_cast<size_t>(2 * window + 1),
                                           std::vector<int32_t>(static_cast<size_t>(m), -1));
    for (int n = -window; n <= window; ++n) {
        Bits& dom = domains[static_cast<size_t>(n + window)];
        auto& row = maps[static_cast<size_t>(n + window)];
        a.domain(n).for_each([&](int i) { dom.set(i); });
        b.domain(n).for_each([&](int j) { dom.set(na + j); });
        for (int i = 0; i < na; ++i)
            if (a.map(n, i) >= 0) row[static_cast<size_t>(i)] = a.map(n, i);
        for (int j = 0; j < nb; ++j)
            if (b.map(n, j) >= 0) row[static_cast<size_t>(na + j)] = na + b.map(n, j);
    }

    std::optional<RestrictionOrigin> origin;
    if (a.origin() && b.origin()) {
        RestrictionOrigin o;
        o.ambient_size = a.origin()->ambient_size + b.origin()->ambient_size;
        o.perm = a.origin()->perm;
        for (int32_t v : b.origin()->perm) o.perm.push_back(v + a.origin()->ambient_size);
        o.carrier_to_ambient = a.origin()->carrier_to_ambient;
        for (int32_t v : b.origin()->carrier_to_ambient)
            o.carrier_to_ambient.push_back(v + a.origin()->ambient_size);
        for (const auto& nm : a.origin()->ambient_names) o.ambient_names.push_back("A." + nm);
        for (const auto& nm : b.origin()->ambient_names) o.ambient_names.push_back("B." + nm);
        // ambient metric only matters through the carrier, which uses the table above
        o.ambient_metric = Metric::dense(1, {0.0});
        o.ambient_size = static_cast<int>(o.perm.size());
        origin = std::move(o);
    }
    return FinitePartialSystem(std::move(names), Metric::dense(m, std::move(t)), window,
                               std::move(domains), std::move(maps), std::move(origin));
}

FinitePartialSystem perturb_map_entry(const FinitePartialSystem& sys, int n, int x, int new_target) {
    const int W = sys.window();
    const int p = sys.size();
    std::vector<Bits> domains;
    std::vector<std::vector<int32_t>> maps;
    for (int k = -W; k <= W; ++k) {
        domains.push_back(sys.domain(k));
        maps.push_back(sys.map_row(k));
    }
    maps[static_cast<size_t>(n + W)][static_cast<size_t>(x)] = new_target;
    (void)p;
    return FinitePartialSystem(sys.names(), sys.metric(), W, std::move(domains), std::move(maps));
}

std::optional<std::pair<int, int>> partial_invariance_witness(const FinitePartialSystem& sys,
                                                              const Bits& S) {
    for (int n = -sys.window(); n <= sys.window(); ++n) {
        Bits src = S & sys.domain(-n);
        std::optional<std::pair<int, int>> w;
        src.for_each([&](int x) {
            if (!w && !S.test(sys.map(n, x))) w = std::make_pair(n, x);
        });
        if (w) return w;
    }
    return std::nullopt;
}

FinitePartialSystem subsystem(const FinitePartialSystem& sys, const Bits& S) {
    if (auto w = partial_invariance_witness(sys, S))
        throw std::invalid_argument("subset is not partially invariant (n=" + std::to_string(w->first) +
                                    ", x=" + sys.name(w->second) + ")");
    std::vector<int> keep = S.to_indices();
    const int m = static_cast<int>(keep.size());
    if (m == 0) throw std::invalid_argument("empty subsystem carrier");
    std::vector<int32_t> old_to_new(static_cast<size_t>(sys.size()), -1);
    for (int i = 0; i < m; ++i) old_to_new[static_cast<size_t>(keep[static_cast<size_t>(i)])] = i;

    std::vector<std::string> names(static_cast<size_t>(m));
    std::vector<double> t(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        names[static_cast<size_t>(i)] = sys.name(keep[static_cast<size_t>(i)]);
        for (int j = 0; j < m; ++j)
            t[static_cast<size_t>(i) * m + j] = sys.dist(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
    }
    const int W = sys.window();
    std::vector<Bits> domains(static_cast<size_t>(2 * W + 1), Bits(m));
    std::vector<std::vector<int32_t>> maps(static_cast<size_t>(2 * W + 1),
                                           std::vector<int32_t>(static_cast<size_t>(m), -1));
    for (int n = -W; n <= W; ++n) {
        for (int i = 0; i < m; ++i) {
            int old = keep[static_cast<size_t>(i)];
            if (sys.domain(n).test(old)) domains[static_cast<size_t>(n + W)].set(i);
            int32_t y = sys.map(n, old);
            if (y >= 0) maps[static_cast<size_t>(n + W)][static_cast<size_t>(i)] = old_to_new[static_cast<size_t>(y)];
        }
    }

    std::optional<RestrictionOrigin> origin;
    if (sys.origin()) {
        origin = sys.origin();
        origin->carrier_to_ambient.clear();
        for (int i : keep)
            origin->carrier_to_ambient.push_back(sys.origin()->carrier_to_ambient[static_cast<size_t>(i)]);
    }
    return FinitePartialSystem(std::move(names), Metric::dense(m, std::move(t)), W,
                               std::move(domains), std::move(maps), std::move(origin));
}

} // namespace pact
