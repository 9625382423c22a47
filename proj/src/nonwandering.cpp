#include "pact/nonwandering.hpp"

#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pact::nonwandering {

NonwanderingSet recurrent_exact(const FinitePartialSystem& sys) {
    if (!sys.origin())
        throw std::invalid_argument(
            "exact recurrence needs a restriction-origin system; use the approximate mode");
    const auto& o = *sys.origin();
    // orbit periods from the cycle decomposition of the generator
    std::vector<int> period(static_cast<size_t>(o.ambient_size), 0);
    std::vector<char> done(static_cast<size_t>(o.ambient_size), 0);
    for (int v = 0; v < o.ambient_size; ++v) {
        if (done[static_cast<size_t>(v)]) continue;
        int len = 0, u = v;
        do {
            ++len;
            u = o.perm[static_cast<size_t>(u)];
        } while (u != v);
        u = v;
        do {
            period[static_cast<size_t>(u)] = len;
            done[static_cast<size_t>(u)] = 1;
            u = o.perm[static_cast<size_t>(u)];
        } while (u != v);
    }

    NonwanderingSet out;
    out.mode = NonwanderingSet::Mode::Exact;
    out.members = Bits(sys.size());
    out.evidence.assign(static_cast<size_t>(sys.size()), {});
    for (int x = 0; x < sys.size(); ++x) {
        const int p = period[static_cast<size_t>(o.carrier_to_ambient[static_cast<size_t>(x)])];
        if (p <= sys.window()) {
            out.members.set(x);
            for (int n = p; n <= sys.window(); n += p)
                out.evidence[static_cast<size_t>(x)].emplace_back(n, 0.0);
        } else {
            out.window_limited = true;
        }
    }
    return out;
}

NonwanderingSet recurrent_approx(const FinitePartialSystem& sys, double eps, int n_lo) {
    if (eps <= 0 || n_lo < 1) throw std::invalid_argument("need eps > 0 and n_lo >= 1");
    NonwanderingSet out;
    out.mode = NonwanderingSet::Mode::Approx;
    out.members = Bits(sys.size());
    out.evidence.assign(static_cast<size_t>(sys.size()), {});
    const int P = sys.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int x = 0; x < P; ++x) {
        auto& ev = out.evidence[static_cast<size_t>(x)];
        for (int n = n_lo; n <= sys.window(); ++n) {
            if (!sys.domain(-n).test(x)) continue;
            const double d = sys.dist(sys.map(n, x), x);
            if (d < eps) ev.emplace_back(n, d);
        }
    }
    for (int x = 0; x < P; ++x)
        if (!out.evidence[static_cast<size_t>(x)].empty()) out.members.set(x);
    return out;
}

NonwanderingSet recurrent_approx(const SampledPartialSystem& sys, double eps, int n_lo) {
    if (eps <= 0 || n_lo < 1) throw std::invalid_argument("need eps > 0 and n_lo >= 1");
    NonwanderingSet out;
    out.mode = NonwanderingSet::Mode::Approx;
    out.members = Bits(sys.size());
    out.evidence.assign(static_cast<size_t>(sys.size()), {});
    const int P = sys.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int x = 0; x < P; ++x) {
        auto& ev = out.evidence[static_cast<size_t>(x)];
        const Vec2 p = sys.sample(x);
        Vec2 q = p;
        for (int n = 1; n <= sys.window(); ++n) {
            q = sys.map().fwd(q);  // q was f^{n-1}(p), still inside A
            if (!sys.map().in_domain(q)) break;
            if (n < n_lo) continue;
            const double d = chebyshev(q, p);
            if (d < eps) ev.emplace_back(n, d);
        }
    }
    for (int x = 0; x < P; ++x)
        if (!out.evidence[static_cast<size_t>(x)].empty()) out.members.set(x);
    return out;
}

namespace {

template <class System>
ConcentrationReport run_concentration(const System& sys, const entropy::SweepConfig& cfg,
                                      const ConcentrationOptions& opt, NonwanderingSet omega,
                                      const entropy::EntropyEstimate& full) {
    ConcentrationReport rep;
    rep.tol = opt.tol;
    rep.omega = std::move(omega);
    rep.est_full = full;
    rep.omega_empty = rep.omega.members.empty();
    if (rep.omega_empty) {
        rep.est_omega = entropy::EntropyEstimate{};
        rep.anomaly = rep.est_full.hbar > 0.01;
        rep.defect = rep.est_full.hbar;
        rep.ok = !rep.anomaly;
        return rep;
    }
    if constexpr (std::is_same_v<System, FinitePartialSystem>) {
        rep.est_omega = entropy::estimate(sys, rep.omega.members.to_indices(), cfg);
    } else {
        SampledOrbitView v(sys, rep.omega.members.to_indices(),
                           std::min(cfg.n_max, sys.window() + 1));
        rep.est_omega = entropy::hbar_estimate(v, cfg);
    }
    rep.defect = std::abs(rep.est_full.hbar - rep.est_omega.hbar);
    rep.ok = rep.defect <= opt.tol;
    return rep;
}

} // namespace

ConcentrationReport concentration_experiment(const FinitePartialSystem& sys,
                                             const entropy::SweepConfig& cfg,
                                             const ConcentrationOptions& opt) {
    const int n_lo = opt.n_lo > 0 ? opt.n_lo : std::max(1, sys.window() / 2);
    NonwanderingSet omega = (sys.origin() && !opt.force_approx)
                                ? recurrent_exact(sys)
                                : recurrent_approx(sys, opt.eps, n_lo);
    return run_concentration(sys, cfg, opt, std::move(omega), entropy::estimate(sys, cfg));
}

ConcentrationReport concentration_experiment(const SampledPartialSystem& sys,
                                             const entropy::SweepConfig& cfg,
                                             const ConcentrationOptions& opt) {
    const int n_lo = opt.n_lo > 0 ? opt.n_lo : std::max(1, sys.window() / 2);
    NonwanderingSet omega = recurrent_approx(sys, opt.eps, n_lo);
    std::vector<int> all(static_cast<size_t>(sys.size()));
    std::iota(all.begin(), all.end(), 0);
    SampledOrbitView v(sys, all, std::min(cfg.n_max, sys.window() + 1));
    return run_concentration(sys, cfg, opt, std::move(omega), entropy::hbar_estimate(v, cfg));
}

} // namespace pact::nonwandering
