#ifndef PACT_NONWANDERING_HPP
#define PACT_NONWANDERING_HPP

#include <optional>
#include <string>
#include <vector>

#include "pact/entropy.hpp"
#include "pact/sampled.hpp"
#include "pact/system.hpp"

namespace pact::nonwandering {

// Points that come back to themselves along defined times. Exact mode uses
// the generator's true orbit periods (restriction-origin systems only);
// approximate mode takes a single eps-return witness at or beyond n_lo.
struct NonwanderingSet {
    enum class Mode { Exact, Approx };
    Mode mode = Mode::Exact;
    Bits members;
    // per carrier point: the (n, d(alpha_n(x), x)) return witnesses used
    std::vector<std::vector<std::pair<int, double>>> evidence;
    // exact mode: some orbit period exceeds the window, so recurrence outside
    // the stored horizon is invisible
    bool window_limited = false;
};

// Exact recurrent set of a restriction system: carrier points whose generator
// period fits inside the window. Throws on systems without an origin.
NonwanderingSet recurrent_exact(const FinitePartialSystem& sys);

// {x : exists n in [n_lo, window], x in X_{-n}, d(alpha_n(x), x) < eps}.
NonwanderingSet recurrent_approx(const FinitePartialSystem& sys, double eps, int n_lo);
NonwanderingSet recurrent_approx(const SampledPartialSystem& sys, double eps, int n_lo);

struct ConcentrationReport {
    NonwanderingSet omega;
    entropy::EntropyEstimate est_full;
    entropy::EntropyEstimate est_omega;  // zero-valued placeholder when omega is empty
    bool omega_empty = false;
    bool anomaly = false;  // omega empty while the full estimate is away from zero
    double defect = 0.0;
    double tol = 0.15;
    bool ok = false;
};

struct ConcentrationOptions {
    double tol = 0.15;
    // approximate mode parameters; n_lo < 0 means window/2
    double eps = 0.05;
    int n_lo = -1;
    bool force_approx = false;
};

ConcentrationReport concentration_experiment(const FinitePartialSystem& sys,
                                             const entropy::SweepConfig& cfg,
                                             const ConcentrationOptions& opt = {});
ConcentrationReport concentration_experiment(const SampledPartialSystem& sys,
                                             const entropy::SweepConfig& cfg,
                                             const ConcentrationOptions& opt = {});

} // namespace pact::nonwandering

#endif
