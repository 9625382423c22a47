#ifndef PACT_GLOBALIZATION_HPP
#define PACT_GLOBALIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pact/entropy.hpp"
#include "pact/system.hpp"

namespace pact::globalization {

struct WindowPair {
    int r;
    int x;
    bool operator==(const WindowPair&) const = default;
};

// Quotient of [-R, R] x carrier under (r,x) ~ (s,y) iff x in X_{s-r} and
// alpha_{r-s}(x) = y, together with the induced shift on classes.
struct GlobalizationResult {
    int radius = 0;
    std::vector<std::vector<WindowPair>> classes;  // each sorted, list sorted by least pair
    std::vector<int32_t> embedding;                // x -> class of (0, x)
    std::vector<int32_t> shift;                    // class id under r -> r+1, -1 off-window
    bool relation_symmetric = true;
    bool relation_transitive = true;
    bool window_exact = false;
    // classes as a partial system over the window (discrete metric), when the
    // truncation itself satisfies the axioms
    std::optional<FinitePartialSystem> quotient;
    // for restriction-origin systems: the enveloping global action on the
    // orbit saturation of the carrier, which globalizes losslessly
    std::optional<FinitePartialSystem> exact_global;
    std::vector<int32_t> exact_embedding;  // carrier -> exact_global index

    int class_of(int r, int x) const { return class_index[static_cast<size_t>((r + radius) * stride + x)]; }

    std::vector<int32_t> class_index;  // (r+R)*stride + x -> class id
    int stride = 0;
};

GlobalizationResult globalize(const FinitePartialSystem& sys, int radius);

struct EquivalenceWitness {
    bool ok = true;
    struct Failure {
        int n;
        int x;  // -1 for set-level mismatches
        std::string what;
    };
    std::vector<Failure> failures;
};

// h must be a carrier bijection a -> b; checks h(X_n) = Y_n and
// h(alpha_n(x)) = beta_n(h(x)) for every stored n.
EquivalenceWitness check_equivalence(const FinitePartialSystem& a, const FinitePartialSystem& b,
                                     const std::vector<int32_t>& h);

struct GapReport {
    entropy::EntropyEstimate est_partial;
    entropy::EntropyEstimate est_global;
    double gap = 0.0;  // global - partial
    bool ok = false;
    std::string path;  // "saturation" or "window-quotient"
    bool window_exact = false;
};

// Compares the partial growth rate against the enveloping global one. Uses the
// exact saturation for restriction-origin systems; otherwise requires a
// window-exact truncation (or allow_inexact to force the quotient estimate).
GapReport globalization_gap(const FinitePartialSystem& sys, int radius,
                            const entropy::SweepConfig& cfg, double tol = 0.05,
                            bool allow_inexact = false);

} // namespace pact::globalization

#endif
