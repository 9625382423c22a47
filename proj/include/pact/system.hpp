#ifndef PACT_SYSTEM_HPP
#define PACT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pact/bits.hpp"
#include "pact/metric.hpp"

namespace pact {

// Provenance for systems obtained by restricting a finite permutation to a
// subset; lets downstream code recover true orbit periods and the exact
// enveloping global action.
struct RestrictionOrigin {
    int ambient_size = 0;
    std::vector<int32_t> perm;              // ambient bijection
    std::vector<int32_t> carrier_to_ambient;
    std::vector<std::string> ambient_names;
    Metric ambient_metric;
};

// A partial bijection family {alpha_n : X_{-n} -> X_n} over a finite carrier,
// stored for |n| <= window. Immutable after construction.
class FinitePartialSystem {
public:
    FinitePartialSystem(std::vector<std::string> names,
                        Metric metric,
                        int window,
                        std::vector<Bits> domains,                 // index n+window
                        std::vector<std::vector<int32_t>> maps,    // -1 where undefined
                        std::optional<RestrictionOrigin> origin = std::nullopt);

    int size() const { return static_cast<int>(names_.size()); }
    int window() const { return window_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    int index_of(const std::string& name) const;  // -1 if absent

    const Metric& metric() const { return metric_; }
    double dist(int i, int j) const { return metric_(i, j); }

    const Bits& domain(int n) const { return domains_[static_cast<size_t>(n + window_)]; }
    // alpha_n applied to carrier index x, or -1 when x is outside X_{-n}.
    int32_t map(int n, int x) const { return maps_[static_cast<size_t>(n + window_)][static_cast<size_t>(x)]; }
    const std::vector<int32_t>& map_row(int n) const { return maps_[static_cast<size_t>(n + window_)]; }

    // Bitmask of {i in [0,n): x in X_{-i}}; bit 0 is always set. n <= window+1.
    uint64_t signature(int x, int n) const;

    const std::optional<RestrictionOrigin>& origin() const { return origin_; }

private:
    std::vector<std::string> names_;
    Metric metric_;
    int window_;
    std::vector<Bits> domains_;
    std::vector<std::vector<int32_t>> maps_;
    std::optional<RestrictionOrigin> origin_;
};

enum class Axiom {
    IdentityAtZero,   // X_0 = X and alpha_0 = id
    Bijection,        // alpha_n a bijection X_{-n} -> X_n
    DomainImage,      // alpha_n(X_{-n} & X_m) = X_n & X_{n+m}
    Composition       // alpha_n(alpha_m(x)) = alpha_{n+m}(x)
};

const char* axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    int n = 0, m = 0;
    int point = -1;   // witness carrier index, -1 when not point-specific
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;
};

// Exhaustive verification over all stored indices. Malformed metric tables
// (asymmetry, negativity, off-diagonal zero, triangle failure) raise
// std::invalid_argument rather than being reported as axiom violations.
AxiomReport check_axioms(const FinitePartialSystem& sys);

// Validates a dense metric table; returns a human-readable defect or nullopt.
std::optional<std::string> metric_defect(const Metric& m);

// Partial system induced by restricting the bijection f to the subset Y:
// carrier Y, X_n = Y & f^n(Y), alpha_n = f^n.
FinitePartialSystem restrict_global(const std::vector<std::string>& names,
                                    const Metric& metric,
                                    const std::vector<int32_t>& f,
                                    const std::vector<int32_t>& Y,
                                    int window);

// Componentwise product with the max metric; windows truncate to the smaller.
// Carriers above dense_table_limit points keep a lazy product metric.
FinitePartialSystem product_system(const FinitePartialSystem& a,
                                   const FinitePartialSystem& b,
                                   int dense_table_limit = 2048);

// Side-by-side union of two systems on disjoint carriers; cross distances are
// a constant large enough to keep the triangle inequality.
FinitePartialSystem disjoint_union(const FinitePartialSystem& a,
                                   const FinitePartialSystem& b);

// Copy with one map entry rewired; used to probe the axiom checker.
FinitePartialSystem perturb_map_entry(const FinitePartialSystem& sys, int n, int x, int new_target);

// nullopt when S is invariant under every stored alpha_n, else a witness (n, x)
// with x in S & X_{-n} but alpha_n(x) outside S.
std::optional<std::pair<int, int>> partial_invariance_witness(const FinitePartialSystem& sys,
                                                              const Bits& S);

// Restriction of the action to a partially-invariant subset (throws on a
// non-invariant input). Carrier order follows the parent order.
FinitePartialSystem subsystem(const FinitePartialSystem& sys, const Bits& S);

} // namespace pact

#endif
