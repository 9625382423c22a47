#ifndef PACT_SAMPLED_HPP
#define PACT_SAMPLED_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pact {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline double chebyshev(Vec2 a, Vec2 b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// A planar homeomorphism between open sets, with an explicit inverse.
struct PlanarPartialMap {
    std::function<bool(Vec2)> in_domain;  // the open set A
    std::function<bool(Vec2)> in_range;   // f(A)
    std::function<Vec2(Vec2)> fwd;        // valid on A
    std::function<Vec2(Vec2)> inv;        // valid on f(A)
};

// Lazily evaluated partial action generated by a planar partial map:
// X_{-n} collects the points whose first n forward steps stay in A, and the
// sample list is a finite stand-in for a compact subset of A.
class SampledPartialSystem {
public:
    SampledPartialSystem(PlanarPartialMap map, std::vector<Vec2> samples, int window,
                         std::vector<std::string> sample_names = {});

    int size() const { return static_cast<int>(samples_.size()); }
    int window() const { return window_; }
    const std::vector<Vec2>& samples() const { return samples_; }
    Vec2 sample(int i) const { return samples_[static_cast<size_t>(i)]; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const PlanarPartialMap& map() const { return map_; }

    // Membership of an arbitrary coordinate point in X_n (n may be negative).
    bool in_X(int n, Vec2 p) const;

    // Orbit value alpha_i(p) when i lies in the signature, otherwise nullopt.
    // For i >= 1 all intermediate forward images must stay in A.
    std::optional<Vec2> orbit_point(Vec2 p, int i) const;

    // I_n(p) as a bitmask; bit 0 is always set (the sample space itself).
    uint64_t signature(Vec2 p, int n) const;
    uint64_t signature(int sample_idx, int n) const { return signature(samples_[static_cast<size_t>(sample_idx)], n); }

private:
    PlanarPartialMap map_;
    std::vector<Vec2> samples_;
    std::vector<std::string> names_;
    int window_;
};

struct SampledAxiomViolation {
    int kind;  // 1, 2, 3 mirroring the finite checker's axiom families
    int n = 0, m = 0;
    int sample = -1;
    double error = 0.0;
};

struct SampledAxiomReport {
    bool passed = true;
    std::vector<SampledAxiomViolation> violations;
};

// Pointwise verification on the sample set, to absolute tolerance `tol`:
// membership consistency of images/preimages and agreement of composed orbit
// maps with the direct ones.
SampledAxiomReport check_axioms_sampled(const SampledPartialSystem& sys, double tol = 1e-9);

// Counting view over sampled systems (Chebyshev step distances on precomputed
// coordinate orbits); interface-compatible with FiniteOrbitView.
class SampledOrbitView {
public:
    SampledOrbitView(const SampledPartialSystem& sys, std::vector<int> pts, int horizon);

    int size() const { return m_; }
    int horizon() const { return horizon_; }
    int carrier_index(int k) const { return pts_[static_cast<size_t>(k)]; }
    const std::vector<int>& points() const { return pts_; }
    uint64_t sig(int k) const { return sigs_[static_cast<size_t>(k)]; }
    uint64_t sig(int k, int n) const {
        return sigs_[static_cast<size_t>(k)] & ((n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
    }
    double step_dist(int a, int b, int i) const {
        return chebyshev(orbit_[static_cast<size_t>(i) * m_ + a], orbit_[static_cast<size_t>(i) * m_ + b]);
    }
    double dn(int a, int b, int n) const {
        uint64_t shared = sig(a, n) & sig(b, n);
        double d = 0.0;
        while (shared) {
            const int i = std::countr_zero(shared);
            shared &= shared - 1;
            d = std::max(d, step_dist(a, b, i));
        }
        return d;
    }

private:
    int m_;
    int horizon_;
    std::vector<int> pts_;
    std::vector<uint64_t> sigs_;
    std::vector<Vec2> orbit_;
};

} // namespace pact

#endif
