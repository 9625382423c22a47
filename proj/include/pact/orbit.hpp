#ifndef PACT_ORBIT_HPP
#define PACT_ORBIT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pact/system.hpp"

namespace pact {

// I_n(x): the defined orbit times below the horizon. Bit 0 is always set.
struct IndexSignature {
    int horizon = 0;
    uint64_t members = 1;

    bool contains(int i) const { return (members >> i) & 1; }
    std::vector<int> to_indices() const {
        std::vector<int> v;
        for (int i = 0; i < horizon; ++i)
            if (contains(i)) v.push_back(i);
        return v;
    }
};

struct DnValue {
    double value = 0.0;
    uint64_t support = 1;  // the shared signature the max ran over
};

IndexSignature index_signature(const FinitePartialSystem& sys, int x, int n);
DnValue orbit_distance(const FinitePartialSystem& sys, int x, int y, int n);

// B_eps(x,n): points whose orbit stays eps-close to the orbit of x at every
// time in I_n(x).
Bits partial_ball(const FinitePartialSystem& sys, int x, int n, double eps);

// U(x,n,eps): equal signature and orbit distance < eps, within carrier subset K.
Bits signature_neighborhood(const FinitePartialSystem& sys, const Bits& K, int x, int n, double eps);

// Precomputed orbit/signature tables over a carrier subset, the common input
// of every counting kernel. Point k of the view is carrier index pts[k].
class FiniteOrbitView {
public:
    FiniteOrbitView(const FinitePartialSystem& sys, std::vector<int> pts, int horizon);

    int size() const { return m_; }
    int horizon() const { return horizon_; }
    int carrier_index(int k) const { return pts_[static_cast<size_t>(k)]; }
    const std::vector<int>& points() const { return pts_; }
    uint64_t sig(int k) const { return sigs_[static_cast<size_t>(k)]; }
    uint64_t sig(int k, int n) const {
        return sigs_[static_cast<size_t>(k)] & ((n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
    }

    // d(alpha_i(x_a), alpha_i(x_b)); only valid when i lies in both signatures.
    double step_dist(int a, int b, int i) const {
        const int32_t u = orbit_[static_cast<size_t>(i) * m_ + a];
        const int32_t v = orbit_[static_cast<size_t>(i) * m_ + b];
        if (table_) return table_[static_cast<size_t>(u) * stride_ + v];
        return (*metric_)(u, v);
    }

    double dn(int a, int b, int n) const {
        uint64_t shared = sig(a, n) & sig(b, n);
        double d = 0.0;
        while (shared) {
            const int i = std::countr_zero(shared);
            shared &= shared - 1;
            const double s = step_dist(a, b, i);
            if (s > d) d = s;
        }
        return d;
    }

private:
    int m_;
    int horizon_;
    std::vector<int> pts_;
    std::vector<uint64_t> sigs_;
    std::vector<int32_t> orbit_;
    const double* table_ = nullptr;
    size_t stride_ = 0;
    const Metric* metric_ = nullptr;
};

} // namespace pact

#endif
