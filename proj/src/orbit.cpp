#include "pact/orbit.hpp"

namespace pact {

IndexSignature index_signature(const FinitePartialSystem& sys, int x, int n) {
    if (x < 0 || x >= sys.size()) throw std::invalid_argument("point outside the carrier");
    if (n < 1 || n > sys.window() + 1) throw std::invalid_argument("horizon outside the stored window");
    return {n, sys.signature(x, n)};
}

DnValue orbit_distance(const FinitePartialSystem& sys, int x, int y, int n) {
    IndexSignature sx = index_signature(sys, x, n);
    IndexSignature sy = index_signature(sys, y, n);
    uint64_t shared = sx.members & sy.members;
    DnValue r{0.0, shared};
    uint64_t it = shared;
    while (it) {
        const int i = std::countr_zero(it);
        it &= it - 1;
        const double d = sys.dist(sys.map(i, x), sys.map(i, y));
        if (d > r.value) r.value = d;
    }
    return r;
}

Bits partial_ball(const FinitePartialSystem& sys, int x, int n, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    IndexSignature sx = index_signature(sys, x, n);
    Bits ball(sys.size());
    ball.set_all();
    for (int i : sx.to_indices()) {
        // alpha_i^{-1}(B_eps(alpha_i(x)) & X_i)
        Bits pre(sys.size());
        const int xi = sys.map(i, x);
        sys.domain(-i).for_each([&](int y) {
            const int yi = sys.map(i, y);
            if (sys.domain(i).test(yi) && sys.dist(xi, yi) < eps) pre.set(y);
        });
        ball &= pre;
    }
    return ball;
}

Bits signature_neighborhood(const FinitePartialSystem& sys, const Bits& K, int x, int n, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const uint64_t sx = sys.signature(x, n);
    Bits out(sys.size());
    K.for_each([&](int y) {
        if (sys.signature(y, n) != sx) return;
        uint64_t it = sx;
        double d = 0.0;
        while (it) {
            const int i = std::countr_zero(it);
            it &= it - 1;
            d = std::max(d, sys.dist(sys.map(i, x), sys.map(i, y)));
        }
        if (d < eps) out.set(y);
    });
    return out;
}

FiniteOrbitView::FiniteOrbitView(const FinitePartialSystem& sys, std::vector<int> pts, int horizon)
    : m_(static_cast<int>(pts.size())),
      horizon_(horizon),
      pts_(std::move(pts)),
      metric_(&sys.metric()) {
    if (horizon_ < 1 || horizon_ > sys.window() + 1)
        throw std::invalid_argument("view horizon outside the stored window");
    if (m_ == 0) throw std::invalid_argument("empty view carrier");
    sigs_.resize(static_cast<size_t>(m_));
    for (int k = 0; k < m_; ++k) sigs_[static_cast<size_t>(k)] = sys.signature(pts_[static_cast<size_t>(k)], horizon_);
    orbit_.assign(static_cast<size_t>(horizon_) * m_, -1);
    for (int i = 0; i < horizon_; ++i)
        for (int k = 0; k < m_; ++k)
            if ((sigs_[static_cast<size_t>(k)] >> i) & 1)
                orbit_[static_cast<size_t>(i) * m_ + k] = sys.map(i, pts_[static_cast<size_t>(k)]);
    if (sys.metric().is_dense()) {
        table_ = sys.metric().raw_table();
        stride_ = static_cast<size_t>(sys.metric().size());
    }
}

} // namespace pact
