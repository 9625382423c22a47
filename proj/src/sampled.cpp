#include "pact/sampled.hpp"

#include <optional>
#include <stdexcept>

namespace pact {

SampledPartialSystem::SampledPartialSystem(PlanarPartialMap map, std::vector<Vec2> samples,
                                           int window, std::vector<std::string> sample_names)
    : map_(std::move(map)), samples_(std::move(samples)), names_(std::move(sample_names)), window_(window) {
    if (samples_.empty()) throw std::invalid_argument("empty sample set");
    if (window_ < 1 || window_ > 62) throw std::invalid_argument("window must be in [1, 62]");
    for (const Vec2& p : samples_)
        if (!map_.in_domain(p)) throw std::invalid_argument("sample point outside the open domain");
    if (names_.empty()) {
        names_.reserve(samples_.size());
        for (size_t i = 0; i < samples_.size(); ++i) names_.push_back("s" + std::to_string(i));
    }
    if (names_.size() != samples_.size()) throw std::invalid_argument("sample name count mismatch");
}

bool SampledPartialSystem::in_X(int n, Vec2 p) const {
    if (n == 0) return true;
    if (!map_.in_domain(p)) return false;
    Vec2 q = p;
    if (n < 0) {
        for (int k = 0; k < -n; ++k) {
            q = map_.fwd(q);
            if (!map_.in_domain(q)) return false;
        }
        return true;
    }
    for (int k = 0; k < n; ++k) {
        if (!map_.in_range(q)) return false;
        q = map_.inv(q);
        if (!map_.in_domain(q)) return false;
    }
    return true;
}

std::optional<Vec2> SampledPartialSystem::orbit_point(Vec2 p, int i) const {
    if (i == 0) return p;
    if (!in_X(-i, p)) return std::nullopt;
    Vec2 q = p;
    if (i > 0)
        for (int k = 0; k < i; ++k) q = map_.fwd(q);
    else
        for (int k = 0; k < -i; ++k) q = map_.inv(q);
    return q;
}

uint64_t SampledPartialSystem::signature(Vec2 p, int n) const {
    uint64_t s = 1;
    if (!map_.in_domain(p)) return s;  // outside A only time 0 is defined
    Vec2 q = p;
    for (int i = 1; i < n; ++i) {
        q = map_.fwd(q);
        if (!map_.in_domain(q)) break;
        s |= uint64_t{1} << i;
    }
    return s;
}

SampledAxiomReport check_axioms_sampled(const SampledPartialSystem& sys, double tol) {
    SampledAxiomReport rep;
    auto fail = [&](int kind, int n, int m, int sample, double err) {
        rep.passed = false;
        rep.violations.push_back({kind, n, m, sample, err});
    };
    const int W = sys.window();
    for (int s = 0; s < sys.size(); ++s) {
        const Vec2 p = sys.sample(s);
        // (i): the sample space is the open domain itself
        if (!sys.map().in_domain(p)) fail(1, 0, 0, s, 0.0);
        for (int n = -W; n <= W; ++n) {
            for (int m = -W; m <= W; ++m) {
                if (std::abs(n + m) > W) continue;
                // (iii) on samples: alpha_n(alpha_m(p)) = alpha_{n+m}(p)
                if (sys.in_X(-m, p) && sys.in_X(-m - n, p)) {
                    auto mid = sys.orbit_point(p, m);
                    auto direct = sys.orbit_point(p, n + m);
                    auto composed = mid ? sys.orbit_point(*mid, n) : std::nullopt;
                    if (!direct || !composed)
                        fail(3, n, m, s, 1.0);
                    else if (chebyshev(*direct, *composed) > tol)
                        fail(3, n, m, s, chebyshev(*direct, *composed));
                }
                // (ii) pointwise: images land where they must, and back
                if (sys.in_X(-n, p) && sys.in_X(m, p)) {
                    auto img = sys.orbit_point(p, n);
                    if (!img || !sys.in_X(n, *img) || !sys.in_X(n + m, *img)) fail(2, n, m, s, 1.0);
                }
                if (sys.in_X(n, p) && sys.in_X(n + m, p)) {
                    auto pre = sys.orbit_point(p, -n);
                    if (!pre || !sys.in_X(-n, *pre) || !sys.in_X(m, *pre)) fail(2, n, m, s, 1.0);
                }
            }
        }
    }
    return rep;
}

SampledOrbitView::SampledOrbitView(const SampledPartialSystem& sys, std::vector<int> pts, int horizon)
    : m_(static_cast<int>(pts.size())), horizon_(horizon), pts_(std::move(pts)) {
    if (m_ == 0) throw std::invalid_argument("empty view carrier");
    if (horizon_ < 1 || horizon_ > sys.window() + 1)
        throw std::invalid_argument("view horizon outside the stored window");
    sigs_.resize(static_cast<size_t>(m_));
    orbit_.assign(static_cast<size_t>(horizon_) * m_, Vec2{});
    for (int k = 0; k < m_; ++k) {
        const Vec2 p = sys.sample(pts_[static_cast<size_t>(k)]);
        sigs_[static_cast<size_t>(k)] = sys.signature(p, horizon_);
        Vec2 q = p;
        orbit_[static_cast<size_t>(0) * m_ + k] = q;
        for (int i = 1; i < horizon_; ++i) {
            if (!((sigs_[static_cast<size_t>(k)] >> i) & 1)) break;
            q = sys.map().fwd(q);
            orbit_[static_cast<size_t>(i) * m_ + k] = q;
        }
    }
}

} // namespace pact
