#ifndef PACT_BITS_HPP
#define PACT_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace pact {

// Fixed-size bitset over a point carrier.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }

    void set_all() {
        for (auto& w : w_) w = ~uint64_t{0};
        trim();
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    // this \ o
    Bits minus(const Bits& o) const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    Bits complement() const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int first_set() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bits of(int n, const std::vector<int>& idx) {
        Bits b(n);
        for (int i : idx) b.set(i);
        return b;
    }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace pact

#endif
