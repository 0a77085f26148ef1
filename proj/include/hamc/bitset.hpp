#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hamc {

// Flat dynamic bitset used by the exact solvers.  Only the handful of
// operations the branch-and-bound needs; everything stays inlineable.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Lowest set bit, or size() when empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return n_;
    }

    // Lowest set bit strictly after i, or size() when none.
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t k = i >> 6;
        std::uint64_t w = w_[k] & (~0ULL << (i & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == w_.size()) return n_;
            w = w_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    // this := a & b, avoiding a temporary in the hot loop.
    void assign_and(const Bitset& a, const Bitset& b) {
        n_ = a.n_;
        w_.resize(a.w_.size());
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] = a.w_[k] & b.w_[k];
    }

    // Flip all bits (tail bits beyond size() kept clean).
    void flip() {
        for (std::uint64_t& w : w_) w = ~w;
        trim();
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace hamc
