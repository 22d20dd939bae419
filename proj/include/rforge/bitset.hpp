#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace rforge {

// Fixed-capacity dynamic bitset over 64-bit words. This is the workhorse of
// every exact search kernel; keep it allocation-light and branch-light.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    // Lowest set bit strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this := this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset complement() const {
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                f(int(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset from(int nbits, const std::vector<int>& bits) {
        Bitset b(nbits);
        for (int i : bits) b.set(i);
        return b;
    }

private:
    void trim() {
        int tail = nbits_ & 63;
        if (tail && !words_.empty()) words_.back() &= (uint64_t{1} << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace rforge
