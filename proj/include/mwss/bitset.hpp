// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_BITSET_HPP
#define MWSS_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace mwss {

// Dynamic bitset over node indices. All neighborhood tests in the solver run
// through word-parallel operations on these.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void resize(int nbits) {
        nbits_ = nbits;
        w_.resize((nbits + 63) / 64, 0);
        trim();
    }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& x : w_) x = 0; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // mixed sizes treat the shorter operand as zero-padded
    Bitset& operator&=(const Bitset& o) {
        std::size_t m = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < m; ++i) w_[i] &= o.w_[i];
        for (std::size_t i = m; i < w_.size(); ++i) w_[i] = 0;
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        std::size_t m = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < m; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& operator-=(const Bitset& o) {
        std::size_t m = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < m; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    bool intersects(const Bitset& o) const {
        std::size_t m = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < m; ++i) if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int count_and(const Bitset& o) const {
        std::size_t m = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        int c = 0;
        for (std::size_t i = 0; i < m; ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // a subset of b
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
            if (w_[i] & ~ow) return false;
        }
        return true;
    }

    // first set bit >= from, or -1
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~0ULL << (from & 63));
        for (;;) {
            if (cur) return static_cast<int>((wi << 6) + std::countr_zero(cur));
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t cur = w_[wi];
            while (cur) {
                int b = std::countr_zero(cur);
                f(static_cast<int>((wi << 6) + b));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset of(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

private:
    void trim() {
        if (nbits_ & 63) {
            if (!w_.empty()) w_.back() &= (~0ULL >> (64 - (nbits_ & 63)));
        }
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace mwss

#endif
