#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace girthbound {

// Fixed-universe vertex set with word-parallel intersection tests.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Smallest element of the intersection, or -1.
    int first_common(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & o.words_[i];
            if (w) return int(i) * 64 + std::countr_zero(w);
        }
        return -1;
    }

    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i) * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace girthbound
