#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace grouplib {

// Fixed-size dynamic bitset over element indices 0..n-1.
class Bitset {
public:
    Bitset() : size_(0) {}
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }
    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    Bitset operator&(const Bitset& o) const {
        assert(size_ == o.size_);
        Bitset r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        assert(size_ == o.size_);
        Bitset r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    bool subset_of(const Bitset& o) const {
        assert(size_ == o.size_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    bool operator<(const Bitset& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return words_ < o.words_;
    }

    // First set index >= from, or -1.
    int next(int from) const {
        for (int i = from; i < size_; ++i)
            if (test(i)) return i;
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

private:
    int size_;
    std::vector<std::uint64_t> words_;
};

}  // namespace grouplib
