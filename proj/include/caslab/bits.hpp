#pragma once

#include <cstdint>
#include <vector>

namespace caslab {

// Fixed-capacity dynamic bitset sized at construction. Used for inversion
// sets and root subsets indexed by the positive-root table.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bits& andnot(const Bits& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits andnot(Bits a, const Bits& b) { return a.andnot(b); }

    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    // Indices of set bits, ascending.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace caslab
