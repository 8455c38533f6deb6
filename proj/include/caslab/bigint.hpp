#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace caslab {

// Unsigned big integer, base 1e9 limbs. Covers the factorial growth of
// greedy-decomposition counts; only the handful of operations needed for
// multinomial recursions are provided.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(uint64_t v) {
        limbs_.clear();
        do {
            limbs_.push_back(static_cast<uint32_t>(v % BASE));
            v /= BASE;
        } while (v);
    }

    static BigUint one() { return BigUint(1); }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    BigUint& mul_small(uint64_t m) {
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry % BASE));
            carry /= BASE;
        }
        return *this;
    }

    // Exact division by a small divisor; throws if a remainder is left.
    BigUint& div_small_exact(uint64_t dvs) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = rem * BASE + limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / dvs);
            rem = cur % dvs;
        }
        if (rem != 0) throw std::logic_error("BigUint: inexact division");
        trim();
        return *this;
    }

    BigUint operator*(const BigUint& o) const {
        std::vector<uint64_t> acc(limbs_.size() + o.limbs_.size(), 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            if (!limbs_[i]) continue;
            uint64_t carry = 0;
            for (size_t j = 0; j < o.limbs_.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] +
                                        acc[i + j] + carry;
                acc[i + j] = static_cast<uint64_t>(cur % BASE);
                carry = static_cast<uint64_t>(cur / BASE);
            }
            size_t k = i + o.limbs_.size();
            while (carry) {
                uint64_t cur = acc[k] + carry;
                acc[k] = cur % BASE;
                carry = cur / BASE;
                ++k;
            }
        }
        BigUint r;
        r.limbs_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        return false;
    }
    bool operator<=(const BigUint& o) const { return !(o < *this); }

    bool fits_u64() const {
        return limbs_.size() <= 2 ||
               (limbs_.size() == 3 && limbs_[2] <= 18u); // 18e18 < 2^64
    }
    uint64_t to_u64() const {
        uint64_t v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = v * BASE + limbs_[i];
        return v;
    }

    std::string str() const {
        std::string s = std::to_string(limbs_.back());
        for (size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr uint64_t BASE = 1000000000ull;
    std::vector<uint32_t> limbs_;
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
};

// n choose k, exact.
inline BigUint binomial(int n, int k) {
    if (k < 0 || k > n) return BigUint(0);
    BigUint c = BigUint::one();
    for (int j = 1; j <= k; ++j) {
        c.mul_small(static_cast<uint64_t>(n - k + j));
        c.div_small_exact(static_cast<uint64_t>(j));
    }
    return c;
}

// (sum r_i)! / prod r_i!, exact, as a product of binomials.
inline BigUint multinomial(const std::vector<int>& parts) {
    BigUint m = BigUint::one();
    int n = 0;
    for (int r : parts) {
        n += r;
        m = m * binomial(n, r);
    }
    return m;
}

} // namespace caslab
