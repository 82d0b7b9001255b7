#pragma once

#include "tbt/errors.hpp"

#include <cstdint>

namespace tbt {

// A prime field GF(p), p <= 251. Elements are ints in [0, p).
class GF {
public:
    GF() : p_(2) {}
    explicit GF(int p) : p_(p) {
        require(p >= 2 && p <= 251, "field modulus must be in [2, 251]");
        require(is_prime(p), "field modulus must be prime");
    }

    int p() const { return p_; }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return int(std::int64_t(a) * b % p_); }

    int inv(int a) const {
        require(a % p_ != 0, "division by zero in GF(p)");
        // extended Euclid
        int t = 0, new_t = 1, r = p_, new_r = a % p_;
        while (new_r != 0) {
            int q = r / new_r;
            int tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return (t % p_ + p_) % p_;
    }

    int reduce(long long a) const {
        long long r = a % p_;
        return int(r < 0 ? r + p_ : r);
    }

    bool operator==(const GF& o) const { return p_ == o.p_; }
    bool operator!=(const GF& o) const { return p_ != o.p_; }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    int p_;
};

} // namespace tbt
