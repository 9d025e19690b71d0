#pragma once

// Prime field GF(p) arithmetic on uint32_t residues, p < 2^31.
// Inverses come from a shared table for p <= 2^16 and from the
// extended Euclidean algorithm for larger primes.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace quivhom {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    // deterministic Miller-Rabin; these bases decide primality far beyond 2^31
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) { return (__uint128_t)a * b % n; };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1)
                r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

class PrimeField {
public:
    static constexpr std::uint32_t kInverseTableBound = 1u << 16;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31) || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
        if (p <= kInverseTableBound) {
            auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0u);
            for (std::uint32_t a = 1; a < p; ++a)
                (*table)[a] = inv_euclid(a);
            inv_table_ = std::move(table);
        }
    }

    std::uint32_t prime() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return (std::uint32_t)((std::uint64_t)a * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0)
            throw std::domain_error("PrimeField::inv: zero has no inverse");
        if (inv_table_)
            return (*inv_table_)[a];
        return inv_euclid(a);
    }
    std::uint32_t reduce(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0)
            r += p_;
        return (std::uint32_t)r;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t inv_euclid(std::uint32_t a) const {
        long long t = 0, new_t = 1;
        long long r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += p_;
        return (std::uint32_t)t;
    }

    std::uint32_t p_;
    std::shared_ptr<const std::vector<std::uint32_t>> inv_table_;
};

// splitmix64: deterministic cross-platform stream for seeded sampling
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace quivhom
