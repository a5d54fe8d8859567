#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psalg {

struct ModulusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

// Deterministic Miller-Rabin, valid for all n < 3'215'031'751 with these bases.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % n);
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/// Prime modulus p, 2 <= p <= 2^31-1. Primality is checked at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t p) : p_(p) {
        if (p < 2 || p > 0x7fffffffu)
            throw std::invalid_argument("modulus out of range [2, 2^31-1]: " + std::to_string(p));
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    }
    std::uint32_t value() const { return p_; }
    bool operator==(const PrimeModulus&) const = default;

private:
    std::uint32_t p_;
};

// Raw residue arithmetic; inputs assumed canonical in [0, p).
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}
inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t fp_reduce_i64(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}
inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of zero mod " + std::to_string(p));
    return fp_pow(a % p, p - 2, p); // Fermat
}

/// Canonical residue together with its modulus; operations across different
/// moduli are rejected.
class Scalar {
public:
    Scalar(std::int64_t v, PrimeModulus m) : m_(m), v_(fp_reduce_i64(v, m.value())) {}

    std::uint32_t value() const { return v_; }
    const PrimeModulus& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    friend Scalar operator+(Scalar a, Scalar b) { a.check(b); return Scalar(fp_add(a.v_, b.v_, a.p()), a.m_); }
    friend Scalar operator-(Scalar a, Scalar b) { a.check(b); return Scalar(fp_sub(a.v_, b.v_, a.p()), a.m_); }
    friend Scalar operator*(Scalar a, Scalar b) { a.check(b); return Scalar(fp_mul(a.v_, b.v_, a.p()), a.m_); }
    Scalar operator-() const { return Scalar(fp_neg(v_, p()), m_); }
    Scalar inv() const { return Scalar(fp_inv(v_, p()), m_); }
    bool operator==(const Scalar& o) const { return m_ == o.m_ && v_ == o.v_; }

private:
    Scalar(std::uint32_t v, PrimeModulus m, int) : m_(m), v_(v) {}
    static Scalar raw(std::uint32_t v, PrimeModulus m) { return Scalar(v, m, 0); }
    std::uint32_t p() const { return m_.value(); }
    void check(const Scalar& o) const {
        if (!(m_ == o.m_)) throw ModulusMismatch("scalars over different prime fields");
    }
    PrimeModulus m_;
    std::uint32_t v_;
};

} // namespace psalg
