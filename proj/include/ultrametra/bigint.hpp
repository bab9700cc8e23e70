#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ultra {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_int(long base, long exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// p^e as an exact rational, e may be negative.
inline BigRat pow_rat(long p, long e) {
    if (e >= 0) return BigRat(pow_int(p, e));
    return BigRat(1, pow_int(p, -e));
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(std::max<long>(n + 1, 2), true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (sieve[i])
            for (long k = i * i; k <= n; k += i) sieve[k] = false;
    std::vector<long> out;
    for (long i = 2; i <= n; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

/// Exponent of p in n; requires n != 0.
inline long valuation(BigInt n, long p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long valuation(const BigRat& q, long p) {
    return valuation(numerator(q), p) - valuation(denominator(q), p);
}

/// Modular inverse of a modulo m (m > 1, gcd(a, m) = 1).
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = ((a % m) + m) % m;
    BigInt t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t0 % m) + m) % m;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ultra
