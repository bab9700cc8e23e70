#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

/// A p-adic number known to finite precision: value = p^valuation * (unit part),
/// where the unit part is given by K base-p digits, least significant first.
/// The represented value is exact modulo p^(valuation + K).
class PAdic {
  public:
    PAdic() = default;

    static PAdic zero(long p);
    static PAdic from_rational(const BigRat& q, long p, long K);
    static PAdic from_integer(const BigInt& n, long p, long K);

    /// Build from an explicit unit part (reduced mod p^K; unit may be divisible
    /// by p, in which case the valuation is adjusted).
    static PAdic from_unit(long p, long valuation, BigInt unit, long K);

    long prime() const { return prime_; }
    long valuation() const { return valuation_; }
    long precision() const { return static_cast<long>(digits_.size()); }
    bool exact_zero() const { return exact_zero_; }
    const std::vector<uint32_t>& digits() const { return digits_; }

    /// True for exact zero and for values that vanished to the available precision.
    bool is_zero() const { return exact_zero_ || digits_.empty(); }

    /// Exponent m such that the value is known modulo p^m.
    long known_exponent() const { return valuation_ + precision(); }

    /// Unit part as an integer, Sum digits_i p^i.
    BigInt unit() const;

    /// Exact rational value of the stored digits (truncation of the true value).
    BigRat rational_value() const;

    /// |x|_p = p^-valuation, 0 for exact zero. For a value that vanished to
    /// precision this is an upper bound.
    BigRat norm() const;

    PAdic operator-() const;
    friend PAdic operator+(const PAdic& x, const PAdic& y);
    friend PAdic operator-(const PAdic& x, const PAdic& y);
    friend PAdic operator*(const PAdic& x, const PAdic& y);
    friend PAdic operator/(const PAdic& x, const PAdic& y);

    /// True when x - y vanishes to the shared precision.
    friend bool agrees(const PAdic& x, const PAdic& y);

    std::string to_string() const;

  private:
    long prime_ = 2;
    long valuation_ = 0;
    std::vector<uint32_t> digits_;  // least significant first, digits_[0] != 0
    bool exact_zero_ = true;

    static void check_same_prime(const PAdic& x, const PAdic& y);
};

/// {q}_p: the p-adic fractional part, an exact rational in [0,1) with
/// denominator a power of p.
BigRat fractional_part(const BigRat& q, long p);

/// chi_p(q) = exp(2 pi i {q}_p).
std::complex<double> additive_character(const BigRat& q, long p);

/// |q|_inf * prod_p |q|_p over primes dividing numerator and denominator.
/// Exact; equals 1 for every nonzero rational.
BigRat mult_product_check(const BigRat& q);

/// exp(-2 pi i q) * prod_{p | den} exp(2 pi i {q}_p); equals 1 for rationals.
std::complex<double> additive_product_check(const BigRat& q);

/// Monna map over the represented digits: Sum x_i p^(-i-1), exact.
BigRat monna_map_exact(const PAdic& x);
double monna_map(const PAdic& x);

/// |n!|_p = p^-((n - s_n)/(p-1)) with s_n the base-p digit sum of n.
BigRat factorial_norm(long n, long p);

struct Adele {
    double real_part = 0.0;
    std::map<long, PAdic> finite_parts;
    std::set<long> support;
};

/// Componentwise embedding of q; `primes` must cover every prime where q has
/// negative valuation.
Adele adele_from_rational(const BigRat& q, const std::set<long>& primes, long K = 16);

}  // namespace ultra
