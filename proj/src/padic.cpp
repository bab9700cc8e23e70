#include "ultrametra/padic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ultra {

namespace {

void require_prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

}  // namespace

PAdic PAdic::zero(long p) {
    require_prime(p);
    PAdic z;
    z.prime_ = p;
    z.exact_zero_ = true;
    return z;
}

PAdic PAdic::from_unit(long p, long valuation, BigInt unit, long K) {
    require_prime(p);
    if (K < 0) throw std::invalid_argument("negative precision");
    BigInt mod = pow_int(p, K);
    unit = ((unit % mod) + mod) % mod;
    PAdic x;
    x.prime_ = p;
    x.exact_zero_ = false;
    if (unit == 0) {
        // vanished within the known window: valuation is a lower bound
        x.valuation_ = valuation + K;
        return x;
    }
    long shift = 0;
    while (unit % p == 0) {
        unit /= p;
        ++shift;
    }
    x.valuation_ = valuation + shift;
    long prec = K - shift;
    x.digits_.reserve(prec);
    for (long i = 0; i < prec; ++i) {
        x.digits_.push_back(static_cast<uint32_t>(unit % p));
        unit /= p;
    }
    return x;
}

PAdic PAdic::from_integer(const BigInt& n, long p, long K) {
    require_prime(p);
    if (n == 0) return zero(p);
    long v = ultra::valuation(n, p);
    return from_unit(p, v, n / pow_int(p, v), K);
}

PAdic PAdic::from_rational(const BigRat& q, long p, long K) {
    require_prime(p);
    if (K < 1) throw std::invalid_argument("precision must be >= 1");
    if (q == 0) return zero(p);
    BigInt num = numerator(q), den = denominator(q);
    long vn = ultra::valuation(num, p), vd = ultra::valuation(den, p);
    num /= pow_int(p, vn);
    den /= pow_int(p, vd);
    BigInt mod = pow_int(p, K);
    BigInt unit = (num % mod) * mod_inverse(den, mod) % mod;
    return from_unit(p, vn - vd, unit, K);
}

BigInt PAdic::unit() const {
    BigInt u = 0;
    for (size_t i = digits_.size(); i-- > 0;) u = u * prime_ + digits_[i];
    return u;
}

BigRat PAdic::rational_value() const {
    if (is_zero()) return BigRat(0);
    return BigRat(unit()) * pow_rat(prime_, valuation_);
}

BigRat PAdic::norm() const {
    if (exact_zero_) return BigRat(0);
    return pow_rat(prime_, -valuation_);
}

void PAdic::check_same_prime(const PAdic& x, const PAdic& y) {
    if (x.prime_ != y.prime_) throw std::invalid_argument("prime mismatch");
}

PAdic PAdic::operator-() const {
    if (exact_zero_) return *this;
    return from_unit(prime_, valuation_, -unit(), precision());
}

PAdic operator+(const PAdic& x, const PAdic& y) {
    PAdic::check_same_prime(x, y);
    if (x.exact_zero_) return y;
    if (y.exact_zero_) return x;
    long known = std::min(x.known_exponent(), y.known_exponent());
    long base = std::min(x.valuation_, y.valuation_);
    long K = known - base;
    if (K <= 0) {
        // no overlapping digit window survives
        PAdic z = PAdic::zero(x.prime_);
        z.exact_zero_ = false;
        z.valuation_ = known;
        return z;
    }
    BigInt s = x.unit() * pow_int(x.prime_, x.valuation_ - base) +
               y.unit() * pow_int(y.prime_, y.valuation_ - base);
    return PAdic::from_unit(x.prime_, base, s, K);
}

PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }

PAdic operator*(const PAdic& x, const PAdic& y) {
    PAdic::check_same_prime(x, y);
    if (x.exact_zero_ || y.exact_zero_) return PAdic::zero(x.prime_);
    long K = std::min(x.precision(), y.precision());
    if (x.is_zero() || y.is_zero()) {
        PAdic z = PAdic::zero(x.prime_);
        z.exact_zero_ = false;
        z.valuation_ = x.valuation_ + y.valuation_;
        return z;
    }
    return PAdic::from_unit(x.prime_, x.valuation_ + y.valuation_, x.unit() * y.unit(), K);
}

PAdic operator/(const PAdic& x, const PAdic& y) {
    PAdic::check_same_prime(x, y);
    if (y.is_zero()) throw std::domain_error("p-adic division by zero");
    if (x.exact_zero_) return x;
    long K = std::min(x.precision(), y.precision());
    if (K <= 0 || x.is_zero()) {
        PAdic z = PAdic::zero(x.prime_);
        z.exact_zero_ = false;
        z.valuation_ = x.valuation_ - y.valuation_;
        return z;
    }
    BigInt mod = pow_int(x.prime_, K);
    BigInt u = x.unit() % mod * mod_inverse(y.unit(), mod) % mod;
    return PAdic::from_unit(x.prime_, x.valuation_ - y.valuation_, u, K);
}

bool agrees(const PAdic& x, const PAdic& y) {
    PAdic::check_same_prime(x, y);
    return (x - y).is_zero();
}

std::string PAdic::to_string() const {
    std::ostringstream os;
    if (exact_zero_) {
        os << "0 (exact, p=" << prime_ << ")";
        return os.str();
    }
    os << "p=" << prime_ << " v=" << valuation_ << " digits=[";
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << ",";
        os << digits_[i];
    }
    os << "]";
    return os.str();
}

BigRat fractional_part(const BigRat& q, long p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    if (q == 0) return BigRat(0);
    BigInt den = denominator(q);
    long m = valuation(den, p);
    if (m == 0) return BigRat(0);
    BigInt pm = pow_int(p, m);
    BigInt b = den / pm;  // coprime to p
    // q = num / (b p^m); fractional part = (num b^{-1} mod p^m) / p^m
    BigInt r = numerator(q) % pm * mod_inverse(b, pm) % pm;
    r = ((r % pm) + pm) % pm;
    return BigRat(r, pm);
}

std::complex<double> additive_character(const BigRat& q, long p) {
    BigRat f = fractional_part(q, p);
    double arg = 2.0 * std::numbers::pi * static_cast<double>(f);
    return {std::cos(arg), std::sin(arg)};
}

BigRat mult_product_check(const BigRat& q) {
    if (q == 0) throw std::invalid_argument("mult_product_check: q must be nonzero");
    BigRat result = abs(q);
    // |q|_p = p^-v over numerator primes (v > 0) and p^+v over denominator primes
    for (bool denom : {false, true}) {
        BigInt n = abs(denom ? denominator(q) : numerator(q));
        auto apply = [&](const BigInt& prime, long v) {
            for (long i = 0; i < v; ++i) {
                if (denom)
                    result *= prime;
                else
                    result /= prime;
            }
        };
        for (BigInt d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                long v = 0;
                while (n % d == 0) {
                    n /= d;
                    ++v;
                }
                apply(d, v);
            }
        }
        if (n > 1) apply(n, 1);  // leftover prime factor, exponent 1
    }
    return result;
}

std::complex<double> additive_product_check(const BigRat& q) {
    // only q mod 1 matters for the real character
    BigInt whole = numerator(q) / denominator(q);
    double x = static_cast<double>(q - BigRat(whole));
    double arg = -2.0 * std::numbers::pi * x;
    std::complex<double> result(std::cos(arg), std::sin(arg));
    BigInt den = denominator(q);
    for (BigInt d = 2; d * d <= den; ++d) {
        if (den % d == 0) {
            result *= additive_character(q, static_cast<long>(d));
            while (den % d == 0) den /= d;
        }
    }
    if (den > 1) result *= additive_character(q, static_cast<long>(den));
    return result;
}

BigRat monna_map_exact(const PAdic& x) {
    if (x.is_zero()) return BigRat(0);
    BigRat r = 0;
    long p = x.prime();
    const auto& d = x.digits();
    for (size_t i = 0; i < d.size(); ++i) {
        long power = x.valuation() + static_cast<long>(i);  // digit of p^power
        r += BigRat(d[i]) * pow_rat(p, -power - 1);
    }
    return r;
}

double monna_map(const PAdic& x) { return static_cast<double>(monna_map_exact(x)); }

BigRat factorial_norm(long n, long p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    if (n < 0) throw std::invalid_argument("negative n");
    long s = 0;
    for (long m = n; m > 0; m /= p) s += m % p;
    long e = (n - s) / (p - 1);
    return pow_rat(p, -e);
}

Adele adele_from_rational(const BigRat& q, const std::set<long>& primes, long K) {
    Adele a;
    a.real_part = static_cast<double>(q);
    a.support = primes;
    if (q != 0) {
        BigInt den = denominator(q);
        for (BigInt d = 2; den > 1; ++d) {
            if (den % d == 0) {
                long p = static_cast<long>(d);
                if (!primes.count(p))
                    throw std::invalid_argument("support set misses prime " + std::to_string(p));
                while (den % d == 0) den /= d;
            }
        }
    }
    for (long p : primes) a.finite_parts.emplace(p, PAdic::from_rational(q, p, K));
    return a;
}

}  // namespace ultra
