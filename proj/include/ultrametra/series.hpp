#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ultrametra/padic.hpp"

namespace ultra {

/// Integer-coefficient polynomial in one variable, ascending degree.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<BigInt> c) : coeffs(c) { trim(); }
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }
    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

/// Polynomial in x whose coefficients are integer polynomials in n:
/// A(n; x) = Sum_j a_j(n) x^j.
struct BivarPolynomial {
    std::vector<IntPolynomial> x_coeffs;  // index j: coefficient of x^j, a poly in n

    BigInt eval(const BigInt& n, const BigInt& x) const {
        BigInt r = 0, xp = 1;
        for (const auto& a : x_coeffs) {
            r += a.eval(n) * xp;
            xp *= x;
        }
        return r;
    }
};

struct SeriesResult {
    PAdic value;
    long terms_used = 0;
    BigRat tail_bound;  // p-adic norm bound on the truncation error
};

/// Sum n! * n, summed p-adically until |N!|_p < p^-K; the limit is -1.
SeriesResult sum_factorial_linear(long p, long K);

/// Exact check of Sum_{n=1}^{N-1} n! n = N! - 1.
bool partial_sum_identity_check(long N);

/// S_k(x) = Sum eps^n n! P(n;x) x^n with P(n;x) = Sum_j C[j](n) x^j, x in Z_p.
SeriesResult evaluate_S_k(const std::vector<IntPolynomial>& C, int eps, const PAdic& x, long K);

struct InvariantSummation {
    IntPolynomial U;     // in x
    IntPolynomial V;     // in x
    BivarPolynomial A;   // in (n; x)
    bool series_relation_consistent = false;  // U = x A(1;x) - eps A(0;x), V = -eps A(0;x)
};

/// Solve Sum_{i=0}^{n-1} eps^i i! [i^k x^k + U(x)] x^i = V(x) + eps^n n! A(n;x) x^n
/// for integer polynomials U, V, A; verified by exact expansion for n <= n_check.
/// Throws std::runtime_error if no integer solution exists within the ansatz.
InvariantSummation solve_invariant_summation(long k, int eps, long n_check);

struct NonInvarianceCandidate {
    BigRat r;
    std::vector<long> matching_primes;
    std::vector<long> mismatching_primes;
};

struct NonInvarianceReport {
    long k = 0;
    long x = 0;
    std::vector<long> primes;
    /// candidates that match the p-adic sum in at least one prime
    std::vector<NonInvarianceCandidate> partial_matches;
    /// candidates (if any) matching in every prime
    std::vector<BigRat> common_values;
};

/// Computes Sum n! n^k x^n in each Q_p to precision K and scans all rationals
/// with |num|, den <= height_bound for agreement.
NonInvarianceReport non_invariance_scan(long k, long x, const std::vector<long>& primes, long K,
                                        long height_bound = 100);

struct ZetaResult {
    std::complex<double> value;
    double tail_estimate = 0.0;
};

/// Truncated Dirichlet series Sum_{n<=N} n^-s, Re s > 1.
ZetaResult zeta_dirichlet(std::complex<double> s, long N);

/// Truncated Euler product prod_{p<=P} (1 - p^-s)^-1, Re s > 1.
ZetaResult zeta_euler(std::complex<double> s, long P);

}  // namespace ultra
