#include "ultrametra/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ultra {

namespace {

/// Solves M x = b exactly over the rationals. Returns nullopt when inconsistent.
/// Requires a unique solution on the pivoted columns; free columns get 0.
std::optional<std::vector<BigRat>> solve_exact(std::vector<std::vector<BigRat>> M,
                                               std::vector<BigRat> b) {
    const size_t rows = M.size();
    const size_t cols = rows ? M[0].size() : 0;
    std::vector<long> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && M[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[r]);
        std::swap(b[pr], b[r]);
        BigRat inv = M[r][c];
        for (size_t cc = c; cc < cols; ++cc) M[r][cc] /= inv;
        b[r] /= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || M[rr][c] == 0) continue;
            BigRat f = M[rr][c];
            for (size_t cc = c; cc < cols; ++cc) M[rr][cc] -= f * M[r][cc];
            b[rr] -= f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<long>(c));
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (b[rr] != 0) return std::nullopt;
    std::vector<BigRat> x(cols, BigRat(0));
    for (size_t rr = 0; rr < r; ++rr) x[pivot_col_of_row[rr]] = b[rr];
    return x;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace

SeriesResult sum_factorial_linear(long p, long K) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    BigRat eps = pow_rat(p, -K);
    BigInt sum = 0, fact = 1;
    long n = 1;
    while (true) {
        fact *= n;  // n!
        sum += fact * n;
        if (factorial_norm(n + 1, p) < eps) break;
        ++n;
    }
    SeriesResult res;
    res.value = PAdic::from_integer(sum, p, K);
    res.terms_used = n;
    res.tail_bound = factorial_norm(n + 1, p);
    return res;
}

bool partial_sum_identity_check(long N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    BigInt sum = 0, fact = 1;
    for (long n = 1; n <= N - 1; ++n) {
        fact *= n;
        sum += fact * n;
    }
    return sum == factorial(N) - 1;
}

SeriesResult evaluate_S_k(const std::vector<IntPolynomial>& C, int eps, const PAdic& x, long K) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    if (!x.exact_zero() && x.valuation() < 0)
        throw std::invalid_argument("x must lie in Z_p");
    long p = x.prime();
    BigRat tol = pow_rat(p, -K);
    PAdic sum = PAdic::zero(p);
    PAdic xpow = PAdic::from_integer(1, p, K + 4);
    BigInt fact = 1;
    int sign = 1;
    long n = 0;
    while (true) {
        if (n > 0) {
            fact *= n;
            sign *= eps;
            xpow = xpow * x;
        }
        // P(n; x) = Sum_j C_j(n) x^j
        PAdic pval = PAdic::zero(p);
        PAdic xj = PAdic::from_integer(1, p, K + 4);
        for (size_t j = 0; j < C.size(); ++j) {
            if (j > 0) xj = xj * x;
            BigInt cj = C[j].eval(n);
            if (cj != 0) pval = pval + PAdic::from_integer(cj, p, K + 4) * xj;
        }
        PAdic term = PAdic::from_integer(sign * fact, p, K + 4) * pval * xpow;
        sum = sum + term;
        if (factorial_norm(n + 1, p) < tol) break;
        ++n;
        if (x.is_zero() && n > 0) break;  // only the n = 0 term survives
    }
    SeriesResult res;
    res.value = sum;
    res.terms_used = n + 1;
    res.tail_bound = factorial_norm(n + 1, p);
    return res;
}

InvariantSummation solve_invariant_summation(long k, int eps, long n_check) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");

    // Unknowns: a_{m,j} (coefficient of n^m x^j in A, m=0..k, j=0..k-1),
    // then u_s (s=0..k). The difference identity, valid for all n >= 0,
    //   n^k x^k + U(x) = eps (n+1) A(n+1; x) x - A(n; x)
    // is matched coefficientwise in n^t x^s.
    const long na = (k + 1) * k;
    const long nu = k + 1;
    const long cols = na + nu;
    auto a_idx = [&](long m, long j) { return m * k + j; };

    std::vector<std::vector<BigRat>> M;
    std::vector<BigRat> rhs;
    for (long t = 0; t <= k + 1; ++t) {
        for (long s = 0; s <= k; ++s) {
            std::vector<BigRat> row(cols, BigRat(0));
            BigRat b(0);
            // eps (n+1)^{m+1} a_{m,j} x^{j+1}: contributes to (t, s=j+1)
            if (s >= 1) {
                long j = s - 1;
                for (long m = 0; m <= k; ++m)
                    if (t <= m + 1) row[a_idx(m, j)] += BigRat(eps) * BigRat(binomial(m + 1, t));
            }
            // -a_{t,s} n^t x^s
            if (t <= k && s <= k - 1) row[a_idx(t, s)] -= 1;
            // LHS: n^k x^k once, and u_s at t = 0
            if (t == k && s == k) b += 1;
            if (t == 0) row[na + s] -= 1;
            M.push_back(std::move(row));
            rhs.push_back(b);
        }
    }
    auto sol = solve_exact(std::move(M), std::move(rhs));
    if (!sol) throw std::runtime_error("invariant summation: no solution within ansatz");
    for (const auto& v : *sol)
        if (denominator(v) != 1)
            throw std::runtime_error("invariant summation: non-integer solution");

    InvariantSummation out;
    out.A.x_coeffs.resize(k);
    for (long j = 0; j < k; ++j) {
        std::vector<BigInt> c(k + 1);
        for (long m = 0; m <= k; ++m) c[m] = numerator((*sol)[a_idx(m, j)]);
        out.A.x_coeffs[j] = IntPolynomial(std::move(c));
    }
    {
        std::vector<BigInt> u(k + 1);
        for (long s = 0; s <= k; ++s) u[s] = numerator((*sol)[na + s]);
        out.U = IntPolynomial(std::move(u));
    }
    // base case n = 0 of the identity fixes V = -A(0; x)
    {
        std::vector<BigInt> v(k, BigInt(0));
        for (long j = 0; j < k; ++j) v[j] = -out.A.x_coeffs[j].eval(0);
        out.V = IntPolynomial(std::move(v));
    }

    // verify by exact expansion at several integer x for all n <= n_check
    for (long xi = -5; xi <= 5 && n_check > 0; ++xi) {
        BigInt x = xi;
        BigInt lhs = 0, fact = 1;
        int sg = 1;
        for (long n = 0; n <= n_check; ++n) {
            BigInt epn = sg;
            BigInt xn = 1;
            for (long t = 0; t < n; ++t) xn *= x;
            BigInt rhsv = out.V.eval(x) + epn * fact * out.A.eval(n, x) * xn;
            if (lhs != rhsv) throw std::runtime_error("invariant summation: verification failed");
            // extend the sum with the i = n term
            BigInt ik = 1;
            for (long t = 0; t < k; ++t) ik *= n;
            BigInt xk = 1;
            for (long t = 0; t < k; ++t) xk *= x;
            lhs += epn * fact * (ik * xk + out.U.eval(x)) * xn;
            fact *= (n + 1);
            sg *= eps;
        }
    }

    // relation from the source identity: U = x A(1;x) - eps A(0;x), V = -eps A(0;x)
    bool ok = true;
    {
        std::vector<BigInt> u2(k + 1, BigInt(0));
        for (long j = 0; j < k; ++j) {
            u2[j + 1] += out.A.x_coeffs[j].eval(1);
            u2[j] -= BigInt(eps) * out.A.x_coeffs[j].eval(0);
        }
        IntPolynomial expectU(std::move(u2));
        std::vector<BigInt> v2(k, BigInt(0));
        for (long j = 0; j < k; ++j) v2[j] = -BigInt(eps) * out.A.x_coeffs[j].eval(0);
        IntPolynomial expectV(std::move(v2));
        ok = (expectU == out.U) && (expectV == out.V);
    }
    out.series_relation_consistent = ok;
    return out;
}

NonInvarianceReport non_invariance_scan(long k, long x, const std::vector<long>& primes, long K,
                                        long height_bound) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    NonInvarianceReport rep;
    rep.k = k;
    rep.x = x;
    rep.primes = primes;

    std::vector<PAdic> sums;
    for (long p : primes) {
        BigRat tol = pow_rat(p, -K);
        BigInt sum = 0, fact = 1, xn = 1;
        long n = 0;
        while (true) {
            BigInt nk = 1;
            for (long t = 0; t < k; ++t) nk *= n;
            sum += fact * nk * xn;
            if (factorial_norm(n + 1, p) < tol) break;
            ++n;
            fact *= n;
            xn *= x;
        }
        sums.push_back(PAdic::from_integer(sum, p, K));
    }

    for (long den = 1; den <= height_bound; ++den) {
        for (long num = -height_bound; num <= height_bound; ++num) {
            if (std::gcd(std::abs(num), den) != 1) continue;
            BigRat r(num, den);
            NonInvarianceCandidate cand;
            cand.r = r;
            for (size_t i = 0; i < primes.size(); ++i) {
                PAdic rp = PAdic::from_rational(r, primes[i], K);
                if (agrees(rp, sums[i]))
                    cand.matching_primes.push_back(primes[i]);
                else
                    cand.mismatching_primes.push_back(primes[i]);
            }
            if (!cand.matching_primes.empty()) {
                if (cand.mismatching_primes.empty()) rep.common_values.push_back(r);
                rep.partial_matches.push_back(std::move(cand));
            }
        }
    }
    return rep;
}

ZetaResult zeta_dirichlet(std::complex<double> s, long N) {
    if (s.real() <= 1.0) throw std::invalid_argument("zeta_dirichlet requires Re s > 1");
    std::complex<double> sum = 0.0;
    for (long n = N; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    ZetaResult r;
    r.value = sum;
    r.tail_estimate = std::pow(static_cast<double>(N), 1.0 - s.real()) / (s.real() - 1.0);
    return r;
}

ZetaResult zeta_euler(std::complex<double> s, long P) {
    if (s.real() <= 1.0) throw std::invalid_argument("zeta_euler requires Re s > 1");
    std::complex<double> prod = 1.0;
    for (long p : primes_up_to(P))
        prod /= (1.0 - std::exp(-s * std::log(static_cast<double>(p))));
    ZetaResult r;
    r.value = prod;
    r.tail_estimate = std::pow(static_cast<double>(std::max<long>(P, 2)), 1.0 - s.real());
    return r;
}

}  // namespace ultra
