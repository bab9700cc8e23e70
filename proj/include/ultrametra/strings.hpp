#pragma once

#include <complex>
#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

/// Veneziano amplitude parameters; c = 1 - a - b so a + b + c = 1.
struct AmplitudeParams {
    std::complex<double> a;
    std::complex<double> b;
    std::complex<double> c() const { return 1.0 - a - b; }
};

/// Local zeta factor zeta_p(s) = 1 / (1 - p^-s).
std::complex<double> local_zeta(long p, std::complex<double> s);

/// A_p(a, b) = prod_{s in {a,b,c}} (1 - p^(s-1)) / (1 - p^-s).
std::complex<double> amplitude_closed(const AmplitudeParams& params, long p);

/// Exact rational evaluation for integer parameters (e.g. A_2(2,2) = -5/21).
BigRat amplitude_closed_exact(long a, long b, long p);

struct IntegralResult {
    std::complex<double> value;     // truncated spheres plus the analytic tails
    double tail_magnitude = 0.0;    // size of the appended tail terms
};

/// Integral over Q_p of |x|^(a-1) |1-x|^(b-1) dx by sphere decomposition:
/// spheres |x| = p^-k and |1-x| = p^-k (k = 1..N), spheres |x| = p^k (k = 1..N),
/// the bulk |x| = |1-x| = 1 of measure 1 - 2/p, and exact geometric tails.
/// Requires Re a > 0, Re b > 0, Re(a + b) < 1.
IntegralResult amplitude_integral(const AmplitudeParams& params, long p, long N);

struct ProductRow {
    long p = 0;
    std::complex<double> factor;
    std::complex<double> running;
};

struct ProductResult {
    std::complex<double> product;      // prod_{p <= P} A_p(a, b)
    std::complex<double> zeta_ratio;   // zeta(a)zeta(b)zeta(c) / (zeta(1-a)zeta(1-b)zeta(1-c))
    double deviation = 0.0;            // |product - zeta_ratio|
    std::vector<ProductRow> rows;
};

/// Truncated adelic product against the global zeta ratio (real parameters;
/// zeta evaluated on the real line, including negative arguments).
ProductResult product_zeta_ratio(double a, double b, long P);

/// Riemann zeta on the real line away from [0, 1] and the pole at 1.
double zeta_real(double s);

}  // namespace ultra
