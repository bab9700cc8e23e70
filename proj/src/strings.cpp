#include "ultrametra/strings.hpp"

#include <cmath>
#include <stdexcept>

namespace ultra {

namespace {

std::complex<double> cpow(double base, std::complex<double> e) {
    return std::exp(e * std::log(base));
}

std::complex<double> local_factor(long p, std::complex<double> s) {
    double pd = static_cast<double>(p);
    std::complex<double> den = 1.0 - cpow(pd, -s);
    if (std::abs(den) < 1e-14) throw std::domain_error("amplitude: pole in local factor");
    return (1.0 - cpow(pd, s - 1.0)) / den;
}

}  // namespace

std::complex<double> local_zeta(long p, std::complex<double> s) {
    return 1.0 / (1.0 - cpow(static_cast<double>(p), -s));
}

std::complex<double> amplitude_closed(const AmplitudeParams& params, long p) {
    return local_factor(p, params.a) * local_factor(p, params.b) * local_factor(p, params.c());
}

BigRat amplitude_closed_exact(long a, long b, long p) {
    auto factor = [&](long s) {
        BigRat den = 1 - pow_rat(p, -s);
        if (den == 0) throw std::domain_error("amplitude: pole in local factor");
        return (1 - pow_rat(p, s - 1)) / den;
    };
    long c = 1 - a - b;
    return factor(a) * factor(b) * factor(c);
}

IntegralResult amplitude_integral(const AmplitudeParams& params, long p, long N) {
    const std::complex<double> a = params.a, b = params.b;
    if (a.real() <= 0.0 || b.real() <= 0.0 || (a + b).real() >= 1.0)
        throw std::domain_error("amplitude_integral: outside the convergence region");
    const double pd = static_cast<double>(p);
    const double unit = 1.0 - 1.0 / pd;  // measure of each unit sphere factor

    // three geometric series with ratios r0 = p^-a (spheres around 0),
    // r1 = p^-b (spheres around 1), rInf = p^(a+b-1) (|x| > 1)
    std::complex<double> ratios[3] = {cpow(pd, -a), cpow(pd, -b), cpow(pd, a + b - 1.0)};
    std::complex<double> value = 1.0 - 2.0 / pd;
    double tail_magnitude = 0.0;
    for (const auto& r : ratios) {
        std::complex<double> partial = 0.0, rk = 1.0;
        for (long k = 1; k <= N; ++k) {
            rk *= r;
            partial += rk;
        }
        std::complex<double> tail = rk * r / (1.0 - r);  // sum from k = N+1
        value += unit * (partial + tail);
        tail_magnitude += std::abs(unit * tail);
    }
    return {value, tail_magnitude};
}

double zeta_real(double s) {
    if (s > 1.0) return std::riemann_zeta(s);
    if (s < 0.0) {
        // functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
        const double pi = 3.14159265358979323846;
        return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) *
               std::tgamma(1.0 - s) * std::riemann_zeta(1.0 - s);
    }
    throw std::domain_error("zeta_real: argument in [0, 1]");
}

ProductResult product_zeta_ratio(double a, double b, long P) {
    AmplitudeParams params{a, b};
    double c = 1.0 - a - b;
    ProductResult res;
    res.product = 1.0;
    for (long p : primes_up_to(P)) {
        ProductRow row;
        row.p = p;
        row.factor = amplitude_closed(params, p);
        res.product *= row.factor;
        row.running = res.product;
        res.rows.push_back(row);
    }
    res.zeta_ratio = (zeta_real(a) * zeta_real(b) * zeta_real(c)) /
                     (zeta_real(1.0 - a) * zeta_real(1.0 - b) * zeta_real(1.0 - c));
    res.deviation = std::abs(res.product - res.zeta_ratio);
    return res;
}

}  // namespace ultra
