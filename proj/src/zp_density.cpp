#include "ultrametra/zp_density.hpp"

#include <cmath>
#include <stdexcept>

namespace ultra {

ZpDensity::ZpDensity(long p, int M, std::vector<double> values)
    : p_(p), M_(M), values_(std::move(values)) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    long n = 1;
    for (int i = 0; i < M; ++i) n *= p;
    if (static_cast<long>(values_.size()) != n)
        throw std::invalid_argument("ZpDensity: need one value per coset of p^M Z_p");
    double mass = 0.0;
    for (double v : values_) {
        if (v < 0) throw std::invalid_argument("ZpDensity: negative value");
        mass += v;
    }
    mass /= static_cast<double>(n);
    if (std::abs(mass - 1.0) > 1e-9) throw std::invalid_argument("ZpDensity: mass != 1");
}

ZpDensity ZpDensity::uniform(long p, int M) {
    long n = 1;
    for (int i = 0; i < M; ++i) n *= p;
    return ZpDensity(p, M, std::vector<double>(n, 1.0));
}

ZpDensity ZpDensity::uniform_on_ball(long p, int M, long a, int r) {
    if (r < 0 || r > M) throw std::invalid_argument("uniform_on_ball: need 0 <= r <= M");
    long n = 1;
    for (int i = 0; i < M; ++i) n *= p;
    long pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    std::vector<double> v(n, 0.0);
    for (long c = 0; c < n; ++c)
        if ((c - a) % pr == 0) v[c] = static_cast<double>(pr);
    return ZpDensity(p, M, std::move(v));
}

double ZpDensity::total_mass() const {
    double mass = 0.0;
    for (double v : values_) mass += v;
    return mass / static_cast<double>(values_.size());
}

double ZpDensity::sup_distance_to_uniform(int support_r) const {
    long pr = 1;
    for (int i = 0; i < support_r; ++i) pr *= p_;
    double u = static_cast<double>(pr);  // uniform density on the ball p^r Z_p
    double dist = 0.0;
    for (long c = 0; c < cells(); ++c) {
        double expected = (c % pr == 0) ? u : 0.0;
        dist = std::max(dist, std::abs(values_[c] - expected));
    }
    return dist;
}

ZpDensity convolve(const ZpDensity& a, const ZpDensity& b) {
    if (a.p_ != b.p_ || a.M_ != b.M_) throw std::invalid_argument("convolve: shape mismatch");
    const long n = a.cells();
    std::vector<double> out(n, 0.0);
    const double w = 1.0 / static_cast<double>(n);  // Haar measure p^-M per cell
    for (long c = 0; c < n; ++c) {
        double s = 0.0;
        for (long x = 0; x < n; ++x) {
            long y = c - x;
            if (y < 0) y += n;
            s += a.values_[x] * b.values_[y];
        }
        out[c] = s * w;
    }
    return ZpDensity(a.p_, a.M_, std::move(out));
}

ConvergenceReport convergence_report(const ZpDensity& d, int support_r, int constancy_r,
                                     long n_max) {
    const long p = d.p();
    const int M = d.resolution();
    if (support_r < 0 || constancy_r < support_r || constancy_r > M)
        throw std::invalid_argument("convergence_report: need 0 <= support_r <= constancy_r <= M");
    if (constancy_r == M && support_r == constancy_r)
        throw std::invalid_argument("convergence_report: density is a point mass at resolution M");

    long pr = 1, pc = 1;
    for (int i = 0; i < support_r; ++i) pr *= p;
    for (int i = 0; i < constancy_r; ++i) pc *= p;
    const long n = d.cells();

    // locate the support coset a + p^support_r Z_p and verify containment
    long a = -1;
    for (long c = 0; c < n; ++c)
        if (d.values()[c] != 0.0) {
            if (a < 0) a = c % pr;
            if (c % pr != a)
                throw std::invalid_argument("convergence_report: support exceeds claimed ball");
        }
    if (a < 0) throw std::invalid_argument("convergence_report: empty density");
    // verify local constancy at scale p^-constancy_r (value depends only on
    // the coset mod p^constancy_r)
    for (long c = 0; c < n; ++c)
        if (d.values()[c] != d.values()[c % pc])
            throw std::invalid_argument("convergence_report: not locally constant at given scale");

    // translate so the support sits in the subgroup p^support_r Z_p; sums then
    // stay inside and the distance to uniform is translation-invariant
    std::vector<double> shifted(n);
    for (long c = 0; c < n; ++c) shifted[c] = d.values()[(c + a) % n];
    ZpDensity base(p, M, shifted);

    const double ratio = static_cast<double>(pc) / static_cast<double>(pr);  // D / Delta
    const double lambda = std::pow(1.0 / ratio, 3) / 3.0;

    ConvergenceReport rep;
    ZpDensity s = base;
    for (long k = 1; k <= n_max; ++k) {
        if (k > 1) s = convolve(s, base);
        ConvergenceRow row;
        row.n = k;
        // scale-invariant distance: measured after rescaling the support ball
        // to unit Haar mass (factor D = p^-support_r), so the equilibrium
        // density has height 1 regardless of the support radius
        row.distance =
            s.sup_distance_to_uniform(support_r) * std::pow(double(p), -support_r);
        row.bound = (ratio - 1.0) * std::exp(-lambda * static_cast<double>(k));
        row.violated = row.distance > row.bound + 1e-12;
        rep.any_violation = rep.any_violation || row.violated;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ultra
