#include "ultrametra/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ultra {

namespace {

/// p^(e/2) as a double, e any integer.
double half_power(long p, long e) {
    return std::pow(static_cast<double>(p), 0.5 * static_cast<double>(e));
}

/// Value of the mother wavelet family at y = p^gamma x - n: chi(j y / p) if
/// y lies in Z_p, else 0 (without the p^(-gamma/2) normalization).
Complex mother_at(long p, int j, const BigRat& y) {
    if (y != 0 && valuation(y, p) < 0) return Complex(0.0, 0.0);
    return additive_character(BigRat(j) * y / p, p);
}

/// rho(n) for a translation given by its digits at p^-1, p^-2, ...:
/// the digit at p^-(i+1) maps to p^i.
BigRat monna_of_translation(long p, const std::vector<uint32_t>& n_digits) {
    BigRat r = 0;
    BigRat pw = 1;
    for (uint32_t d : n_digits) {
        r += BigRat(d) * pw;
        pw *= p;
    }
    return r;
}

/// Classical Haar mother wavelet on the real line, zero outside [0, 1).
double haar(const BigRat& t) {
    if (t < 0 || t >= 1) return 0.0;
    return (2 * t < 1) ? 1.0 : -1.0;
}

std::vector<uint32_t> strip_trailing_zeros(std::vector<uint32_t> d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

}  // namespace

BigRat WaveletIndex::n_value(long p) const {
    BigRat n = 0;
    BigRat pw = BigRat(1, p);
    for (uint32_t d : n_digits) {
        n += BigRat(d) * pw;
        pw /= p;
    }
    return n;
}

Complex eval_mother_wavelet(long p, const BigRat& x) { return mother_at(p, 1, x); }

Complex eval_mother_wavelet(const PAdic& x) {
    return eval_mother_wavelet(x.prime(), x.exact_zero() ? BigRat(0) : x.rational_value());
}

Complex eval_wavelet(long p, const WaveletIndex& idx, const BigRat& x) {
    BigRat y = x * pow_rat(p, idx.gamma) - idx.n_value(p);
    return half_power(p, -idx.gamma) * mother_at(p, idx.j, y);
}

Complex eval_wavelet(const WaveletIndex& idx, const PAdic& x) {
    return eval_wavelet(x.prime(), idx, x.exact_zero() ? BigRat(0) : x.rational_value());
}

BallFunction wavelet_to_ballfunction(long p, const WaveletIndex& idx, int N, int M) {
    // support is the ball p^-gamma n + p^-gamma Z_p (radius p^gamma); the
    // wavelet is constant on cosets of p^(1-gamma) Z_p
    if (M < 1 - idx.gamma)
        throw std::invalid_argument("wavelet_to_ballfunction: resolution too coarse");
    long depth = static_cast<long>(strip_trailing_zeros(idx.n_digits).size());
    if (std::max(idx.gamma, idx.gamma + depth) > N)
        throw std::invalid_argument("wavelet_to_ballfunction: support exceeds the grid ball");
    BallFunction f(p, 1, N, M);
    for (long c = 0; c < f.cell_count(); ++c)
        f[c] = eval_wavelet(p, idx, f.axis_representative(c));
    return f;
}

AnalysisResult analyze(const BallFunction& f, long gamma_min, long gamma_max, long n_bound,
                       double drop_tol) {
    if (f.dim() != 1) throw std::invalid_argument("analyze: 1D functions only");
    const long p = f.p();
    const int N = f.support_exp();
    const int M = std::max<long>(f.resolution(), 1 - gamma_min);
    const BallFunction g = f.refined(N, M);
    const double cell_measure = std::pow(static_cast<double>(p), -static_cast<double>(M));

    AnalysisResult res;
    double coeff_energy = 0.0;
    for (long gamma = gamma_min; gamma <= gamma_max; ++gamma) {
        // supports meeting p^-N Z_p: |n|_p <= p^(N - gamma), i.e. at most
        // N - gamma translation digits (n = 0 only, once gamma > N)
        long t_max = std::clamp<long>(N - gamma, 0, n_bound);
        std::vector<uint32_t> digits(t_max, 0);
        while (true) {
            WaveletIndex idx{gamma, strip_trailing_zeros(digits), 1};
            for (int j = 1; j < p; ++j) {
                idx.j = j;
                Complex c = 0.0;
                for (long cell = 0; cell < g.cell_count(); ++cell) {
                    Complex w = eval_wavelet(p, idx, g.axis_representative(cell));
                    if (w != Complex(0.0, 0.0)) c += std::conj(w) * g[cell];
                }
                c *= cell_measure;
                if (std::abs(c) > drop_tol) {
                    coeff_energy += std::norm(c);
                    res.coefficients.emplace(idx, c);
                }
            }
            // next digit vector
            long i = 0;
            while (i < t_max && digits[i] == static_cast<uint32_t>(p - 1)) digits[i++] = 0;
            if (i == t_max) break;
            ++digits[i];
        }
    }
    res.parseval_defect = g.norm_sq() - coeff_energy;
    return res;
}

BallFunction synthesize(long p, const CoefficientMap& coeffs, int N, int M) {
    BallFunction f(p, 1, N, M);
    for (const auto& [idx, c] : coeffs) {
        for (long cell = 0; cell < f.cell_count(); ++cell)
            f[cell] += c * eval_wavelet(p, idx, f.axis_representative(cell));
    }
    return f;
}

GramReport wavelet_gram_1d(long p, long gamma_min, long gamma_max, long R) {
    if (gamma_max > R) gamma_max = R;
    struct Ball {
        long gamma;
        BigRat center;  // p^-gamma n
    };
    std::vector<Ball> balls;
    for (long gamma = gamma_min; gamma <= gamma_max; ++gamma) {
        long t_max = R - gamma;  // support in p^-R Z_p: |n|_p <= p^(R - gamma)
        std::vector<uint32_t> digits(t_max, 0);
        while (true) {
            BigRat n = 0;
            BigRat pw = BigRat(1, p);
            for (uint32_t d : digits) {
                n += BigRat(d) * pw;
                pw /= p;
            }
            balls.push_back({gamma, n * pow_rat(p, -gamma)});
            long i = 0;
            while (i < t_max && digits[i] == static_cast<uint32_t>(p - 1)) digits[i++] = 0;
            if (i == t_max) break;
            ++digits[i];
        }
    }

    GramReport rep;
    rep.basis_size = static_cast<long>(balls.size()) * (p - 1);

    // Supports are balls: any two are nested or disjoint. Disjoint supports
    // give an exact 0 entry; otherwise the integrand is constant on the p
    // child cosets of the smaller support, so 5-point sampling is exact.
    auto value_at = [&](const Ball& b, int j, const BigRat& x) -> Complex {
        BigRat y = (x - b.center) * pow_rat(p, b.gamma);
        return half_power(p, -b.gamma) * mother_at(p, j, y);
    };

    for (size_t a = 0; a < balls.size(); ++a) {
        for (size_t b = a; b < balls.size(); ++b) {
            const Ball& small = balls[a].gamma <= balls[b].gamma ? balls[a] : balls[b];
            const Ball& large = balls[a].gamma <= balls[b].gamma ? balls[b] : balls[a];
            BigRat diff = balls[a].center - balls[b].center;
            if (diff != 0 && pow_rat(p, -valuation(diff, p)) > pow_rat(p, large.gamma))
                continue;  // disjoint supports: exact zero, matches I off-diagonal
            const double w = std::pow(static_cast<double>(p), static_cast<double>(small.gamma) - 1);
            for (int j1 = 1; j1 < p; ++j1) {
                for (int j2 = 1; j2 < p; ++j2) {
                    Complex s = 0.0;
                    for (long r = 0; r < p; ++r) {
                        BigRat x = small.center + BigRat(r) * pow_rat(p, -small.gamma);
                        s += std::conj(value_at(balls[a], j1, x)) * value_at(balls[b], j2, x);
                    }
                    s *= w;
                    bool diag = (a == b && j1 == j2);
                    double dev = std::abs(s - (diag ? Complex(1.0) : Complex(0.0)));
                    rep.max_deviation = std::max(rep.max_deviation, dev);
                }
            }
        }
    }
    return rep;
}

Complex eval_wavelet_md(long p, const MdWaveletIndex& idx, const std::vector<BigRat>& x) {
    const size_t d = idx.k.size();
    if (x.size() != d || idx.n.size() != d)
        throw std::invalid_argument("eval_wavelet_md: dimension mismatch");
    BigRat dot = 0;
    BigRat scale = pow_rat(p, idx.gamma);
    for (size_t l = 0; l < d; ++l) {
        BigRat y = x[l] * scale - idx.n[l];
        if (y != 0 && valuation(y, p) < 0) return Complex(0.0, 0.0);
        dot += BigRat(idx.k[l]) * y;
    }
    return half_power(p, -static_cast<long>(d) * idx.gamma) * additive_character(dot / p, p);
}

BallFunction md_wavelet_to_ballfunction(long p, int d, const MdWaveletIndex& idx, int N, int M) {
    BallFunction f(p, d, N, M);
    for (long c = 0; c < f.cell_count(); ++c)
        f[c] = eval_wavelet_md(p, idx, f.representative(c));
    return f;
}

std::vector<std::vector<long>> dilation_matrix(long p, int d) {
    std::vector<std::vector<long>> A(d, std::vector<long>(d, 0));
    for (int i = 0; i + 1 < d; ++i) A[i][i + 1] = 1;
    A[d - 1][0] = p;
    return A;
}

namespace {

std::vector<BigRat> apply_dilation(long p, const std::vector<BigRat>& x) {
    std::vector<BigRat> y(x.size());
    for (size_t i = 0; i + 1 < x.size(); ++i) y[i] = x[i + 1];
    y.back() = BigRat(p) * x[0];
    return y;
}

std::vector<BigRat> apply_dilation_inv(long p, const std::vector<BigRat>& y) {
    std::vector<BigRat> x(y.size());
    x[0] = y.back() / p;
    for (size_t i = 1; i < y.size(); ++i) x[i] = y[i - 1];
    return x;
}

std::vector<BigRat> apply_dilation_pow(long p, long e, std::vector<BigRat> x) {
    for (long i = 0; i < e; ++i) x = apply_dilation(p, x);
    for (long i = 0; i > e; --i) x = apply_dilation_inv(p, x);
    return x;
}

}  // namespace

std::optional<BigRat> DeformedNorm::log_norm(const std::vector<BigRat>& x) const {
    std::optional<BigRat> best;
    for (int l = 0; l < d; ++l) {
        if (x[l] == 0) continue;
        BigRat v = BigRat(-(d - 1 - l), d) - valuation(x[l], p);
        if (!best || v > *best) best = v;
    }
    return best;
}

bool DeformedNorm::in_unit_ball(const std::vector<BigRat>& x) const {
    auto ln = log_norm(x);
    return !ln || *ln <= 0;
}

Complex eval_wavelet_matrix(long p, int d, const MatrixWaveletIndex& idx,
                            const std::vector<BigRat>& x) {
    if (static_cast<int>(x.size()) != d || static_cast<int>(idx.n.size()) != d)
        throw std::invalid_argument("eval_wavelet_matrix: dimension mismatch");
    std::vector<BigRat> y = apply_dilation_pow(p, idx.scale, x);
    for (int l = 0; l < d; ++l) y[l] -= idx.n[l];
    DeformedNorm norm{p, d};
    if (!norm.in_unit_ball(y)) return Complex(0.0, 0.0);
    // chi(k . A^-1 y) = chi(k y_d / p)
    return half_power(p, -idx.scale) * additive_character(BigRat(idx.k) * y[d - 1] / p, p);
}

BallFunction matrix_wavelet_to_ballfunction(long p, int d, const MatrixWaveletIndex& idx, int N,
                                            int M) {
    BallFunction f(p, d, N, M);
    for (long c = 0; c < f.cell_count(); ++c)
        f[c] = eval_wavelet_matrix(p, d, idx, f.representative(c));
    return f;
}

std::vector<MatrixWaveletIndex> matrix_wavelets_in_unit_ball(long p, int d, long max_abs_scale) {
    // Psi_{k;jn} is supported on A^-j (n + unit ball); for j <= 0 this lies in
    // the unit ball Z_p^d exactly when A^|j| n has integral components.
    std::vector<MatrixWaveletIndex> out;
    for (long j = 0; j >= -max_abs_scale; --j) {
        long m = (-j + d - 1) / d;  // A^d = p I, so denominators divide p^ceil(|j|/d)
        BigInt den = pow_int(p, m);
        long axis = static_cast<long>(den);
        std::vector<long> num(d, 0);
        while (true) {
            std::vector<BigRat> n(d);
            for (int l = 0; l < d; ++l) n[l] = BigRat(num[l], den);
            std::vector<BigRat> img = apply_dilation_pow(p, -j, n);
            bool integral = true;
            for (const auto& v : img)
                if (v != 0 && valuation(v, p) < 0) integral = false;
            if (integral)
                for (int k = 1; k < p; ++k) out.push_back({k, j, n});
            int l = 0;
            while (l < d && num[l] == axis - 1) num[l++] = 0;
            if (l == d) break;
            ++num[l];
        }
    }
    return out;
}

long dilation_subball_violations(long p, int d, int M) {
    // maximal proper subball of the unit ||.||-ball: log norm <= -1/d
    DeformedNorm norm{p, d};
    const BigRat threshold(-1, d);
    BallFunction grid(p, d, 0, M);
    long violations = 0;
    for (long c = 0; c < grid.cell_count(); ++c) {
        std::vector<BigRat> y = apply_dilation(p, grid.representative(c));
        auto ln = norm.log_norm(y);
        if (ln && *ln > threshold) ++violations;
    }
    return violations;
}

MonnaCheckReport monna_conjugate_check(const WaveletIndex& idx, int resolution) {
    const long p = 2;
    if (idx.j != 1) throw std::invalid_argument("monna_conjugate_check: requires j = 1");
    long depth = static_cast<long>(strip_trailing_zeros(idx.n_digits).size());
    // grid covering the support ball plus surrounding cosets
    int N = static_cast<int>(std::max<long>({idx.gamma + depth, idx.gamma, 0})) + 1;
    int M = std::max<long>(resolution, 1 - idx.gamma);
    BallFunction grid(p, 1, N, M);

    const BigRat rho_n = monna_of_translation(p, idx.n_digits);
    const double amp = half_power(p, -idx.gamma);

    MonnaCheckReport rep;
    for (long c = 0; c < grid.cell_count(); ++c) {
        BigRat x = grid.axis_representative(c);
        // exact wavelet value: for p = 2, j = 1 the character is +-1
        BigRat y = x * pow_rat(p, idx.gamma) - idx.n_value(p);
        Complex lhs = 0.0;
        if (y == 0 || valuation(y, p) >= 0)
            lhs = amp * (fractional_part(y / 2, p) == 0 ? 1.0 : -1.0);
        PAdic xp = PAdic::from_rational(x, p, N + M + 4);
        BigRat t = monna_map_exact(xp) * pow_rat(p, -idx.gamma) - rho_n;
        double rhs = amp * haar(t);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - Complex(rhs)));
        ++rep.samples;
    }
    return rep;
}

}  // namespace ultra
