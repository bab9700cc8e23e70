#include "ultrametra/ballfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace ultra {

BallFunction::BallFunction(long p, int d, int N, int M) : p_(p), d_(d), N_(N), M_(M) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    if (d < 1 || N < 0 || M < 0) throw std::invalid_argument("bad BallFunction shape");
    axis_cells_ = 1;
    for (int i = 0; i < N + M; ++i) axis_cells_ *= p;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= axis_cells_;
    values_.assign(total, Complex(0.0, 0.0));
}

BigRat BallFunction::axis_representative(long axis_index) const {
    return BigRat(axis_index) * pow_rat(p_, -N_);
}

std::vector<long> BallFunction::split_index(long cell_index) const {
    std::vector<long> idx(d_);
    for (int l = d_ - 1; l >= 0; --l) {
        idx[l] = cell_index % axis_cells_;
        cell_index /= axis_cells_;
    }
    return idx;
}

long BallFunction::join_index(const std::vector<long>& axis_indices) const {
    long c = 0;
    for (int l = 0; l < d_; ++l) c = c * axis_cells_ + axis_indices[l];
    return c;
}

std::vector<BigRat> BallFunction::representative(long cell_index) const {
    auto idx = split_index(cell_index);
    std::vector<BigRat> rep(d_);
    for (int l = 0; l < d_; ++l) rep[l] = axis_representative(idx[l]);
    return rep;
}

long BallFunction::axis_cell_of(const BigRat& r) const {
    BigRat scaled = r * pow_rat(p_, N_);
    BigInt den = denominator(scaled);
    if (den % p_ == 0) throw std::invalid_argument("point outside the support ball");
    BigInt mod = pow_int(p_, N_ + M_);
    BigInt idx = numerator(scaled) % mod * mod_inverse(den, mod) % mod;
    idx = ((idx % mod) + mod) % mod;
    return static_cast<long>(idx);
}

Complex BallFunction::integral() const {
    Complex s = 0.0;
    for (const auto& v : values_) s += v;
    return s * std::pow(static_cast<double>(p_), -static_cast<double>(d_) * M_);
}

double BallFunction::norm_sq() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return s * std::pow(static_cast<double>(p_), -static_cast<double>(d_) * M_);
}

BallFunction BallFunction::refined(int N2, int M2) const {
    if (N2 < N_ || M2 < M_) throw std::invalid_argument("refined: cannot coarsen");
    if (N2 == N_ && M2 == M_) return *this;
    BallFunction g(p_, d_, N2, M2);
    long shift_low = 1;
    for (int i = 0; i < N2 - N_; ++i) shift_low *= p_;  // extra low-order digits
    for (long c = 0; c < g.cell_count(); ++c) {
        auto idx = g.split_index(c);
        bool outside = false;
        std::vector<long> old_idx(d_);
        for (int l = 0; l < d_; ++l) {
            long ai = idx[l];
            // digits below p^-N must vanish for the point to lie in p^-N Z_p
            if (ai % shift_low != 0) {
                outside = true;
                break;
            }
            long v = ai / shift_low;      // digits from p^-N upward
            old_idx[l] = v % axis_cells_; // truncate digits at p^M and above
        }
        if (!outside) g.values_[c] = values_[join_index(old_idx)];
    }
    return g;
}

Complex inner_product(const BallFunction& f, const BallFunction& g) {
    if (f.p_ != g.p_ || f.d_ != g.d_)
        throw std::invalid_argument("inner_product: prime/dimension mismatch");
    int N = std::max(f.N_, g.N_), M = std::max(f.M_, g.M_);
    const BallFunction fr = f.refined(N, M);
    const BallFunction gr = g.refined(N, M);
    Complex s = 0.0;
    for (long c = 0; c < fr.cell_count(); ++c) s += std::conj(fr[c]) * gr[c];
    return s * std::pow(static_cast<double>(f.p_), -static_cast<double>(f.d_) * M);
}

BallFunction operator+(const BallFunction& f, const BallFunction& g) {
    if (f.p_ != g.p_ || f.d_ != g.d_) throw std::invalid_argument("shape mismatch");
    int N = std::max(f.N_, g.N_), M = std::max(f.M_, g.M_);
    BallFunction a = f.refined(N, M), b = g.refined(N, M);
    for (long c = 0; c < a.cell_count(); ++c) a[c] += b[c];
    return a;
}

BallFunction operator-(const BallFunction& f, const BallFunction& g) {
    BallFunction neg = g;
    neg *= Complex(-1.0, 0.0);
    return f + neg;
}

BallFunction& BallFunction::operator*=(Complex c) {
    for (auto& v : values_) v *= c;
    return *this;
}

}  // namespace ultra
