#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ultrametra/ballfunc.hpp"
#include "ultrametra/padic.hpp"

namespace ultra {

/// Index of a 1D wavelet: scale gamma, translation n in Q_p/Z_p given by its
/// digits at p^-1, p^-2, ... (n = Sum n_digits[i] p^-(i+1)), rotation j.
struct WaveletIndex {
    long gamma = 0;
    std::vector<uint32_t> n_digits;
    int j = 1;

    BigRat n_value(long p) const;
    auto operator<=>(const WaveletIndex&) const = default;
};

/// psi(x) = chi(x/p) Omega(|x|_p).
Complex eval_mother_wavelet(long p, const BigRat& x);
Complex eval_mother_wavelet(const PAdic& x);

/// psi_{gamma n j}(x) = p^(-gamma/2) chi(p^(gamma-1) j (x - p^-gamma n)) Omega(|p^gamma x - n|_p).
Complex eval_wavelet(long p, const WaveletIndex& idx, const BigRat& x);
Complex eval_wavelet(const WaveletIndex& idx, const PAdic& x);

/// Support ball of psi_idx: center p^-gamma n, radius p^gamma.
/// Sampled representation; throws if (N, M) cannot hold the wavelet exactly
/// (needs M >= 1 - gamma and support inside p^-N Z_p).
BallFunction wavelet_to_ballfunction(long p, const WaveletIndex& idx, int N, int M);

using CoefficientMap = std::map<WaveletIndex, Complex>;

struct AnalysisResult {
    CoefficientMap coefficients;
    double parseval_defect = 0.0;  // ||f||^2 - sum |c|^2
};

/// Coefficients <psi_idx, f> for all indices with gamma in [gamma_min, gamma_max]
/// and support meeting supp f (translation depth capped at n_bound digits).
AnalysisResult analyze(const BallFunction& f, long gamma_min, long gamma_max, long n_bound,
                       double drop_tol = 0.0);

BallFunction synthesize(long p, const CoefficientMap& coeffs, int N, int M);

/// Max |Gram - I| entry over all 1D wavelets with support inside p^-R Z_p and
/// gamma in [gamma_min, gamma_max].
struct GramReport {
    long basis_size = 0;
    double max_deviation = 0.0;
};
GramReport wavelet_gram_1d(long p, long gamma_min, long gamma_max, long R);

/// --- multidimensional wavelets (coordinatewise index k) ---

struct MdWaveletIndex {
    std::vector<uint32_t> k;  // k_l in 0..p-1, not all zero
    long gamma = 0;
    std::vector<BigRat> n;  // representative of Q_p^d / Z_p^d
};

/// psi_k(x) = chi(p^-1 k.x) Omega(|x|_p),  psi_{k;gamma n}(x) = p^(-d gamma/2) psi_k(p^gamma x - n).
Complex eval_wavelet_md(long p, const MdWaveletIndex& idx, const std::vector<BigRat>& x);

BallFunction md_wavelet_to_ballfunction(long p, int d, const MdWaveletIndex& idx, int N, int M);

/// --- wavelets with matrix dilations ---

/// Companion-form dilation matrix: A x = (x_2, ..., x_d, p x_1); det = +-p.
std::vector<std::vector<long>> dilation_matrix(long p, int d);

/// Deformed max-norm with weights p^-1 < q_1 < ... < q_d <= 1, realized as
/// q_l = p^(-(d-l)/d). log_p ||x|| = max_l (-(d-l)/d - v_p(x_l)), kept exact
/// as a rational exponent.
struct DeformedNorm {
    long p;
    int d;
    /// log_p of the norm as an exact rational; nullopt for x = 0.
    std::optional<BigRat> log_norm(const std::vector<BigRat>& x) const;
    bool in_unit_ball(const std::vector<BigRat>& x) const;
};

struct MatrixWaveletIndex {
    int k = 1;          // representative (k, 0, ..., 0) of Z_p^d / A* Z_p^d, k in 1..p-1
    long scale = 0;     // j in Psi_{k;jn}(x) = p^(-j/2) Psi_k(A^j x - n)
    std::vector<BigRat> n;
};

/// Psi_k(x) = chi(k . A^-1 x) Omega(||x||) = chi(k x_d / p) Omega(||x||).
Complex eval_wavelet_matrix(long p, int d, const MatrixWaveletIndex& idx,
                            const std::vector<BigRat>& x);

BallFunction matrix_wavelet_to_ballfunction(long p, int d, const MatrixWaveletIndex& idx, int N,
                                            int M);

/// All matrix-dilation wavelets with support inside the unit ||.||-ball and
/// |scale| <= max_abs_scale (only non-positive scales qualify).
std::vector<MatrixWaveletIndex> matrix_wavelets_in_unit_ball(long p, int d, long max_abs_scale);

/// Checks that A maps every cell of the unit-ball grid (resolution M) into the
/// maximal deformed-norm subball. Returns the number of violations.
long dilation_subball_violations(long p, int d, int M);

/// --- Monna conjugation (p = 2) ---

struct MonnaCheckReport {
    double max_deviation = 0.0;
    long samples = 0;
};

/// Compares psi_{gamma n 1} against the classical Haar wavelet
/// 2^(-gamma/2) h(2^-gamma t - rho(n)) at t = rho(x) over all cosets of the
/// given resolution.
MonnaCheckReport monna_conjugate_check(const WaveletIndex& idx, int resolution);

}  // namespace ultra
