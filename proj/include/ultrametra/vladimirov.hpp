#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ultrametra/ballfunc.hpp"
#include "ultrametra/wavelets.hpp"

namespace ultra {

/// Gelfand-Graev gamma factor (1 - p^(x-1)) / (1 - p^-x).
double gamma_p(long p, double x);

/// Prefactor kappa = (p^alpha - 1) / (1 - p^(-1-alpha)) of
/// D^alpha f(x) = kappa Integral (f(x) - f(y)) |x-y|^(-1-alpha) dy,
/// normalized so that D^alpha psi_{gamma n j} = p^(alpha(1-gamma)) psi_{gamma n j}.
double vladimirov_prefactor(long p, double alpha);

double vladimirov_eigenvalue(long p, double alpha, long gamma);

/// How the region outside the domain ball p^-N Z_p is treated. For functions
/// vanishing outside the ball the two policies yield the same matrix: killing
/// mass that leaves the ball (absorbing) equals integrating against f = 0
/// outside (full space). Both add the same exterior-tail diagonal.
enum class ExteriorPolicy { FullSpaceZeroOutside, Absorbing };

struct OperatorSpec {
    long p = 2;
    double alpha = 1.0;
    int N = 0;  // domain ball p^-N Z_p
    int M = 1;  // resolution: cells are cosets of p^M Z_p
    ExteriorPolicy policy = ExteriorPolicy::FullSpaceZeroOutside;
};

/// Rate at which mass escapes the domain ball from any interior cell:
/// kappa (1 - 1/p) p^(-(N+1) alpha) / (1 - p^-alpha).
double exterior_tail_rate(const OperatorSpec& spec);

/// Dense symmetric matrix of D^alpha on cell indicators. Exact (up to float
/// rounding) on functions supported in the ball and constant on cells, because
/// |x - y|_p is constant across distinct ultrametric cells.
Eigen::MatrixXd build_cell_matrix(const OperatorSpec& spec);

/// D^alpha f for f given by its cell values on the spec grid.
Eigen::VectorXd apply_direct(const OperatorSpec& spec, const Eigen::VectorXd& f);

/// D^alpha f via the wavelet expansion: coefficients are scaled by
/// p^(alpha(1-gamma)). Exact for mean-zero f resolved by the given scales;
/// parseval_defect of the analysis reports what was missed.
BallFunction apply_spectral(const BallFunction& f, double alpha, long gamma_min, long gamma_max);

/// Solution of d f / d t = -D^alpha f at the given times (matrix exponential
/// through a symmetric eigendecomposition).
std::vector<Eigen::VectorXd> heat_solve(const OperatorSpec& spec, const Eigen::VectorXd& f0,
                                        const std::vector<double>& times);

/// Heat evolution through the wavelet expansion: each coefficient decays as
/// exp(-p^(alpha(1-gamma)) t).
BallFunction heat_spectral(const BallFunction& f0, double alpha, double t, long gamma_min,
                           long gamma_max);

/// Mass remaining in the domain ball at each time, normalized to 1 at t = 0.
std::vector<double> survival_probability(const OperatorSpec& spec, const Eigen::VectorXd& f0,
                                         const std::vector<double>& times);

struct CompositeRuleReport {
    double max_deviation = 0.0;
    long cells_checked = 0;
};

/// Checks D^alpha [f(a x + b)] = |a|_p^alpha (D^alpha f)(a x + b) for
/// f = psi_idx and a = p^s, evaluating both sides through exact cell matrices.
CompositeRuleReport composite_rule_check(long p, double alpha, const WaveletIndex& idx, long s,
                                         const BigRat& b);

}  // namespace ultra
