#include "ultrametra/vladimirov.hpp"

#include <cmath>
#include <stdexcept>

namespace ultra {

double gamma_p(long p, double x) {
    double pd = static_cast<double>(p);
    return (1.0 - std::pow(pd, x - 1.0)) / (1.0 - std::pow(pd, -x));
}

double vladimirov_prefactor(long p, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    double pd = static_cast<double>(p);
    return (std::pow(pd, alpha) - 1.0) / (1.0 - std::pow(pd, -1.0 - alpha));
}

double vladimirov_eigenvalue(long p, double alpha, long gamma) {
    return std::pow(static_cast<double>(p), alpha * (1.0 - static_cast<double>(gamma)));
}

double exterior_tail_rate(const OperatorSpec& spec) {
    double pd = static_cast<double>(spec.p);
    double kappa = vladimirov_prefactor(spec.p, spec.alpha);
    return kappa * (1.0 - 1.0 / pd) * std::pow(pd, -(spec.N + 1) * spec.alpha) /
           (1.0 - std::pow(pd, -spec.alpha));
}

Eigen::MatrixXd build_cell_matrix(const OperatorSpec& spec) {
    const long p = spec.p;
    const long n = static_cast<long>(std::llround(std::pow(static_cast<double>(p),
                                                           static_cast<double>(spec.N + spec.M))));
    const double kappa = vladimirov_prefactor(p, spec.alpha);
    const double cell_measure = std::pow(static_cast<double>(p), -static_cast<double>(spec.M));
    const double tail = exterior_tail_rate(spec);

    // |rep_i - rep_j|_p = p^(N - v_p(i - j)); precompute the kernel weight by
    // the valuation of the index difference
    std::vector<double> weight(spec.N + spec.M, 0.0);
    for (long v = 0; v < spec.N + spec.M; ++v) {
        double dist = std::pow(static_cast<double>(p), static_cast<double>(spec.N - v));
        weight[v] = kappa * cell_measure * std::pow(dist, -1.0 - spec.alpha);
    }

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (long i = 0; i < n; ++i) {
        double diag = tail;
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            long d = i - j;
            long v = 0;
            while (d % p == 0) {
                d /= p;
                ++v;
            }
            L(i, j) = -weight[v];
            diag += weight[v];
        }
        L(i, i) = diag;
    }
    return L;
}

Eigen::VectorXd apply_direct(const OperatorSpec& spec, const Eigen::VectorXd& f) {
    return build_cell_matrix(spec) * f;
}

BallFunction apply_spectral(const BallFunction& f, double alpha, long gamma_min, long gamma_max) {
    AnalysisResult ar = analyze(f, gamma_min, gamma_max, f.support_exp() - gamma_min);
    CoefficientMap scaled;
    for (const auto& [idx, c] : ar.coefficients)
        scaled.emplace(idx, c * vladimirov_eigenvalue(f.p(), alpha, idx.gamma));
    int M = std::max<long>(f.resolution(), 1 - gamma_min);
    return synthesize(f.p(), scaled, f.support_exp(), M);
}

std::vector<Eigen::VectorXd> heat_solve(const OperatorSpec& spec, const Eigen::VectorXd& f0,
                                        const std::vector<double>& times) {
    Eigen::MatrixXd L = build_cell_matrix(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    Eigen::VectorXd c = es.eigenvectors().transpose() * f0;
    std::vector<Eigen::VectorXd> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXd decayed =
            (es.eigenvalues().array() * (-t)).exp().matrix().asDiagonal() * c;
        out.push_back(es.eigenvectors() * decayed);
    }
    return out;
}

BallFunction heat_spectral(const BallFunction& f0, double alpha, double t, long gamma_min,
                           long gamma_max) {
    AnalysisResult ar = analyze(f0, gamma_min, gamma_max, f0.support_exp() - gamma_min);
    CoefficientMap scaled;
    for (const auto& [idx, c] : ar.coefficients)
        scaled.emplace(idx, c * std::exp(-vladimirov_eigenvalue(f0.p(), alpha, idx.gamma) * t));
    int M = std::max<long>(f0.resolution(), 1 - gamma_min);
    return synthesize(f0.p(), scaled, f0.support_exp(), M);
}

std::vector<double> survival_probability(const OperatorSpec& spec, const Eigen::VectorXd& f0,
                                         const std::vector<double>& times) {
    double initial = f0.sum();
    if (initial == 0.0) throw std::invalid_argument("survival: initial mass is zero");
    std::vector<double> out;
    for (const auto& ft : heat_solve(spec, f0, times)) out.push_back(ft.sum() / initial);
    return out;
}

CompositeRuleReport composite_rule_check(long p, double alpha, const WaveletIndex& idx, long s,
                                         const BigRat& b) {
    // f = psi_idx, phi(x) = p^s x + b, g = f . phi
    long depth = 0;
    {
        auto d = idx.n_digits;
        while (!d.empty() && d.back() == 0) d.pop_back();
        depth = static_cast<long>(d.size());
    }
    long e_b = (b == 0) ? 0 : std::max<long>(0, -valuation(b, p));
    // grid for g: must contain supp g = phi^-1(supp f), a ball of radius
    // p^(gamma + s) centered at p^-s (p^-gamma n - b)
    int Ng = static_cast<int>(
        std::max<long>({idx.gamma + depth + s, idx.gamma + s, e_b + s, 0}) + 1);
    int Mg = static_cast<int>(std::max<long>({1 - idx.gamma - s, -s, 0}));
    // grid for f: must contain phi(g-ball)
    int Nf = static_cast<int>(std::max<long>({Ng - s, e_b, idx.gamma + depth, 0}));
    int Mf = static_cast<int>(std::max<long>(1 - idx.gamma, 0));

    BallFunction fgrid = wavelet_to_ballfunction(p, idx, Nf, Mf);
    OperatorSpec fspec{p, alpha, Nf, Mf, ExteriorPolicy::FullSpaceZeroOutside};
    Eigen::VectorXd fv(fgrid.cell_count());
    for (long c = 0; c < fgrid.cell_count(); ++c) fv(c) = fgrid[c].real();
    Eigen::VectorXd fv_im(fgrid.cell_count());
    for (long c = 0; c < fgrid.cell_count(); ++c) fv_im(c) = fgrid[c].imag();
    Eigen::MatrixXd Lf = build_cell_matrix(fspec);
    Eigen::VectorXd Df_re = Lf * fv, Df_im = Lf * fv_im;

    BallFunction ggrid(p, 1, Ng, Mg);
    BigRat a = pow_rat(p, s);
    for (long c = 0; c < ggrid.cell_count(); ++c)
        ggrid[c] = eval_wavelet(p, idx, a * ggrid.axis_representative(c) + b);
    OperatorSpec gspec{p, alpha, Ng, Mg, ExteriorPolicy::FullSpaceZeroOutside};
    Eigen::VectorXd gv(ggrid.cell_count()), gv_im(ggrid.cell_count());
    for (long c = 0; c < ggrid.cell_count(); ++c) {
        gv(c) = ggrid[c].real();
        gv_im(c) = ggrid[c].imag();
    }
    Eigen::MatrixXd Lg = build_cell_matrix(gspec);
    Eigen::VectorXd Dg_re = Lg * gv, Dg_im = Lg * gv_im;

    const double a_norm_alpha = std::pow(static_cast<double>(p), -s * alpha);  // |a|_p^alpha
    CompositeRuleReport rep;
    for (long c = 0; c < ggrid.cell_count(); ++c) {
        BigRat y = a * ggrid.axis_representative(c) + b;
        long fc = fgrid.axis_cell_of(y);
        Complex lhs(Dg_re(c), Dg_im(c));
        Complex rhs = a_norm_alpha * Complex(Df_re(fc), Df_im(fc));
        rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs));
        ++rep.cells_checked;
    }
    return rep;
}

}  // namespace ultra
