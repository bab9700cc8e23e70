#pragma once

#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

/// Probability density on Z_p with respect to Haar measure, locally constant
/// at resolution M: one nonnegative value per coset of p^M Z_p, with
/// p^-M Sum values = 1.
class ZpDensity {
  public:
    ZpDensity(long p, int M, std::vector<double> values);

    static ZpDensity uniform(long p, int M);
    /// Density of a random variable uniform on the coset a + p^r Z_p.
    static ZpDensity uniform_on_ball(long p, int M, long a, int r);

    long p() const { return p_; }
    int resolution() const { return M_; }
    long cells() const { return static_cast<long>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    double total_mass() const;

    /// sup_x |d(x) - uniform(x)| over the support ball of radius p^-r
    /// (r = 0 for all of Z_p).
    double sup_distance_to_uniform(int support_r = 0) const;

    friend ZpDensity convolve(const ZpDensity& a, const ZpDensity& b);

  private:
    long p_;
    int M_;
    std::vector<double> values_;
};

/// Distribution of the sum of independent copies: group convolution on Z/p^M.
ZpDensity convolve(const ZpDensity& a, const ZpDensity& b);

struct ConvergenceRow {
    long n = 0;
    double distance = 0.0;  // sup-distance of the n-fold sum to uniform, in the
                            // frame where the support ball has unit Haar mass
    double bound = 0.0;     // (D/Delta - 1) exp(-n (Delta/D)^3 / 3)
    bool violated = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool any_violation = false;
};

/// Convergence of iid sums to Haar measure on the support ball: d supported in
/// a ball of radius D = p^-support_r, locally constant at scale
/// Delta = p^-constancy_r (constancy_r <= M). Preconditions are verified.
ConvergenceReport convergence_report(const ZpDensity& d, int support_r, int constancy_r,
                                     long n_max);

}  // namespace ultra
