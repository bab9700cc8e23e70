#pragma once

#include <complex>
#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

using Complex = std::complex<double>;

/// Complex-valued locally constant function on Q_p^d with support in the ball
/// p^-N Z_p^d, constant on cosets of p^M Z_p^d. Values are stored per cell;
/// the axis index of a coset with representative digits x_{-N}..x_{M-1} is
/// Sum x_i p^{i+N}; cells are row-major across coordinates (coordinate 0
/// slowest). Each cell has Haar measure p^{-dM}.
class BallFunction {
  public:
    BallFunction() = default;
    BallFunction(long p, int d, int N, int M);

    long p() const { return p_; }
    int dim() const { return d_; }
    int support_exp() const { return N_; }
    int resolution() const { return M_; }
    long axis_cells() const { return axis_cells_; }
    long cell_count() const { return static_cast<long>(values_.size()); }

    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }
    Complex& operator[](long i) { return values_[i]; }
    const Complex& operator[](long i) const { return values_[i]; }

    /// Exact rational representative of an axis cell: index * p^-N.
    BigRat axis_representative(long axis_index) const;
    /// Per-coordinate representatives of a global cell index.
    std::vector<BigRat> representative(long cell_index) const;
    /// Axis indices of a global cell, coordinate 0 first.
    std::vector<long> split_index(long cell_index) const;
    long join_index(const std::vector<long>& axis_indices) const;

    /// Axis cell containing the rational r (requires v_p(r) >= -N, and throws
    /// if |r|_p exceeds the support ball).
    long axis_cell_of(const BigRat& r) const;

    Complex integral() const;
    double norm_sq() const;  // L2 norm squared w.r.t. Haar measure

    /// Same function represented on a (finer or wider) grid; new cells outside
    /// the old support read 0. Requires N2 >= N, M2 >= M.
    BallFunction refined(int N2, int M2) const;

    friend Complex inner_product(const BallFunction& f, const BallFunction& g);
    friend BallFunction operator+(const BallFunction& f, const BallFunction& g);
    friend BallFunction operator-(const BallFunction& f, const BallFunction& g);
    BallFunction& operator*=(Complex c);

  private:
    long p_ = 2;
    int d_ = 1;
    int N_ = 0;
    int M_ = 0;
    long axis_cells_ = 1;
    std::vector<Complex> values_;
};

}  // namespace ultra
