#include <random>

#include "doctest.h"
#include "ultrametra/wavelets.hpp"

using namespace ultra;

namespace {

std::vector<MdWaveletIndex> md_basis_p2_d2() {
    // all 2D wavelets (p = 2) supported in 2^-1 Z_2^2: gamma = 1 (no
    // translations) and gamma = 0 (one translation digit per coordinate)
    std::vector<MdWaveletIndex> basis;
    std::vector<std::vector<uint32_t>> ks{{0, 1}, {1, 0}, {1, 1}};
    for (const auto& k : ks) basis.push_back({k, 1, {BigRat(0), BigRat(0)}});
    for (const auto& k : ks)
        for (int n0 = 0; n0 < 2; ++n0)
            for (int n1 = 0; n1 < 2; ++n1)
                basis.push_back({k, 0, {BigRat(n0, 2), BigRat(n1, 2)}});
    return basis;
}

}  // namespace

TEST_SUITE("ballfunc_wavelets") {

TEST_CASE("ball function indexing and integration") {
    BallFunction f(3, 1, 1, 2);
    CHECK(f.axis_cells() == 27);
    CHECK(f.cell_count() == 27);
    for (long i = 0; i < f.axis_cells(); ++i)
        CHECK(f.axis_cell_of(f.axis_representative(i)) == i);
    for (long c = 0; c < f.cell_count(); ++c) f[c] = 1.0;
    CHECK(f.integral().real() == doctest::Approx(3.0));  // measure of 3^-1 Z_3
    CHECK(f.norm_sq() == doctest::Approx(3.0));
    CHECK_THROWS(f.axis_cell_of(BigRat(1, 9)));  // outside the support ball

    BallFunction g(2, 2, 0, 1);
    CHECK(g.cell_count() == 4);
    for (long c = 0; c < g.cell_count(); ++c)
        CHECK(g.join_index(g.split_index(c)) == c);
}

TEST_CASE("refinement preserves integrals and inner products") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    BallFunction f(2, 1, 0, 2);
    for (long c = 0; c < f.cell_count(); ++c) f[c] = {u(rng), u(rng)};
    BallFunction g = f.refined(1, 3);
    CHECK(std::abs(f.integral() - g.integral()) < 1e-14);
    CHECK(f.norm_sq() == doctest::Approx(g.norm_sq()));
}

TEST_CASE("mother wavelet values") {
    CHECK(std::abs(eval_mother_wavelet(2, BigRat(0)) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(eval_mother_wavelet(2, BigRat(1)) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(eval_mother_wavelet(2, BigRat(1, 2))) < 1e-15);  // outside Z_2
    Complex w = eval_mother_wavelet(3, BigRat(1));
    CHECK(w.real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("wavelets are unit norm, mean zero, and satisfy |psi|^2 psi = p^-gamma psi") {
    for (long p : {2L, 3L}) {
        for (long gamma : {-1L, 0L, 1L}) {
            WaveletIndex idx{gamma, {1}, 1};
            int N = static_cast<int>(std::max(gamma + 1, 1L));
            int M = static_cast<int>(std::max(1 - gamma, 1L));
            BallFunction f = wavelet_to_ballfunction(p, idx, N, M);
            CHECK(f.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(f.integral()) < 1e-13);
            double scale = std::pow(double(p), -double(gamma));
            for (long c = 0; c < f.cell_count(); ++c)
                CHECK(std::abs(std::norm(f[c]) * f[c] - scale * f[c]) < 1e-13);
        }
    }
}

TEST_CASE("analyze/synthesize round-trip for mean-zero functions") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    BallFunction f(3, 1, 1, 2);
    for (long c = 0; c < f.cell_count(); ++c) f[c] = {u(rng), u(rng)};
    Complex mean = f.integral() / 3.0;  // ball measure is 3
    for (long c = 0; c < f.cell_count(); ++c) f[c] -= mean;

    AnalysisResult r = analyze(f, -1, 1, 2);
    CHECK(std::abs(r.parseval_defect) < 1e-12);
    BallFunction g = synthesize(3, r.coefficients, 1, 2);
    for (long c = 0; c < f.cell_count(); ++c) CHECK(std::abs(f[c] - g[c]) < 1e-12);
}

TEST_CASE("1D Gram matrix is the identity") {
    GramReport r = wavelet_gram_1d(2, -1, 2, 2);
    CHECK(r.basis_size == 15);  // (1 + 2 + 4 + 8) rotations j=1
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("multidimensional wavelet Gram matrix is the identity") {
    auto basis = md_basis_p2_d2();
    REQUIRE(basis.size() == 15);
    std::vector<BallFunction> fs;
    for (const auto& idx : basis) fs.push_back(md_wavelet_to_ballfunction(2, 2, idx, 1, 1));
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i; j < fs.size(); ++j) {
            Complex g = inner_product(fs[i], fs[j]);
            CHECK(std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
        }
}

TEST_CASE("matrix dilation: A^d = p I and cells land in the maximal subball") {
    auto A = dilation_matrix(2, 3);
    // multiply A by itself three times
    auto mult = [&](const std::vector<std::vector<long>>& X, const std::vector<std::vector<long>>& Y) {
        std::vector<std::vector<long>> Z(3, std::vector<long>(3, 0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) Z[i][j] += X[i][k] * Y[k][j];
        return Z;
    };
    auto A3 = mult(mult(A, A), A);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(A3[i][j] == (i == j ? 2 : 0));

    CHECK(dilation_subball_violations(2, 2, 3) == 0);
    CHECK(dilation_subball_violations(3, 2, 2) == 0);
}

TEST_CASE("deformed norm orders the coordinates") {
    DeformedNorm nrm{2, 2};
    CHECK(nrm.in_unit_ball({BigRat(1), BigRat(1)}));
    CHECK(!nrm.in_unit_ball({BigRat(1, 2), BigRat(0)}));
    CHECK(!nrm.log_norm({BigRat(0), BigRat(0)}).has_value());
    // log_2 ||(1, 0)|| = -(2-1)/2 - 0 = -1/2
    CHECK(*nrm.log_norm({BigRat(1), BigRat(0)}) == BigRat(-1, 2));
    CHECK(*nrm.log_norm({BigRat(0), BigRat(1)}) == BigRat(0));
}

TEST_CASE("matrix-dilation wavelets: 7 in the unit ball, orthonormal") {
    auto basis = matrix_wavelets_in_unit_ball(2, 2, 2);
    REQUIRE(basis.size() == 7);
    std::vector<BallFunction> fs;
    for (const auto& idx : basis) fs.push_back(matrix_wavelet_to_ballfunction(2, 2, idx, 0, 3));
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i; j < fs.size(); ++j) {
            Complex g = inner_product(fs[i], fs[j]);
            CHECK(std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
        }
}

TEST_CASE("Monna map conjugates 2-adic wavelets to Haar wavelets") {
    for (const WaveletIndex& idx :
         {WaveletIndex{0, {}, 1}, WaveletIndex{0, {1}, 1}, WaveletIndex{1, {}, 1},
          WaveletIndex{-1, {}, 1}, WaveletIndex{-1, {1, 1}, 1}}) {
        MonnaCheckReport r = monna_conjugate_check(idx, 4);
        CHECK(r.samples > 0);
        CHECK(r.max_deviation == 0.0);
    }
}

}  // TEST_SUITE
