// Acceptance battery: each criterion is run as `acceptance <id> [cli-path]`
// and prints one PASS/FAIL line with its runtime. Exit code 0 on pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <unistd.h>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "ultrametra/genetic.hpp"
#include "ultrametra/padic.hpp"
#include "ultrametra/series.hpp"
#include "ultrametra/strings.hpp"
#include "ultrametra/tree.hpp"
#include "ultrametra/vladimirov.hpp"
#include "ultrametra/wavelets.hpp"
#include "ultrametra/zp_density.hpp"

using namespace ultra;

namespace {

std::string g_cli_path;
std::ostringstream g_detail;

Eigen::VectorXd to_vec(const BallFunction& f, bool imag = false) {
    Eigen::VectorXd v(f.cell_count());
    for (long c = 0; c < f.cell_count(); ++c) v(c) = imag ? f[c].imag() : f[c].real();
    return v;
}

// --- criterion 1: adelic product identities ------------------------------

bool criterion_1() {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000), den_small(1, 10000);
    long mult_ok = 0;
    for (int t = 0; t < 1000; ++t) {
        long n = num(rng);
        if (n == 0) n = 1;
        if (mult_product_check(BigRat(n, den(rng))) == 1) ++mult_ok;
    }
    long add_ok = 0;
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        long n = num(rng);
        if (n == 0) n = 1;
        double dev = std::abs(additive_product_check(BigRat(n, den_small(rng))) -
                              std::complex<double>(1, 0));
        worst = std::max(worst, dev);
        if (dev <= 1e-12) ++add_ok;
    }
    g_detail << "multiplicative exact " << mult_ok << "/1000, additive within 1e-12 " << add_ok
             << "/1000 (worst " << worst << ")";
    return mult_ok == 1000 && add_ok == 1000;
}

// --- criterion 2: factorial series ---------------------------------------

bool criterion_2() {
    for (long N = 2; N <= 200; ++N)
        if (!partial_sum_identity_check(N)) {
            g_detail << "partial sum identity failed at N=" << N;
            return false;
        }
    for (long p : {2L, 3L, 5L, 7L}) {
        SeriesResult r = sum_factorial_linear(p, 30);
        if (!agrees(r.value, PAdic::from_integer(-1, p, 30))) {
            g_detail << "sum n! n != -1 to 30 digits for p=" << p;
            return false;
        }
    }
    // decay: |S_N + 1|_p = |(N+1)!|_p <= |N!|_p at every N
    BigInt sum = 0, fact = 1;
    for (long N = 1; N <= 200; ++N) {
        fact *= N;
        sum += fact * N;
        for (long p : {2L, 3L, 5L, 7L}) {
            BigRat lhs = pow_rat(p, -valuation(BigInt(sum + 1), p));
            if (lhs != factorial_norm(N + 1, p) || lhs > factorial_norm(N, p)) {
                g_detail << "decay violated at N=" << N << ", p=" << p;
                return false;
            }
        }
    }
    g_detail << "identity N<=200 exact; 4 primes to 30 digits; decay |S_N+1|_p = |(N+1)!|_p";
    return true;
}

// --- criterion 3: invariant summation ------------------------------------

BigInt lhs_exact(const InvariantSummation& s, long k, int eps, long n, const BigInt& x) {
    BigInt sum = 0, sign = 1, fact = 1, xp = 1;
    for (long i = 0; i < n; ++i) {
        BigInt ik = 1, xk = 1;
        for (long t = 0; t < k; ++t) ik *= i, xk *= x;
        sum += sign * fact * (ik * xk + s.U.eval(x)) * xp;
        sign *= eps;
        fact *= (i + 1);
        xp *= x;
    }
    return sum;
}

BigInt rhs_exact(const InvariantSummation& s, int eps, long n, const BigInt& x) {
    BigInt sign = 1, fact = 1, xp = 1;
    for (long i = 0; i < n; ++i) sign *= eps, fact *= (i + 1), xp *= x;
    return s.V.eval(x) + sign * fact * s.A.eval(n, x) * xp;
}

bool criterion_3() {
    InvariantSummation s1 = solve_invariant_summation(1, 1, 40);
    if (!(s1.U == IntPolynomial({-1, 1}) && s1.V == IntPolynomial({-1}) &&
          s1.A.x_coeffs.size() == 1 && s1.A.x_coeffs[0] == IntPolynomial({1}))) {
        g_detail << "k=1 closed form (x-1, -1, 1) not reproduced";
        return false;
    }
    for (long k : {1L, 2L}) {
        InvariantSummation s = solve_invariant_summation(k, 1, 40);
        for (long n = 0; n <= 20; ++n)
            for (long x = -5; x <= 5; ++x) {
                if (x == 0) continue;  // ten integer x values
                if (lhs_exact(s, k, 1, n, x) != rhs_exact(s, 1, n, x)) {
                    g_detail << "identity failed: k=" << k << " n=" << n << " x=" << x;
                    return false;
                }
            }
    }
    g_detail << "k=1 closed form exact; k=1,2 verified symbolically, n<=20, 10 x values";
    return true;
}

// --- criterion 4: wavelet orthonormality ---------------------------------

bool criterion_4() {
    for (long p : {2L, 3L, 5L}) {
        GramReport r = wavelet_gram_1d(p, -1, 2, 2);
        g_detail << "1D p=" << p << ": " << r.basis_size << " wavelets, dev " << r.max_deviation
                 << "; ";
        if (r.max_deviation > 1e-10) return false;
    }
    // 2D (p = 2): all wavelets supported in 2^-1 Z_2^2
    std::vector<MdWaveletIndex> md;
    std::vector<std::vector<uint32_t>> ks{{0, 1}, {1, 0}, {1, 1}};
    for (const auto& k : ks) md.push_back({k, 1, {BigRat(0), BigRat(0)}});
    for (const auto& k : ks)
        for (int n0 = 0; n0 < 2; ++n0)
            for (int n1 = 0; n1 < 2; ++n1) md.push_back({k, 0, {BigRat(n0, 2), BigRat(n1, 2)}});
    std::vector<BallFunction> fs;
    for (const auto& idx : md) fs.push_back(md_wavelet_to_ballfunction(2, 2, idx, 1, 1));
    double md_dev = 0.0;
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i; j < fs.size(); ++j)
            md_dev = std::max(md_dev, std::abs(inner_product(fs[i], fs[j]) -
                                               Complex(i == j ? 1.0 : 0.0, 0.0)));
    g_detail << "2D: " << fs.size() << " wavelets, dev " << md_dev << "; ";
    if (md_dev > 1e-10) return false;

    auto mat = matrix_wavelets_in_unit_ball(2, 2, 2);
    std::vector<BallFunction> ms;
    for (const auto& idx : mat) ms.push_back(matrix_wavelet_to_ballfunction(2, 2, idx, 0, 3));
    double mat_dev = 0.0;
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i; j < ms.size(); ++j)
            mat_dev = std::max(mat_dev, std::abs(inner_product(ms[i], ms[j]) -
                                                 Complex(i == j ? 1.0 : 0.0, 0.0)));
    g_detail << "matrix dilation: " << ms.size() << " wavelets, dev " << mat_dev << "; ";
    if (ms.size() != 7 || mat_dev > 1e-10) return false;

    for (const WaveletIndex& idx :
         {WaveletIndex{0, {}, 1}, WaveletIndex{0, {1}, 1}, WaveletIndex{1, {}, 1},
          WaveletIndex{-1, {1}, 1}}) {
        MonnaCheckReport r = monna_conjugate_check(idx, 4);
        if (r.max_deviation != 0.0) {
            g_detail << "Monna deviation nonzero";
            return false;
        }
    }
    g_detail << "Monna deviation 0 at resolution 4";
    return true;
}

// --- criterion 5: Vladimirov spectra -------------------------------------

bool criterion_5() {
    double worst_eig = 0.0;
    for (long p : {2L, 3L, 5L})
        for (double alpha : {0.5, 1.0, 1.7})
            for (long gamma : {-1L, 0L, 1L}) {
                WaveletIndex idx{gamma, {}, 1};
                int N = static_cast<int>(std::max(gamma, 0L)) + 1;
                int M = static_cast<int>(std::max(1 - gamma, 1L));
                BallFunction f = wavelet_to_ballfunction(p, idx, N, M);
                OperatorSpec spec{p, alpha, N, M, ExteriorPolicy::FullSpaceZeroOutside};
                double lambda = vladimirov_eigenvalue(p, alpha, gamma);
                for (bool imag : {false, true}) {
                    Eigen::VectorXd v = to_vec(f, imag);
                    worst_eig =
                        std::max(worst_eig,
                                 (apply_direct(spec, v) - lambda * v).cwiseAbs().maxCoeff());
                }
            }
    g_detail << "eigenvalue residual " << worst_eig << " over 27 combos; ";
    if (worst_eig > 1e-8) return false;

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pi(0, 2), gi(-1, 1), si(-1, 1), di(0, 2), bi(-20, 20);
    const long ps[3] = {2, 3, 5};
    double worst_comp = 0.0;
    for (int t = 0; t < 100; ++t) {
        long p = ps[pi(rng)];
        std::uniform_int_distribution<int> digit(0, static_cast<int>(p - 1)),
            rot(1, static_cast<int>(p - 1));
        std::vector<uint32_t> digits(di(rng));
        for (auto& d : digits) d = digit(rng);
        WaveletIndex idx{gi(rng), digits, rot(rng)};
        BigRat b(bi(rng), p * p);
        CompositeRuleReport r = composite_rule_check(p, 0.4 + 0.2 * di(rng), idx, si(rng), b);
        worst_comp = std::max(worst_comp, r.max_deviation);
    }
    g_detail << "composite rule dev " << worst_comp << " over 100 substitutions; ";
    if (worst_comp > 1e-8) return false;

    // spectral vs matrix heat for a mean-zero function on Z_2
    std::uniform_real_distribution<double> u(-1, 1);
    BallFunction f(2, 1, 0, 2);
    for (long c = 0; c < f.cell_count(); ++c) f[c] = u(rng);
    Complex mean = f.integral();
    for (long c = 0; c < f.cell_count(); ++c) f[c] -= mean;
    OperatorSpec spec{2, 1.0, 2, 2, ExteriorPolicy::FullSpaceZeroOutside};
    BallFunction wide = f.refined(2, 2);
    double worst_heat = 0.0;
    for (double t : {0.05, 0.1}) {
        BallFunction spectral = heat_spectral(f, 1.0, t, -1, 0);
        auto sols = heat_solve(spec, to_vec(wide), {t});
        for (long c = 0; c < f.cell_count(); ++c) {
            long wc = wide.axis_cell_of(f.axis_representative(c));
            worst_heat = std::max(worst_heat, std::abs(spectral[c].real() - sols[0](wc)));
        }
    }
    g_detail << "spectral vs matrix heat dev " << worst_heat;
    return worst_heat <= 1e-4;
}

// --- criterion 6: tree PDO on random trees -------------------------------

bool criterion_6() {
    std::mt19937 rng(6);
    std::uniform_int_distribution<long> leaves(3, 64);
    std::uniform_real_distribution<double> betas(0.2, 2.0);
    double worst_eig = 0.0, worst_vec = 0.0, worst_gibbs = 0.0;
    for (int t = 0; t < 50; ++t) {
        UltrametricTree tr = random_tree(leaves(rng), 1000 + t);
        const long L = tr.leaf_count();
        Eigen::MatrixXd D = tr.pdo_matrix();
        Eigen::MatrixXd W = tr.tree_wavelets();
        auto owners = tr.tree_wavelet_owners();
        for (long c = 0; c < W.cols(); ++c) {
            double lambda = tr.tree_eigenvalue(owners[c]);
            worst_vec = std::max(worst_vec,
                                 (D * W.col(c) - lambda * W.col(c)).cwiseAbs().maxCoeff());
        }
        Eigen::VectorXd sq(L);
        for (long l = 0; l < L; ++l) sq(l) = std::sqrt(tr.node(tr.leaves()[l]).measure);
        Eigen::MatrixXd S = sq.asDiagonal() * D * sq.cwiseInverse().asDiagonal();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()));
        std::vector<double> expected{0.0};
        for (int i = 0; i < tr.node_count(); ++i)
            if (!tr.is_leaf(i))
                for (size_t c = 1; c < tr.node(i).children.size(); ++c)
                    expected.push_back(tr.tree_eigenvalue(i));
        std::sort(expected.begin(), expected.end());
        for (long i = 0; i < L; ++i)
            worst_eig = std::max(worst_eig, std::abs(es.eigenvalues()(i) - expected[i]) /
                                                (1.0 + std::abs(expected[i])));
    }
    for (int t = 0; t < 50; ++t) {
        UltrametricTree tr = random_tree(leaves(rng), 2000 + t);
        double beta = betas(rng);
        Eigen::MatrixXd Lg = tr.drift_generator(beta);
        Eigen::VectorXd gibbs(tr.leaf_count());
        for (long l = 0; l < tr.leaf_count(); ++l)
            gibbs(l) = std::exp(-beta * *tr.node(tr.leaves()[l]).energy);
        worst_gibbs =
            std::max(worst_gibbs, (Lg * gibbs).cwiseAbs().maxCoeff() / gibbs.maxCoeff());
    }
    g_detail << "50 trees: eigenvalue dev " << worst_eig << ", eigenvector residual " << worst_vec
             << "; 50 landscapes: Gibbs residual " << worst_gibbs;
    return worst_eig <= 1e-10 && worst_vec <= 1e-10 && worst_gibbs <= 1e-12;
}

// --- criterion 7: iid convergence ----------------------------------------

bool criterion_7() {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double worst_margin = -1.0;
    for (int t = 0; t < 20; ++t) {
        long p = (t % 2 == 0) ? 2 : 3;
        std::uniform_int_distribution<int> Ms(2, 4);
        int M = Ms(rng);
        std::uniform_int_distribution<int> srs(0, 1);
        int support_r = srs(rng);
        std::uniform_int_distribution<int> crs(support_r + 1, M);
        int constancy_r = crs(rng);
        long cells = 1, pc = 1, pr = 1;
        for (int i = 0; i < M; ++i) cells *= p;
        for (int i = 0; i < constancy_r; ++i) pc *= p;
        for (int i = 0; i < support_r; ++i) pr *= p;
        std::uniform_int_distribution<long> shift(0, pr - 1);
        long a = shift(rng);  // support coset a + p^support_r Z_p
        std::vector<double> vals(cells, 0.0);
        double mass = 0.0;
        for (long c = 0; c < cells; ++c) {
            if (c % pr != a) continue;
            if (vals[c % pc] == 0.0) vals[c % pc] = u(rng);
            vals[c] = vals[c % pc];
            mass += vals[c] / cells;
        }
        for (auto& v : vals) v /= mass;
        ZpDensity d(p, M, vals);
        ConvergenceReport rep = convergence_report(d, support_r, constancy_r, 100);
        if (rep.any_violation) {
            g_detail << "bound violated (trial " << t << ", p=" << p << " M=" << M
                     << " support_r=" << support_r << " constancy_r=" << constancy_r << "):";
            for (const auto& row : rep.rows)
                if (row.violated)
                    g_detail << " n=" << row.n << " d=" << row.distance << " b=" << row.bound;
            return false;
        }
        for (size_t i = 1; i < rep.rows.size(); ++i)
            if (rep.rows[i].distance > rep.rows[i - 1].distance + 1e-12) {
                g_detail << "distance increased (trial " << t << ", n=" << rep.rows[i].n << ")";
                return false;
            }
        for (const auto& row : rep.rows)
            worst_margin = std::max(worst_margin, row.distance - row.bound);
    }
    g_detail << "20 densities, n<=100: bound holds (worst margin " << worst_margin
             << "), distance non-increasing";
    return true;
}

// --- criterion 8: amplitudes ----------------------------------------------

bool criterion_8a() {
    BigRat v = amplitude_closed_exact(2, 2, 2);
    g_detail << "A_2(2,2) = " << v;
    return v == BigRat(-5, 21);
}

bool criterion_8b() {
    double worst = 0.0;
    for (long p : {2L, 3L, 5L})
        for (double a : {0.1, 0.15, 0.2, 0.3, 0.4})
            for (double b : {0.1, 0.15, 0.2, 0.3, 0.4}) {
                AmplitudeParams params{a, b};
                IntegralResult r = amplitude_integral(params, p, 40);
                worst = std::max(worst, std::abs(r.value - amplitude_closed(params, p)));
            }
    g_detail << "integral vs closed form dev " << worst << " on 5x5 grid, p in {2,3,5}";
    return worst <= 1e-8;
}

bool criterion_8c() {
    // Exact per-prime identity A_p = prod_s zeta_p(s) / zeta_p(1-s), written in
    // the variables t_s = p^-s (rationals), with t_c = 1 / (p t_a t_b).
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> nd(1, 40), pid(0, 3);
    const long ps[4] = {2, 3, 5, 7};
    for (int t = 0; t < 100; ++t) {
        long p = ps[pid(rng)];
        BigRat ta(nd(rng), nd(rng)), tb(nd(rng), nd(rng));
        BigRat tc = BigRat(1) / (BigRat(p) * ta * tb);
        bool degenerate = false;
        BigRat amp = 1, ratio = 1;
        for (const BigRat& ts : {ta, tb, tc}) {
            BigRat pt = BigRat(p) * ts;
            if (ts == 1 || pt == 1) {
                degenerate = true;
                break;
            }
            // local amplitude factor (1 - p^(s-1)) / (1 - p^-s)
            amp *= (1 - BigRat(1) / pt) / (1 - ts);
            // zeta_p(s) / zeta_p(1-s) with zeta_p(s) = 1/(1 - p^-s)
            BigRat zs = BigRat(1) / (1 - ts);
            BigRat z1ms = BigRat(1) / (1 - BigRat(1) / pt);
            ratio *= zs / z1ms;
        }
        if (degenerate) continue;
        if (amp != ratio) {
            g_detail << "identity failed at trial " << t;
            return false;
        }
    }
    g_detail << "per-prime zeta-ratio identity exact for 100 random rational parameters";
    return true;
}

bool criterion_8d() {
    ProductResult r = product_zeta_ratio(2.0, 2.5, 100000);
    g_detail << "truncated product " << r.product.real() << " vs zeta ratio "
             << r.zeta_ratio.real() << ", deviation " << r.deviation;
    return r.deviation <= 1e-3;
}

// --- criterion 9: genetic code --------------------------------------------

bool criterion_9() {
    std::set<long> numbers;
    std::vector<Codon> all;
    for (char a : {'C', 'A', 'U', 'G'})
        for (char b : {'C', 'A', 'U', 'G'})
            for (char c : {'C', 'A', 'U', 'G'}) {
                Codon codon{{a, b, c}};
                long n = encode_codon(codon);
                if (n < 31 || n > 124 || !(decode_codon(n) == codon)) {
                    g_detail << "encoding not a bijection";
                    return false;
                }
                numbers.insert(n);
                all.push_back(codon);
            }
    if (numbers.size() != 64) {
        g_detail << "encoding not injective";
        return false;
    }
    // 16 quadruplets: fixed first two letters, pairwise 5-adic distance 1/25
    for (char a : {'C', 'A', 'U', 'G'})
        for (char b : {'C', 'A', 'U', 'G'}) {
            std::vector<Codon> quad;
            for (char c : {'C', 'A', 'U', 'G'}) quad.push_back(Codon{{a, b, c}});
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i + 1; j < 4; ++j)
                    if (distance_5adic(quad[i], quad[j]) != BigRat(1, 25)) {
                        g_detail << "quadruplet structure broken";
                        return false;
                    }
        }
    CodeTable table = CodeTable::vertebrate_mitochondrial();
    DoubletReport doublets = doublet_degeneracy_check(table);
    if (doublets.doublets.size() != 32 || doublets.violations != 0) {
        g_detail << "doublet degeneracy " << (32 - doublets.violations) << "/32";
        return false;
    }
    std::set<std::string> ter;
    for (const Codon& c : table.preimage("Ter")) ter.insert(c.to_string());
    if (ter != std::set<std::string>{"UAA", "UAG", "AGA", "AGG"}) {
        g_detail << "Ter preimage mismatch";
        return false;
    }
    for (long p : {5L, 2L})
        for (const Codon& x : all)
            for (const Codon& y : all)
                for (const Codon& z : all) {
                    auto d = (p == 5) ? distance_5adic : distance_2adic;
                    if (d(x, z) > std::max(d(x, y), d(y, z))) {
                        g_detail << "ultrametric inequality violated (p=" << p << ")";
                        return false;
                    }
                }
    g_detail << "bijection, 16 quadruplets, 32/32 doublets, Ter preimage, 2*64^3 triples";
    return true;
}

// --- criterion 10: determinism of check subcommands ------------------------

bool criterion_10() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("ultrametra_det_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::vector<std::string> commands{
        "tree spectrum --random-leaves 40 --seed 123",
        "tree drift --random-leaves 25 --seed 9 --beta 1.1",
        "wavelet gram --p 3 --range 2",
        "genetic check",
        "padic check-products --value -22/7",
        "series sum --p 5 --K 20",
    };
    auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool ok = true;
    for (size_t i = 0; i < commands.size(); ++i) {
        fs::path a = dir / (std::to_string(i) + "a.out"), b = dir / (std::to_string(i) + "b.out");
        for (const fs::path& out : {a, b}) {
            std::string cmd =
                "\"" + g_cli_path + "\" " + commands[i] + " --out \"" + out.string() + "\"";
            if (std::system(cmd.c_str()) != 0) {
                g_detail << "command failed: " << commands[i] << "; ";
                ok = false;
            }
        }
        std::string ra = slurp(a), rb = slurp(b);
        if (ra.empty() || ra != rb) {
            g_detail << (ra.empty() ? "empty output: " : "outputs differ: ") << commands[i]
                     << "; ";
            ok = false;
        }
    }
    fs::remove_all(dir);
    if (ok) g_detail << commands.size() << " check subcommands byte-identical across reruns";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion> [cli-path]\n";
        return 2;
    }
    std::string id = argv[1];
    if (argc > 2) g_cli_path = argv[2];

    std::map<std::string, std::function<bool()>> criteria{
        {"1", criterion_1},   {"2", criterion_2},   {"3", criterion_3},  {"4", criterion_4},
        {"5", criterion_5},   {"6", criterion_6},   {"7", criterion_7},  {"8a", criterion_8a},
        {"8b", criterion_8b}, {"8c", criterion_8c}, {"8d", criterion_8d}, {"9", criterion_9},
        {"10", criterion_10},
    };
    auto it = criteria.find(id);
    if (it == criteria.end()) {
        std::cerr << "unknown criterion: " << id << "\n";
        return 2;
    }
    if (id == "10" && g_cli_path.empty()) {
        std::cerr << "criterion 10 needs the CLI path\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = it->second();
    } catch (const std::exception& e) {
        g_detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s (%.2f s): %s\n", pass ? "PASS" : "FAIL", id.c_str(), secs,
                g_detail.str().c_str());
    return pass ? 0 : 1;
}
