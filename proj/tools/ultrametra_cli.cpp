// Command-line front end: every library module exposed as a subcommand with
// JSON/CSV emission. Exit codes: 0 success, 1 validation failure, 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"

#include "ultrametra/genetic.hpp"
#include "ultrametra/padic.hpp"
#include "ultrametra/series.hpp"
#include "ultrametra/strings.hpp"
#include "ultrametra/tree.hpp"
#include "ultrametra/vladimirov.hpp"
#include "ultrametra/wavelets.hpp"
#include "ultrametra/zp_density.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ultra;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
        }
    }
};

BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

json complex_json(const std::complex<double>& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ULTRAMETRA_THREADS"))
        Eigen::setNbThreads(std::max(1, std::atoi(threads)));

    CLI::App app{"ultrametra: p-adic and ultrametric analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);  // inherited: global flags may follow subcommand names

    std::string format = "json";
    Output output;
    app.add_option("--out", output.path, "output file (default: stdout)");
    app.add_option("--format", format, "json|csv where applicable");

    long p = 2, K = 16;
    double alpha = 1.0, tol = 1e-10;
    unsigned seed = 1;
    app.add_option("--p", p, "prime")->capture_default_str();
    app.add_option("--K,--precision", K, "p-adic precision (digits)")->capture_default_str();
    app.add_option("--alpha", alpha, "Vladimirov exponent")->capture_default_str();
    app.add_option("--tol", tol, "tolerance for check suites")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

    int exit_code = kOk;

    // ---------- padic ----------
    auto* padic = app.add_subcommand("padic", "exact p-adic arithmetic");
    padic->require_subcommand(1);
    std::string value = "1";

    auto* padic_eval = padic->add_subcommand("eval", "p-adic expansion of a rational");
    padic_eval->add_option("--value", value, "rational, e.g. -7/6")->required();
    padic_eval->callback([&] {
        PAdic x = PAdic::from_rational(parse_rational(value), p, K);
        json j{{"p", p},
               {"value", value},
               {"valuation", x.valuation()},
               {"norm", rat_str(x.norm())},
               {"digits", x.digits()},
               {"expansion", x.to_string()}};
        output.write(j.dump(2));
    });

    std::string primes_csv = "2,3,5,7";
    auto* padic_convert = padic->add_subcommand("convert", "adelic components of a rational");
    padic_convert->add_option("--value", value)->required();
    padic_convert->add_option("--primes", primes_csv, "comma-separated primes");
    padic_convert->callback([&] {
        std::set<long> primes;
        for (double d : parse_doubles(primes_csv)) primes.insert(static_cast<long>(d));
        Adele a = adele_from_rational(parse_rational(value), primes, K);
        json comps = json::object();
        for (const auto& [q, xq] : a.finite_parts)
            comps[std::to_string(q)] =
                json{{"valuation", xq.exact_zero() ? 0 : xq.valuation()},
                     {"norm", rat_str(xq.norm())},
                     {"expansion", xq.to_string()}};
        json j{{"value", value},
               {"real", a.real_part},
               {"support", std::vector<long>(a.support.begin(), a.support.end())},
               {"components", comps}};
        output.write(j.dump(2));
    });

    auto* padic_check = padic->add_subcommand("check-products", "adelic product formulas");
    padic_check->add_option("--value", value)->required();
    padic_check->callback([&] {
        BigRat q = parse_rational(value);
        BigRat mult = mult_product_check(q);
        std::complex<double> add = additive_product_check(q);
        double add_dev = std::abs(add - std::complex<double>(1.0, 0.0));
        bool ok = (mult == 1) && add_dev <= tol;
        json j{{"value", value},
               {"multiplicative_product", rat_str(mult)},
               {"multiplicative_exact", mult == 1},
               {"additive_product", complex_json(add)},
               {"additive_deviation", add_dev},
               {"pass", ok}};
        output.write(j.dump(2));
        if (!ok) exit_code = kValidationFailure;
    });

    // ---------- series ----------
    auto* series = app.add_subcommand("series", "p-adic series summation");
    series->require_subcommand(1);

    auto* series_sum = series->add_subcommand("sum", "sum n! n p-adically (limit -1)");
    series_sum->callback([&] {
        SeriesResult r = sum_factorial_linear(p, K);
        PAdic minus_one = PAdic::from_integer(-1, p, K);
        json j{{"p", p},
               {"K", K},
               {"terms_used", r.terms_used},
               {"tail_bound", rat_str(r.tail_bound)},
               {"digits", r.value.digits()},
               {"expansion", r.value.to_string()},
               {"equals_minus_one", agrees(r.value, minus_one)}};
        output.write(j.dump(2));
        if (!agrees(r.value, minus_one)) exit_code = kValidationFailure;
    });

    long k_param = 2;
    int eps = 1;
    long n_check = 40;
    auto* series_inv = series->add_subcommand("invariant", "solve the invariant summation");
    series_inv->add_option("--k", k_param)->capture_default_str();
    series_inv->add_option("--eps", eps)->capture_default_str();
    series_inv->add_option("--n-check", n_check)->capture_default_str();
    series_inv->callback([&] {
        InvariantSummation s = solve_invariant_summation(k_param, eps, n_check);
        auto poly = [](const IntPolynomial& q) {
            std::vector<std::string> c;
            for (const auto& v : q.coeffs) c.push_back(v.str());
            return c;
        };
        json a = json::array();
        for (const auto& cj : s.A.x_coeffs) a.push_back(poly(cj));
        json j{{"k", k_param},
               {"eps", eps},
               {"U", poly(s.U)},
               {"V", poly(s.V)},
               {"A_coeffs_in_n_by_x_power", a},
               {"series_relation_consistent", s.series_relation_consistent}};
        output.write(j.dump(2));
    });

    double s_param = 2.0;
    long N_param = 100000, P_param = 100000;
    auto* series_zeta = series->add_subcommand("zeta", "zeta by Dirichlet series and Euler product");
    series_zeta->add_option("--s", s_param)->capture_default_str();
    series_zeta->add_option("--N", N_param, "Dirichlet cutoff")->capture_default_str();
    series_zeta->add_option("--P", P_param, "Euler prime cutoff")->capture_default_str();
    series_zeta->callback([&] {
        ZetaResult d = zeta_dirichlet(s_param, N_param);
        ZetaResult e = zeta_euler(s_param, P_param);
        json j{{"s", s_param},
               {"dirichlet", d.value.real()},
               {"dirichlet_tail", d.tail_estimate},
               {"euler", e.value.real()},
               {"euler_tail", e.tail_estimate},
               {"difference", std::abs(d.value - e.value)}};
        output.write(j.dump(2));
    });

    // ---------- wavelet ----------
    auto* wavelet = app.add_subcommand("wavelet", "Kozyrev wavelet transforms");
    wavelet->require_subcommand(1);
    std::string in_path;
    long gamma_min = 0, gamma_max = 2, range = 2;

    auto* wav_analyze = wavelet->add_subcommand("analyze", "wavelet coefficients of a sampled function");
    wav_analyze->add_option("--in", in_path, "JSON {p,N,M,values[]}")->required();
    wav_analyze->add_option("--gamma-min", gamma_min)->capture_default_str();
    wav_analyze->add_option("--gamma-max", gamma_max)->capture_default_str();
    wav_analyze->callback([&] {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error("cannot open input: " + in_path);
        json spec = json::parse(in);
        long fp = spec.at("p");
        BallFunction f(fp, 1, spec.at("N"), spec.at("M"));
        auto vals = spec.at("values").get<std::vector<double>>();
        if (static_cast<long>(vals.size()) != f.cell_count())
            throw std::runtime_error("values length must equal p^(N+M)");
        for (long c = 0; c < f.cell_count(); ++c) f[c] = vals[c];
        AnalysisResult r = analyze(f, gamma_min, gamma_max, f.support_exp() - gamma_min);
        json coeffs = json::array();
        for (const auto& [idx, cval] : r.coefficients)
            coeffs.push_back(json{{"gamma", idx.gamma},
                                  {"n_digits", idx.n_digits},
                                  {"j", idx.j},
                                  {"c", complex_json(cval)}});
        json j{{"p", fp}, {"parseval_defect", r.parseval_defect}, {"coefficients", coeffs}};
        output.write(j.dump(2));
    });

    auto* wav_synth = wavelet->add_subcommand("synthesize", "rebuild a function from coefficients");
    long synth_N = 2, synth_M = 2;
    wav_synth->add_option("--in", in_path, "JSON from `wavelet analyze`")->required();
    wav_synth->add_option("--N", synth_N)->capture_default_str();
    wav_synth->add_option("--M", synth_M)->capture_default_str();
    wav_synth->callback([&] {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error("cannot open input: " + in_path);
        json spec = json::parse(in);
        long fp = spec.at("p");
        CoefficientMap coeffs;
        for (const auto& e : spec.at("coefficients")) {
            WaveletIndex idx{e.at("gamma"), e.at("n_digits").get<std::vector<uint32_t>>(),
                             e.at("j")};
            coeffs[idx] = {e.at("c").at("re"), e.at("c").at("im")};
        }
        BallFunction f = synthesize(fp, coeffs, static_cast<int>(synth_N), static_cast<int>(synth_M));
        std::vector<double> re, im;
        for (long c = 0; c < f.cell_count(); ++c) {
            re.push_back(f[c].real());
            im.push_back(f[c].imag());
        }
        json j{{"p", fp}, {"N", synth_N}, {"M", synth_M}, {"values_re", re}, {"values_im", im}};
        output.write(j.dump(2));
    });

    auto* wav_gram = wavelet->add_subcommand("gram", "orthonormality of the wavelet basis");
    wav_gram->add_option("--range", range, "support ball exponent R; gammas in [1-R, R]")
        ->capture_default_str();
    wav_gram->callback([&] {
        GramReport r = wavelet_gram_1d(p, 1 - range, range, range);
        bool ok = r.max_deviation <= tol;
        json j{{"p", p},
               {"R", range},
               {"basis_size", r.basis_size},
               {"max_deviation", r.max_deviation},
               {"pass", ok}};
        output.write(j.dump(2));
        if (!ok) exit_code = kValidationFailure;
    });

    // ---------- heat ----------
    auto* heat = app.add_subcommand("heat", "ultrametric diffusion");
    heat->require_subcommand(1);
    long heat_N = 1, heat_M = 2;
    std::string times_csv = "0.0,0.1,0.5,1.0";
    std::string init = "point";
    long init_cell = 0;

    auto heat_setup = [&](CLI::App* cmd) {
        cmd->add_option("--N", heat_N, "domain ball p^-N Z_p")->capture_default_str();
        cmd->add_option("--M", heat_M, "resolution")->capture_default_str();
        cmd->add_option("--times", times_csv, "comma-separated times")->capture_default_str();
        cmd->add_option("--init", init, "point|uniform")->capture_default_str();
        cmd->add_option("--cell", init_cell, "cell index for point init")->capture_default_str();
    };

    auto make_initial = [&](long cells) {
        Eigen::VectorXd f0 = Eigen::VectorXd::Zero(cells);
        if (init == "uniform")
            f0.setOnes();
        else if (init == "point")
            f0(init_cell) = 1.0;
        else
            throw CLI::ValidationError("--init must be point or uniform");
        return f0;
    };

    auto* heat_solve_cmd = heat->add_subcommand("solve", "heat evolution on the domain ball");
    heat_setup(heat_solve_cmd);
    heat_solve_cmd->callback([&] {
        OperatorSpec spec{p, alpha, static_cast<int>(heat_N), static_cast<int>(heat_M),
                          ExteriorPolicy::FullSpaceZeroOutside};
        long cells = static_cast<long>(std::llround(std::pow(double(p), double(heat_N + heat_M))));
        auto times = parse_doubles(times_csv);
        auto sols = heat_solve(spec, make_initial(cells), times);
        std::ostringstream csv;
        csv << "t";
        for (long c = 0; c < cells; ++c) csv << ",cell" << c;
        csv << "\n";
        for (size_t i = 0; i < times.size(); ++i) {
            csv << fmt(times[i]);
            for (long c = 0; c < cells; ++c) csv << "," << fmt(sols[i](c));
            csv << "\n";
        }
        output.write(csv.str());
    });

    auto* heat_surv = heat->add_subcommand("survival", "mass remaining in the domain ball");
    heat_setup(heat_surv);
    heat_surv->callback([&] {
        OperatorSpec spec{p, alpha, static_cast<int>(heat_N), static_cast<int>(heat_M),
                          ExteriorPolicy::Absorbing};
        long cells = static_cast<long>(std::llround(std::pow(double(p), double(heat_N + heat_M))));
        auto times = parse_doubles(times_csv);
        auto surv = survival_probability(spec, make_initial(cells), times);
        std::ostringstream csv;
        csv << "t,survival\n";
        for (size_t i = 0; i < times.size(); ++i)
            csv << fmt(times[i]) << "," << fmt(surv[i]) << "\n";
        output.write(csv.str());
    });

    // ---------- tree ----------
    auto* tree = app.add_subcommand("tree", "ultrametric trees and densities");
    tree->require_subcommand(1);
    std::string tree_path;
    long random_leaves = 0;

    auto load_tree = [&]() {
        if (!tree_path.empty()) return UltrametricTree::load(tree_path);
        if (random_leaves > 0) return random_tree(random_leaves, seed);
        throw CLI::ValidationError("provide --in tree.json or --random-leaves");
    };

    auto* tree_spec = tree->add_subcommand("spectrum", "tree PDO eigenvalues and residuals");
    tree_spec->add_option("--in", tree_path, "tree JSON file");
    tree_spec->add_option("--random-leaves", random_leaves, "generate a random tree instead");
    tree_spec->callback([&] {
        UltrametricTree t = load_tree();
        Eigen::MatrixXd D = t.pdo_matrix();
        Eigen::MatrixXd W = t.tree_wavelets();
        auto owners = t.tree_wavelet_owners();
        double max_res = 0.0;
        json rows = json::array();
        for (long c = 0; c < W.cols(); ++c) {
            double lambda = t.tree_eigenvalue(owners[c]);
            double res = (D * W.col(c) - lambda * W.col(c)).cwiseAbs().maxCoeff();
            max_res = std::max(max_res, res);
            rows.push_back(json{{"node", owners[c]}, {"lambda", lambda}, {"residual", res}});
        }
        bool ok = max_res <= tol;
        json j{{"leaves", t.leaf_count()},
               {"wavelets", W.cols()},
               {"max_residual", max_res},
               {"pass", ok},
               {"modes", rows}};
        output.write(j.dump(2));
        if (!ok) exit_code = kValidationFailure;
    });

    double beta = 1.0;
    auto* tree_drift = tree->add_subcommand("drift", "landscape drift generator and Gibbs check");
    tree_drift->add_option("--in", tree_path, "tree JSON file");
    tree_drift->add_option("--random-leaves", random_leaves);
    tree_drift->add_option("--beta", beta, "inverse temperature")->capture_default_str();
    tree_drift->callback([&] {
        UltrametricTree t = load_tree();
        Eigen::MatrixXd L = t.drift_generator(beta);
        Eigen::VectorXd gibbs(t.leaf_count());
        for (long l = 0; l < t.leaf_count(); ++l)
            gibbs(l) = std::exp(-beta * *t.node(t.leaves()[l]).energy);
        double res = (L * gibbs).cwiseAbs().maxCoeff() / gibbs.cwiseAbs().maxCoeff();
        bool ok = res <= tol;
        json j{{"leaves", t.leaf_count()}, {"beta", beta}, {"gibbs_residual", res}, {"pass", ok}};
        output.write(j.dump(2));
        if (!ok) exit_code = kValidationFailure;
    });

    long parisi_M = 2;
    std::string q_csv = "1,2";
    auto* tree_parisi = tree->add_subcommand("parisi", "hierarchical Parisi matrix");
    tree_parisi->add_option("--M", parisi_M)->capture_default_str();
    tree_parisi->add_option("--q", q_csv, "q(p^0),q(p^-1),... comma-separated")
        ->capture_default_str();
    tree_parisi->callback([&] {
        Eigen::MatrixXd Q = parisi_matrix(p, static_cast<int>(parisi_M), parse_doubles(q_csv));
        std::ostringstream csv;
        for (long i = 0; i < Q.rows(); ++i) {
            for (long j2 = 0; j2 < Q.cols(); ++j2) csv << (j2 ? "," : "") << fmt(Q(i, j2));
            csv << "\n";
        }
        output.write(csv.str());
    });

    long conv_M = 2, n_max = 50;
    int support_r = 0, constancy_r = 1;
    std::string density_csv;
    auto* tree_conv = tree->add_subcommand("converge", "iid-sum convergence to Haar measure");
    tree_conv->add_option("--M", conv_M)->capture_default_str();
    tree_conv->add_option("--density", density_csv, "p^M density values, comma-separated")
        ->required();
    tree_conv->add_option("--support-r", support_r)->capture_default_str();
    tree_conv->add_option("--constancy-r", constancy_r)->capture_default_str();
    tree_conv->add_option("--n-max", n_max)->capture_default_str();
    tree_conv->callback([&] {
        ZpDensity d(p, static_cast<int>(conv_M), parse_doubles(density_csv));
        ConvergenceReport rep = convergence_report(d, support_r, constancy_r, n_max);
        std::ostringstream csv;
        csv << "n,distance,bound,violated\n";
        for (const auto& row : rep.rows)
            csv << row.n << "," << fmt(row.distance) << "," << fmt(row.bound) << ","
                << (row.violated ? 1 : 0) << "\n";
        output.write(csv.str());
        if (rep.any_violation) exit_code = kValidationFailure;
    });

    // ---------- amplitude ----------
    auto* amplitude = app.add_subcommand("amplitude", "p-adic Veneziano amplitudes");
    amplitude->require_subcommand(1);
    double a_param = 2.0, b_param = 2.0;
    long sphere_N = 30;

    auto* amp_closed = amplitude->add_subcommand("closed", "closed-form local amplitude");
    amp_closed->add_option("--a", a_param)->capture_default_str();
    amp_closed->add_option("--b", b_param)->capture_default_str();
    amp_closed->callback([&] {
        std::complex<double> A = amplitude_closed({a_param, b_param}, p);
        json j{{"p", p}, {"a", a_param}, {"b", b_param}, {"A", complex_json(A)}};
        if (a_param == std::floor(a_param) && b_param == std::floor(b_param))
            j["A_exact"] = rat_str(amplitude_closed_exact(static_cast<long>(a_param),
                                                          static_cast<long>(b_param), p));
        output.write(j.dump(2));
    });

    auto* amp_integral = amplitude->add_subcommand("integral", "sphere-decomposition integral");
    amp_integral->add_option("--a", a_param)->capture_default_str();
    amp_integral->add_option("--b", b_param)->capture_default_str();
    amp_integral->add_option("--N", sphere_N, "sphere cutoff")->capture_default_str();
    amp_integral->callback([&] {
        AmplitudeParams params{a_param, b_param};
        IntegralResult r = amplitude_integral(params, p, sphere_N);
        std::complex<double> closed = amplitude_closed(params, p);
        json j{{"p", p},
               {"a", a_param},
               {"b", b_param},
               {"N", sphere_N},
               {"integral", complex_json(r.value)},
               {"tail_magnitude", r.tail_magnitude},
               {"closed", complex_json(closed)},
               {"difference", std::abs(r.value - closed)}};
        output.write(j.dump(2));
    });

    long prime_bound = 100;
    auto* amp_product = amplitude->add_subcommand("product", "adelic product vs zeta ratio");
    amp_product->add_option("--a", a_param)->capture_default_str();
    amp_product->add_option("--b", b_param)->capture_default_str();
    amp_product->add_option("--P", prime_bound, "prime cutoff")->capture_default_str();
    amp_product->callback([&] {
        ProductResult r = product_zeta_ratio(a_param, b_param, prime_bound);
        std::ostringstream csv;
        csv << "p,A_p,running_product,zeta_ratio,deviation\n";
        for (const auto& row : r.rows)
            csv << row.p << "," << fmt(row.factor.real()) << "," << fmt(row.running.real()) << ","
                << fmt(r.zeta_ratio.real()) << "," << fmt(std::abs(row.running - r.zeta_ratio))
                << "\n";
        output.write(csv.str());
    });

    // ---------- genetic ----------
    auto* genetic = app.add_subcommand("genetic", "p-adic genetic code model");
    genetic->require_subcommand(1);
    std::string table_path, seq1, seq2;

    auto load_table = [&]() {
        return table_path.empty() ? CodeTable::vertebrate_mitochondrial()
                                  : CodeTable::load_tsv(table_path);
    };

    auto* gen_dist = genetic->add_subcommand("dist", "p-adic distance between codon sequences");
    gen_dist->add_option("--seq1", seq1, "codon sequence, e.g. CCCAAA")->required();
    gen_dist->add_option("--seq2", seq2)->required();
    gen_dist->callback([&] {
        if (seq1.size() % 3 || seq1.size() != seq2.size())
            throw CLI::ValidationError("sequences must be equal length multiples of 3");
        std::vector<Codon> c1, c2;
        for (size_t i = 0; i < seq1.size(); i += 3) {
            c1.push_back(Codon::from_string(seq1.substr(i, 3)));
            c2.push_back(Codon::from_string(seq2.substr(i, 3)));
        }
        json j{{"p", p},
               {"codons", c1.size()},
               {"modified_hamming", rat_str(modified_hamming(c1, c2, p))}};
        output.write(j.dump(2));
    });

    auto* gen_check = genetic->add_subcommand("check", "doublet degeneracy of a code table");
    gen_check->add_option("--table", table_path, "TSV code table (default: built-in)");
    gen_check->callback([&] {
        DoubletReport rep = doublet_degeneracy_check(load_table());
        long consistent = static_cast<long>(rep.doublets.size()) - rep.violations;
        json rows = json::array();
        for (const auto& d : rep.doublets)
            rows.push_back(json{{"a", d.a.to_string()},
                                {"b", d.b.to_string()},
                                {"amino_a", d.amino_a},
                                {"amino_b", d.amino_b},
                                {"consistent", d.consistent}});
        json j{{"summary", std::to_string(consistent) + "/" +
                               std::to_string(rep.doublets.size()) + " doublets consistent"},
               {"violations", rep.violations},
               {"doublets", rows}};
        output.write(j.dump(2));
        if (rep.violations > 0) exit_code = kValidationFailure;
    });

    auto* gen_plane = genetic->add_subcommand("plane", "2-adic plane constancy check");
    gen_plane->add_option("--table", table_path, "TSV code table (default: built-in)");
    gen_plane->callback([&] {
        PlaneReport rep = plane_constancy_check(load_table());
        json j{{"codons_checked", rep.codons_checked}, {"mismatches", rep.mismatches}};
        output.write(j.dump(2));
        if (rep.mismatches > 0) exit_code = kValidationFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return exit_code;
}
