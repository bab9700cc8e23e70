#include "ultrametra/tree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ultra {

UltrametricTree UltrametricTree::build(std::vector<Node> nodes) {
    if (nodes.empty()) throw std::invalid_argument("tree: empty");
    UltrametricTree t;
    t.nodes_ = std::move(nodes);
    const long n = t.node_count();
    for (auto& nd : t.nodes_) nd.children.clear();
    for (long i = 1; i < n; ++i) {
        int par = t.nodes_[i].parent;
        if (par < 0 || par >= n || par == i)
            throw std::invalid_argument("tree: bad parent link");
        t.nodes_[par].children.push_back(static_cast<int>(i));
    }
    if (t.nodes_[0].parent != -1) throw std::invalid_argument("tree: node 0 must be the root");

    t.depth_.assign(n, 0);
    t.leaf_pos_.assign(n, -1);
    // nodes arrive parent-before-child (enforced above by parent < i not being
    // required; recompute depths by walking up instead)
    for (long i = 0; i < n; ++i) {
        int d = 0, cur = static_cast<int>(i);
        while (t.nodes_[cur].parent != -1) {
            cur = t.nodes_[cur].parent;
            if (++d > n) throw std::invalid_argument("tree: cycle in parent links");
        }
        t.depth_[i] = d;
    }

    for (long i = 0; i < n; ++i) {
        if (t.nodes_[i].children.empty()) {
            if (t.nodes_[i].measure < 0) throw std::invalid_argument("tree: negative leaf measure");
            t.leaf_pos_[i] = static_cast<int>(t.leaves_.size());
            t.leaves_.push_back(static_cast<int>(i));
        } else if (t.nodes_[i].children.size() < 2 && n > 1) {
            throw std::invalid_argument("tree: internal node with a single child");
        }
    }
    // internal measures: process by decreasing depth
    std::vector<long> order(n);
    for (long i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return t.depth_[a] > t.depth_[b]; });
    for (long i : order) {
        if (t.nodes_[i].children.empty()) continue;
        double m = 0.0;
        for (int c : t.nodes_[i].children) m += t.nodes_[c].measure;
        t.nodes_[i].measure = m;
    }
    return t;
}

namespace {

void parse_node(const nlohmann::json& j, int parent, std::vector<UltrametricTree::Node>& out) {
    UltrametricTree::Node nd;
    nd.parent = parent;
    if (j.contains("name")) nd.name = j.at("name").get<std::string>();
    if (j.contains("kernel")) nd.kernel = j.at("kernel").get<double>();
    if (j.contains("energy")) nd.energy = j.at("energy").get<double>();
    if (j.contains("measure")) nd.measure = j.at("measure").get<double>();
    int self = static_cast<int>(out.size());
    out.push_back(nd);
    if (j.contains("children"))
        for (const auto& c : j.at("children")) parse_node(c, self, out);
}

}  // namespace

UltrametricTree UltrametricTree::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Node> nodes;
    parse_node(j, -1, nodes);
    return build(std::move(nodes));
}

UltrametricTree UltrametricTree::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

UltrametricTree UltrametricTree::regular(long p, int M, const std::vector<double>& kernel_by_level) {
    if (static_cast<int>(kernel_by_level.size()) < M)
        throw std::invalid_argument("regular tree: need one kernel value per level");
    std::vector<Node> nodes;
    double leaf_measure = std::pow(static_cast<double>(p), -M);
    // breadth-first construction
    struct Item {
        int parent;
        int level;
    };
    std::vector<Item> queue{{-1, 0}};
    for (size_t q = 0; q < queue.size(); ++q) {
        Node nd;
        nd.parent = queue[q].parent;
        int self = static_cast<int>(nodes.size());
        if (queue[q].level < M) {
            nd.kernel = kernel_by_level[queue[q].level];
            for (long c = 0; c < p; ++c) queue.push_back({self, queue[q].level + 1});
        } else {
            nd.measure = leaf_measure;
        }
        nodes.push_back(nd);
    }
    return build(std::move(nodes));
}

int UltrametricTree::leaf_position(int node_index) const { return leaf_pos_[node_index]; }

int UltrametricTree::sup(int leaf_a, int leaf_b) const {
    int a = leaf_a, b = leaf_b;
    while (a != b) {
        if (depth_[a] >= depth_[b])
            a = nodes_[a].parent;
        else
            b = nodes_[b].parent;
    }
    return a;
}

Eigen::MatrixXd UltrametricTree::pdo_matrix() const {
    const long L = leaf_count();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(L, L);
    for (long i = 0; i < L; ++i) {
        double diag = 0.0;
        for (long j = 0; j < L; ++j) {
            if (i == j) continue;
            double t = nodes_[sup(leaves_[i], leaves_[j])].kernel;
            double w = t * nodes_[leaves_[j]].measure;
            D(i, j) = -w;
            diag += w;
        }
        D(i, i) = diag;
    }
    return D;
}

Eigen::VectorXd UltrametricTree::pdo_apply(const Eigen::VectorXd& f) const {
    if (f.size() != leaf_count()) throw std::invalid_argument("pdo_apply: size mismatch");
    return pdo_matrix() * f;
}

double UltrametricTree::tree_eigenvalue(int internal_node) const {
    if (is_leaf(internal_node)) throw std::invalid_argument("tree_eigenvalue: leaf node");
    double lambda = nodes_[internal_node].kernel * nodes_[internal_node].measure;
    int cur = internal_node;
    while (nodes_[cur].parent != -1) {
        int par = nodes_[cur].parent;
        // nu(S(J, I)) = nu(J) minus the maximal subball of J containing I
        lambda += nodes_[par].kernel * (nodes_[par].measure - nodes_[cur].measure);
        cur = par;
    }
    return lambda;
}

Eigen::MatrixXd UltrametricTree::tree_wavelets() const {
    const long L = leaf_count();
    std::vector<Eigen::VectorXd> basis;
    for (long i = 0; i < node_count(); ++i) {
        if (is_leaf(static_cast<int>(i))) continue;
        const auto& ch = nodes_[i].children;
        // child indicator functions over leaves, as vectors
        std::vector<Eigen::VectorXd> ind;
        for (int c : ch) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(L);
            // mark leaves under child c
            std::vector<int> stack{c};
            while (!stack.empty()) {
                int nd = stack.back();
                stack.pop_back();
                if (is_leaf(nd))
                    v(leaf_pos_[nd]) = 1.0;
                else
                    for (int cc : nodes_[nd].children) stack.push_back(cc);
            }
            ind.push_back(std::move(v));
        }
        auto dot = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
            double s = 0.0;
            for (long l = 0; l < L; ++l) s += a(l) * b(l) * nodes_[leaves_[l]].measure;
            return s;
        };
        // Gram-Schmidt against the constant-on-I direction and earlier vectors;
        // the first m-1 child indicators yield the m-1 wavelets of this node
        Eigen::VectorXd unit = Eigen::VectorXd::Zero(L);
        for (const auto& v : ind) unit += v;
        std::vector<Eigen::VectorXd> ortho{unit / std::sqrt(dot(unit, unit))};
        for (size_t k = 0; k + 1 < ind.size(); ++k) {
            Eigen::VectorXd v = ind[k];
            for (const auto& u : ortho) v -= dot(u, v) * u;
            double nrm = std::sqrt(dot(v, v));
            if (nrm <= 0) throw std::runtime_error("tree_wavelets: degenerate child measure");
            v /= nrm;
            ortho.push_back(v);
            basis.push_back(v);
        }
    }
    Eigen::MatrixXd W(L, static_cast<long>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) W.col(static_cast<long>(k)) = basis[k];
    return W;
}

std::vector<int> UltrametricTree::tree_wavelet_owners() const {
    std::vector<int> owners;
    for (long i = 0; i < node_count(); ++i)
        if (!is_leaf(static_cast<int>(i)))
            for (size_t k = 0; k + 1 < nodes_[i].children.size(); ++k)
                owners.push_back(static_cast<int>(i));
    return owners;
}

Eigen::MatrixXd UltrametricTree::drift_generator(double beta) const {
    const long L = leaf_count();
    for (long l = 0; l < L; ++l)
        if (!nodes_[leaves_[l]].energy) throw std::invalid_argument("drift: missing leaf energy");
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(L, L);
    for (long i = 0; i < L; ++i) {
        double diag = 0.0;
        for (long j = 0; j < L; ++j) {
            if (i == j) continue;
            int s = sup(leaves_[i], leaves_[j]);
            if (!nodes_[s].energy) throw std::invalid_argument("drift: missing barrier energy");
            double k = std::exp(-beta * *nodes_[s].energy) / nodes_[s].measure;
            double w = k * nodes_[leaves_[j]].measure;
            gen(i, j) = -k * std::exp(beta * *nodes_[leaves_[j]].energy) * nodes_[leaves_[j]].measure;
            diag += w;
        }
        gen(i, i) = std::exp(beta * *nodes_[leaves_[i]].energy) * diag;
    }
    return gen;
}

namespace {

void random_subtree(std::mt19937& rng, int parent, long leaves_left,
                    std::vector<UltrametricTree::Node>& nodes) {
    std::uniform_real_distribution<double> measure(0.1, 1.0);
    std::uniform_real_distribution<double> kernel(0.1, 2.0);
    std::uniform_real_distribution<double> energy(0.0, 1.5);
    UltrametricTree::Node nd;
    nd.parent = parent;
    int self = static_cast<int>(nodes.size());
    if (leaves_left == 1) {
        nd.measure = measure(rng);
        nd.energy = energy(rng);
        nodes.push_back(nd);
        return;
    }
    nd.kernel = kernel(rng);
    nd.energy = energy(rng);
    nodes.push_back(nd);
    std::uniform_int_distribution<long> nch(2, std::min<long>(4, leaves_left));
    long m = nch(rng);
    std::vector<long> parts(m, 1);
    for (long extra = leaves_left - m; extra > 0; --extra) {
        std::uniform_int_distribution<long> pick(0, m - 1);
        ++parts[pick(rng)];
    }
    for (long part : parts) random_subtree(rng, self, part, nodes);
}

}  // namespace

UltrametricTree random_tree(long leaves, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<UltrametricTree::Node> nodes;
    random_subtree(rng, -1, std::max<long>(leaves, 2), nodes);
    return UltrametricTree::build(std::move(nodes));
}

Eigen::MatrixXd parisi_matrix(long p, int M, const std::vector<double>& q_values) {
    if (static_cast<int>(q_values.size()) < M)
        throw std::invalid_argument("parisi_matrix: q must cover norms 1 .. p^-(M-1)");
    long n = 1;
    for (int i = 0; i < M; ++i) n *= p;
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (a == b) continue;
            long d = a - b, v = 0;
            while (d % p == 0) {
                d /= p;
                ++v;
            }
            Q(a, b) = q_values[v];  // |a-b|_p = p^-v
        }
    }
    return Q;
}

std::vector<long> monna_order(long p, int M) {
    long n = 1;
    for (int i = 0; i < M; ++i) n *= p;
    std::vector<long> order(n);
    for (long a = 0; a < n; ++a) {
        // digit reversal: rho(a) = Sum a_i p^(M-1-i), scaled to an integer rank
        long x = a, r = 0;
        for (int i = 0; i < M; ++i) {
            r = r * p + x % p;
            x /= p;
        }
        order[a] = r;
    }
    // order[a] is the rank of a; invert to get the permutation listing indices
    std::vector<long> perm(n);
    for (long a = 0; a < n; ++a) perm[order[a]] = a;
    return perm;
}

}  // namespace ultra
