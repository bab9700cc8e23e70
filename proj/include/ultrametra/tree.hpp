#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "ultrametra/bigint.hpp"

namespace ultra {

/// Rooted tree of balls of a finite ultrametric space. Leaves are points and
/// carry the measure; internal nodes are balls and carry the kernel value T
/// (and optionally a transition-state energy). Node 0 is the root; children
/// keep their construction order, so derived bases are reproducible.
class UltrametricTree {
  public:
    struct Node {
        std::string name;
        int parent = -1;
        std::vector<int> children;
        double measure = 0.0;           // leaves: given; internal: sum of children
        double kernel = 0.0;            // T, internal nodes
        std::optional<double> energy;   // E, for landscape dynamics
    };

    /// Builds from parent links and per-node data; computes internal measures
    /// and validates the ball-tree invariants (root at index 0, every internal
    /// node with >= 2 children, leaf measures >= 0).
    static UltrametricTree build(std::vector<Node> nodes);

    /// Nested-JSON tree spec: {"name"?, "kernel"?, "energy"?, "children": [...]}
    /// for internal nodes, {"name"?, "measure", "energy"?} for leaves.
    static UltrametricTree from_json(const std::string& text);
    static UltrametricTree load(const std::string& path);

    /// Balanced p-ary tree of depth M over Z_p with uniform leaf measure
    /// p^-M and kernel T(ball of radius p^-k) = kernel_of_level(k), k = 0..M-1.
    static UltrametricTree regular(long p, int M, const std::vector<double>& kernel_by_level);

    long node_count() const { return static_cast<long>(nodes_.size()); }
    long leaf_count() const { return static_cast<long>(leaves_.size()); }
    const Node& node(int i) const { return nodes_[i]; }
    const std::vector<int>& leaves() const { return leaves_; }
    bool is_leaf(int i) const { return nodes_[i].children.empty(); }
    int leaf_position(int node_index) const;  // index into leaves()

    /// Minimal ball containing both leaves: sup(x, y).
    int sup(int leaf_a, int leaf_b) const;

    /// (Df)(x) = Sum_{y != x} T(sup(x,y)) (f(x) - f(y)) nu(y), f indexed by leaves().
    Eigen::VectorXd pdo_apply(const Eigen::VectorXd& f) const;
    Eigen::MatrixXd pdo_matrix() const;

    /// lambda_I = T(I) nu(I) + Sum_{J > I} T(J) nu(S(J, I)), where S(J, I)
    /// removes from J its maximal subball containing I.
    double tree_eigenvalue(int internal_node) const;

    /// One column per basis function over leaves(): for each internal node
    /// with m children, m - 1 orthonormal mean-zero functions constant on each
    /// child (measure-weighted Gram-Schmidt on child indicators). Column order
    /// follows node index. Together with the constant they span everything.
    Eigen::MatrixXd tree_wavelets() const;
    /// Internal node owning each wavelet column.
    std::vector<int> tree_wavelet_owners() const;

    /// Generator L of the landscape drift diffusion df/dt + Lf = 0 on
    /// nu-densities: L_{xy} = -e^{-beta E(sup(x,y))}/nu(sup) e^{beta E(y)} nu(y)
    /// for y != x, diagonal e^{beta E(x)} Sum_{y != x} e^{-beta E(sup)}/nu(sup) nu(y).
    /// Annihilates the Gibbs density e^{-beta E} exactly.
    Eigen::MatrixXd drift_generator(double beta) const;

  private:
    std::vector<Node> nodes_;
    std::vector<int> leaves_;
    std::vector<int> depth_;
    std::vector<int> leaf_pos_;  // node index -> position in leaves_, or -1
};

/// Random tree with the given number of leaves, random measures, kernels and
/// energies; deterministic in the seed (used by the randomized check suites).
UltrametricTree random_tree(long leaves, unsigned seed);

/// Q_{ab} = q(|a - b|_p) for a, b in 0..p^M - 1; q is given on the norm values
/// {1, p^-1, ..., p^-(M-1)} by descending index: q_values[k] = q(p^-k).
/// Diagonal is zero (q(0) = 0 convention).
Eigen::MatrixXd parisi_matrix(long p, int M, const std::vector<double>& q_values);

/// Permutation of {0..p^M-1} sorted by the Monna map (digit reversal); applying
/// it to a Parisi matrix makes the hierarchical blocks contiguous.
std::vector<long> monna_order(long p, int M);

}  // namespace ultra
