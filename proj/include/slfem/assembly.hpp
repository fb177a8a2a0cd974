#ifndef SLFEM_ASSEMBLY_HPP
#define SLFEM_ASSEMBLY_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <utility>
#include <vector>

#include "slfem/constitutive.hpp"
#include "slfem/mesh.hpp"
#include "slfem/tensor.hpp"

namespace slfem {

/// Tensor-product Gauss rule on the reference square [-1, 1]^2.
/// points_per_dir is 2 (default, exact for the bilinear stiffness on affine
/// elements) or 3 (verification). Weights sum to 4.
struct QuadratureRule {
    std::vector<std::array<double, 2>> points;  // (xi, eta), row-major in eta
    std::vector<double> weights;

    static QuadratureRule gauss(int points_per_dir);
    int size() const { return static_cast<int>(points.size()); }
};

/// Two displacement dofs per node (2*i, 2*i + 1). Dirichlet dofs are
/// eliminated: the reduced system lives on the free dofs only.
class DofMap {
public:
    static DofMap build(const CrackMesh& mesh, std::vector<std::pair<int, double>> constraints);

    int n_dofs() const { return n_dofs_; }
    int n_free() const { return static_cast<int>(free_to_full_.size()); }
    const std::vector<std::pair<int, double>>& constraints() const { return constraints_; }
    /// Free index of a dof, or -1 if constrained.
    int free_index(int dof) const { return full_to_free_[dof]; }
    int full_index(int free_dof) const { return free_to_full_[free_dof]; }

    /// Full-length vector with zeros on free dofs and prescribed values on
    /// constrained ones (the minimal admissible Picard start).
    Eigen::VectorXd lifted_zero() const;
    /// Writes prescribed values into a full-length vector.
    void embed_constraints(Eigen::VectorXd& u) const;
    /// Throws unless u carries the prescribed values.
    void check_embedded(const Eigen::VectorXd& u) const;

private:
    int n_dofs_ = 0;
    std::vector<std::pair<int, double>> constraints_;  // sorted by dof
    std::vector<int> full_to_free_;
    std::vector<int> free_to_full_;
};

/// Benchmark constraints: u2 = -load_c on the top edge, u2 = 0 on the bottom
/// edge, and u1 pinned at the corner (0, 0) to remove the horizontal rigid
/// mode. All other boundaries (including the crack flanks) are traction-free.
DofMap apply_benchmark_bcs(const CrackMesh& mesh, double load_c);

struct ElementMatrix {
    std::array<std::array<double, 8>, 8> k{};
    int clamp_count = 0;
    double max_beta_s = 0.0;
};

/// Q1 element stiffness with the lagged response factor: psi is evaluated at
/// the strain of u_prev per quadrature point, so the matrix is linear in the
/// unknown. Local dof order is (u1, u2) per corner, corners counterclockwise.
ElementMatrix element_stiffness(const ElasticOperator& op, const ModelParams& p,
                                const std::array<std::array<double, 2>, 4>& coords,
                                const std::array<double, 8>& u_prev, const QuadratureRule& rule);

struct AssembledSystem {
    Eigen::SparseMatrix<double> matrix;  // free x free, symmetric positive definite
    Eigen::VectorXd rhs;                 // Dirichlet elimination of constrained columns
    int clamp_count = 0;
    double max_beta_s = 0.0;
};

/// Global lagged-coefficient system. u_prev must embed the Dirichlet values.
/// Body force and boundary traction are zero in the benchmark, so the rhs
/// carries only the constraint elimination terms.
AssembledSystem assemble(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                         const ModelParams& p, const Eigen::VectorXd& u_prev,
                         const QuadratureRule& rule);

struct ResidualEval {
    Eigen::VectorXd vector;  // free dofs
    int clamp_count = 0;
    double max_beta_s = 0.0;
};

/// Nonlinear residual with psi evaluated at u itself (not lagged).
ResidualEval assemble_residual(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                               const ModelParams& p, const Eigen::VectorXd& u,
                               const QuadratureRule& rule);

/// Euclidean norm over free dofs of the nonlinear residual.
double residual_norm(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                     const ModelParams& p, const Eigen::VectorXd& u, const QuadratureRule& rule);

}  // namespace slfem

#endif
