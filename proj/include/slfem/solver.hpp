#ifndef SLFEM_SOLVER_HPP
#define SLFEM_SOLVER_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "slfem/assembly.hpp"

namespace slfem {

struct SolverConfig {
    double tol = 1e-4;        // dual test: increment norm AND residual norm
    int max_iter = 200;
    double relaxation = 1.0;  // omega in (0, 1]
    double linear_tol = 1e-10;
    int quad_order = 2;
    // Halve omega whenever the residual grows; off by default so runs stay
    // reproducible under a fixed parameter set.
    bool halve_relaxation_on_increase = false;

    void validate() const;
};

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    std::vector<double> residual_history;
    std::vector<double> increment_history;
    std::vector<int> clamp_history;
    double max_beta_s_final = 0.0;
};

/// Warm start: the beta = 0 problem. Returns the full displacement vector
/// with Dirichlet values embedded. Throws if the linear solve fails the
/// relative-residual contract.
Eigen::VectorXd solve_linear(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                             const SolverConfig& cfg = {});

/// Lagged-coefficient Picard iteration: start from the linear solution, then
/// repeatedly assemble with psi frozen at the previous iterate, solve, and
/// relax. Stops when both the increment norm and the residual norm fall to
/// cfg.tol. Non-convergence is reported, never thrown.
std::pair<Eigen::VectorXd, SolveReport> solve_picard(const CrackMesh& mesh, const DofMap& dofs,
                                                     const ElasticOperator& op,
                                                     const ModelParams& p,
                                                     const SolverConfig& cfg = {});

}  // namespace slfem

#endif
