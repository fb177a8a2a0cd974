#include "slfem/solver.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <stdexcept>

namespace slfem {

namespace {

// Direct sparse LDL^T solve of the reduced SPD system, with one refinement
// pass before the relative-residual contract is enforced.
Eigen::VectorXd solve_reduced(const AssembledSystem& sys, double linear_tol) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(sys.matrix);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("solve_reduced: factorization failed");
    Eigen::VectorXd x = ldlt.solve(sys.rhs);
    if (ldlt.info() != Eigen::Success) throw std::runtime_error("solve_reduced: solve failed");
    const double rhs_norm = sys.rhs.norm();
    if (rhs_norm == 0.0) return Eigen::VectorXd::Zero(sys.rhs.size());
    double rel = (sys.matrix * x - sys.rhs).norm() / rhs_norm;
    if (rel > linear_tol) {
        x += ldlt.solve(sys.rhs - sys.matrix * x);
        rel = (sys.matrix * x - sys.rhs).norm() / rhs_norm;
        if (rel > linear_tol)
            throw std::runtime_error("solve_reduced: relative residual " + std::to_string(rel) +
                                     " above tolerance");
    }
    return x;
}

Eigen::VectorXd embed(const DofMap& dofs, const Eigen::VectorXd& reduced) {
    Eigen::VectorXd u = dofs.lifted_zero();
    for (int k = 0; k < dofs.n_free(); ++k) u[dofs.full_index(k)] = reduced[k];
    return u;
}

Eigen::VectorXd restrict_free(const DofMap& dofs, const Eigen::VectorXd& full) {
    Eigen::VectorXd r(dofs.n_free());
    for (int k = 0; k < dofs.n_free(); ++k) r[k] = full[dofs.full_index(k)];
    return r;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
    if (!(relaxation > 0.0 && relaxation <= 1.0))
        throw std::invalid_argument("SolverConfig: relaxation must be in (0, 1]");
    if (!(linear_tol > 0.0)) throw std::invalid_argument("SolverConfig: linear_tol must be > 0");
    if (quad_order != 2 && quad_order != 3)
        throw std::invalid_argument("SolverConfig: quad_order must be 2 or 3");
}

Eigen::VectorXd solve_linear(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                             const SolverConfig& cfg) {
    cfg.validate();
    const QuadratureRule rule = QuadratureRule::gauss(cfg.quad_order);
    const ModelParams linear{2.0, 0.0};
    const AssembledSystem sys = assemble(mesh, dofs, op, linear, dofs.lifted_zero(), rule);
    return embed(dofs, solve_reduced(sys, cfg.linear_tol));
}

std::pair<Eigen::VectorXd, SolveReport> solve_picard(const CrackMesh& mesh, const DofMap& dofs,
                                                     const ElasticOperator& op,
                                                     const ModelParams& p,
                                                     const SolverConfig& cfg) {
    cfg.validate();
    p.validate();
    const QuadratureRule rule = QuadratureRule::gauss(cfg.quad_order);

    Eigen::VectorXd u = solve_linear(mesh, dofs, op, cfg);
    SolveReport report;
    double omega = cfg.relaxation;

    for (int n = 1; n <= cfg.max_iter; ++n) {
        const AssembledSystem sys = assemble(mesh, dofs, op, p, u, rule);
        const Eigen::VectorXd proposal = embed(dofs, solve_reduced(sys, cfg.linear_tol));
        const Eigen::VectorXd u_next = u + omega * (proposal - u);

        const double increment = (restrict_free(dofs, u_next) - restrict_free(dofs, u)).norm();
        const ResidualEval res = assemble_residual(mesh, dofs, op, p, u_next, rule);
        const double res_norm = res.vector.norm();

        report.iterations = n;
        report.increment_history.push_back(increment);
        report.residual_history.push_back(res_norm);
        report.clamp_history.push_back(res.clamp_count);
        report.max_beta_s_final = res.max_beta_s;

        u = u_next;
        if (increment <= cfg.tol && res_norm <= cfg.tol) {
            report.converged = true;
            break;
        }
        if (cfg.halve_relaxation_on_increase && n >= 2 &&
            res_norm > report.residual_history[n - 2])
            omega *= 0.5;
    }
    return {std::move(u), std::move(report)};
}

}  // namespace slfem
