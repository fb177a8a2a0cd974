#include "slfem/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slfem {

namespace {

struct ShapeGrads {
    std::array<double, 4> dx{};
    std::array<double, 4> dy{};
    double det_jac = 0.0;
};

// Bilinear shape data at one reference point; corners ordered
// (-1,-1), (1,-1), (1,1), (-1,1) to match the quad connectivity.
ShapeGrads shape_gradients(const std::array<std::array<double, 2>, 4>& coords, double xi,
                           double eta) {
    const std::array<double, 4> dxi = {-0.25 * (1 - eta), 0.25 * (1 - eta), 0.25 * (1 + eta),
                                       -0.25 * (1 + eta)};
    const std::array<double, 4> deta = {-0.25 * (1 - xi), -0.25 * (1 + xi), 0.25 * (1 + xi),
                                        0.25 * (1 - xi)};
    double x_xi = 0, x_eta = 0, y_xi = 0, y_eta = 0;
    for (int a = 0; a < 4; ++a) {
        x_xi += coords[a][0] * dxi[a];
        x_eta += coords[a][0] * deta[a];
        y_xi += coords[a][1] * dxi[a];
        y_eta += coords[a][1] * deta[a];
    }
    ShapeGrads g;
    g.det_jac = x_xi * y_eta - x_eta * y_xi;
    if (!(g.det_jac > 0.0))
        throw std::runtime_error("element_stiffness: non-positive Jacobian");
    const double inv_det = 1.0 / g.det_jac;
    for (int a = 0; a < 4; ++a) {
        g.dx[a] = (y_eta * dxi[a] - y_xi * deta[a]) * inv_det;
        g.dy[a] = (-x_eta * dxi[a] + x_xi * deta[a]) * inv_det;
    }
    return g;
}

SymTensor2 strain_at(const ShapeGrads& g, const std::array<double, 8>& u) {
    SymTensor2 eps;
    for (int a = 0; a < 4; ++a) {
        eps.xx += g.dx[a] * u[2 * a];
        eps.yy += g.dy[a] * u[2 * a + 1];
        eps.xy += 0.5 * (g.dy[a] * u[2 * a] + g.dx[a] * u[2 * a + 1]);
    }
    return eps;
}

// Strain of the local basis function for dof j = 2a + c.
SymTensor2 strain_basis(const ShapeGrads& g, int j) {
    const int a = j / 2;
    if (j % 2 == 0) return {g.dx[a], 0.0, 0.5 * g.dy[a]};
    return {0.0, g.dy[a], 0.5 * g.dx[a]};
}

std::array<std::array<double, 2>, 4> gather_coords(const CrackMesh& mesh, int e) {
    std::array<std::array<double, 2>, 4> coords;
    for (int a = 0; a < 4; ++a) coords[a] = mesh.nodes[mesh.quads[e][a]];
    return coords;
}

std::array<double, 8> gather_local(const std::array<int, 4>& quad, const Eigen::VectorXd& u) {
    std::array<double, 8> local;
    for (int a = 0; a < 4; ++a) {
        local[2 * a] = u[2 * quad[a]];
        local[2 * a + 1] = u[2 * quad[a] + 1];
    }
    return local;
}

}  // namespace

QuadratureRule QuadratureRule::gauss(int points_per_dir) {
    QuadratureRule rule;
    std::vector<double> x, w;
    if (points_per_dir == 2) {
        const double p = 1.0 / std::sqrt(3.0);
        x = {-p, p};
        w = {1.0, 1.0};
    } else if (points_per_dir == 3) {
        const double p = std::sqrt(0.6);
        x = {-p, 0.0, p};
        w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    } else {
        throw std::invalid_argument("QuadratureRule: points_per_dir must be 2 or 3");
    }
    for (size_t iy = 0; iy < x.size(); ++iy)
        for (size_t ix = 0; ix < x.size(); ++ix) {
            rule.points.push_back({x[ix], x[iy]});
            rule.weights.push_back(w[ix] * w[iy]);
        }
    return rule;
}

DofMap DofMap::build(const CrackMesh& mesh, std::vector<std::pair<int, double>> constraints) {
    DofMap map;
    map.n_dofs_ = 2 * mesh.n_nodes();
    std::sort(constraints.begin(), constraints.end());
    std::vector<std::pair<int, double>> unique;
    for (const auto& c : constraints) {
        if (c.first < 0 || c.first >= map.n_dofs_)
            throw std::invalid_argument("DofMap: constraint dof out of range");
        if (!unique.empty() && unique.back().first == c.first) {
            if (unique.back().second != c.second)
                throw std::invalid_argument("DofMap: conflicting constraint values for one dof");
            continue;
        }
        unique.push_back(c);
    }
    map.constraints_ = std::move(unique);
    map.full_to_free_.assign(map.n_dofs_, 0);
    for (const auto& c : map.constraints_) map.full_to_free_[c.first] = -1;
    for (int dof = 0; dof < map.n_dofs_; ++dof) {
        if (map.full_to_free_[dof] == 0) {
            map.full_to_free_[dof] = static_cast<int>(map.free_to_full_.size());
            map.free_to_full_.push_back(dof);
        }
    }
    return map;
}

Eigen::VectorXd DofMap::lifted_zero() const {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n_dofs_);
    embed_constraints(u);
    return u;
}

void DofMap::embed_constraints(Eigen::VectorXd& u) const {
    for (const auto& c : constraints_) u[c.first] = c.second;
}

void DofMap::check_embedded(const Eigen::VectorXd& u) const {
    if (u.size() != n_dofs_) throw std::invalid_argument("DofMap: vector length mismatch");
    for (const auto& c : constraints_)
        if (std::abs(u[c.first] - c.second) > 1e-9 * (1.0 + std::abs(c.second)))
            throw std::invalid_argument("DofMap: vector does not embed the Dirichlet values");
}

DofMap apply_benchmark_bcs(const CrackMesh& mesh, double load_c) {
    if (!(load_c >= 0.0) || !std::isfinite(load_c))
        throw std::invalid_argument("apply_benchmark_bcs: load_c must be >= 0");
    std::vector<std::pair<int, double>> constraints;
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        const double x = mesh.nodes[i][0], y = mesh.nodes[i][1];
        if (std::abs(y - 1.0) <= 1e-12) constraints.emplace_back(2 * i + 1, -load_c);
        if (std::abs(y) <= 1e-12) constraints.emplace_back(2 * i + 1, 0.0);
        if (std::abs(x) <= 1e-12 && std::abs(y) <= 1e-12) constraints.emplace_back(2 * i, 0.0);
    }
    return DofMap::build(mesh, std::move(constraints));
}

ElementMatrix element_stiffness(const ElasticOperator& op, const ModelParams& p,
                                const std::array<std::array<double, 2>, 4>& coords,
                                const std::array<double, 8>& u_prev, const QuadratureRule& rule) {
    ElementMatrix em;
    for (int q = 0; q < rule.size(); ++q) {
        const ShapeGrads g = shape_gradients(coords, rule.points[q][0], rule.points[q][1]);
        const double s = op.energy_norm(strain_at(g, u_prev));
        const ResponseEval r = evaluate_psi(p, s);
        if (r.clamped) ++em.clamp_count;
        em.max_beta_s = std::max(em.max_beta_s, p.beta * s);
        const double factor = rule.weights[q] * g.det_jac * r.psi;
        std::array<SymTensor2, 8> basis;
        for (int j = 0; j < 8; ++j) basis[j] = strain_basis(g, j);
        for (int j = 0; j < 8; ++j) {
            const SymTensor2 ej = op.apply(basis[j]);
            for (int i = 0; i <= j; ++i) em.k[i][j] += factor * inner(ej, basis[i]);
        }
    }
    // Mirror the accumulated upper triangle so symmetry is exact.
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < j; ++i) em.k[j][i] = em.k[i][j];
    return em;
}

AssembledSystem assemble(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                         const ModelParams& p, const Eigen::VectorXd& u_prev,
                         const QuadratureRule& rule) {
    dofs.check_embedded(u_prev);
    AssembledSystem sys;
    sys.rhs = Eigen::VectorXd::Zero(dofs.n_free());
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<size_t>(mesh.n_quads()) * 64);

    for (int e = 0; e < mesh.n_quads(); ++e) {
        const auto& quad = mesh.quads[e];
        const ElementMatrix em =
            element_stiffness(op, p, gather_coords(mesh, e), gather_local(quad, u_prev), rule);
        sys.clamp_count += em.clamp_count;
        sys.max_beta_s = std::max(sys.max_beta_s, em.max_beta_s);

        std::array<int, 8> gdof;
        for (int a = 0; a < 4; ++a) {
            gdof[2 * a] = 2 * quad[a];
            gdof[2 * a + 1] = 2 * quad[a] + 1;
        }
        for (int i = 0; i < 8; ++i) {
            const int fi = dofs.free_index(gdof[i]);
            if (fi < 0) continue;
            for (int j = 0; j < 8; ++j) {
                const int fj = dofs.free_index(gdof[j]);
                if (fj >= 0)
                    triplets.emplace_back(fi, fj, em.k[i][j]);
                else
                    sys.rhs[fi] -= em.k[i][j] * u_prev[gdof[j]];
            }
        }
    }
    sys.matrix.resize(dofs.n_free(), dofs.n_free());
    sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
    return sys;
}

ResidualEval assemble_residual(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                               const ModelParams& p, const Eigen::VectorXd& u,
                               const QuadratureRule& rule) {
    dofs.check_embedded(u);
    ResidualEval out;
    out.vector = Eigen::VectorXd::Zero(dofs.n_free());
    for (int e = 0; e < mesh.n_quads(); ++e) {
        const auto& quad = mesh.quads[e];
        const auto coords = gather_coords(mesh, e);
        const auto local = gather_local(quad, u);
        for (int q = 0; q < rule.size(); ++q) {
            const ShapeGrads g = shape_gradients(coords, rule.points[q][0], rule.points[q][1]);
            const SymTensor2 eps = strain_at(g, local);
            const double s = op.energy_norm(eps);
            const ResponseEval r = evaluate_psi(p, s);
            if (r.clamped) ++out.clamp_count;
            out.max_beta_s = std::max(out.max_beta_s, p.beta * s);
            const SymTensor2 sigma = r.psi * op.apply(eps);
            const double factor = rule.weights[q] * g.det_jac;
            for (int i = 0; i < 8; ++i) {
                const int a = i / 2;
                const int fi = dofs.free_index(2 * quad[a] + i % 2);
                if (fi >= 0) out.vector[fi] += factor * inner(sigma, strain_basis(g, i));
            }
        }
    }
    return out;
}

double residual_norm(const CrackMesh& mesh, const DofMap& dofs, const ElasticOperator& op,
                     const ModelParams& p, const Eigen::VectorXd& u, const QuadratureRule& rule) {
    return assemble_residual(mesh, dofs, op, p, u, rule).vector.norm();
}

}  // namespace slfem
