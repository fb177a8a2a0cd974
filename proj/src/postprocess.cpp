#include "slfem/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slfem {

namespace {

double shape(int a, double xi, double eta) {
    switch (a) {
        case 0: return 0.25 * (1 - xi) * (1 - eta);
        case 1: return 0.25 * (1 + xi) * (1 - eta);
        case 2: return 0.25 * (1 + xi) * (1 + eta);
        default: return 0.25 * (1 - xi) * (1 + eta);
    }
}

}  // namespace

std::vector<FieldSample> recover_fields(const CrackMesh& mesh, const ElasticOperator& op,
                                        const ModelParams& p, const Eigen::VectorXd& u,
                                        const QuadratureRule& rule) {
    if (u.size() != 2 * mesh.n_nodes())
        throw std::invalid_argument("recover_fields: displacement length mismatch");
    std::vector<FieldSample> samples;
    samples.reserve(static_cast<size_t>(mesh.n_quads()) * rule.size());

    for (int e = 0; e < mesh.n_quads(); ++e) {
        const auto& quad = mesh.quads[e];
        std::array<std::array<double, 2>, 4> coords;
        std::array<double, 8> local;
        for (int a = 0; a < 4; ++a) {
            coords[a] = mesh.nodes[quad[a]];
            local[2 * a] = u[2 * quad[a]];
            local[2 * a + 1] = u[2 * quad[a] + 1];
        }
        for (int q = 0; q < rule.size(); ++q) {
            const double xi = rule.points[q][0], eta = rule.points[q][1];
            // Strain via the same shape-function gradients the assembly uses.
            const std::array<double, 4> dxi = {-0.25 * (1 - eta), 0.25 * (1 - eta),
                                               0.25 * (1 + eta), -0.25 * (1 + eta)};
            const std::array<double, 4> deta = {-0.25 * (1 - xi), -0.25 * (1 + xi),
                                                0.25 * (1 + xi), 0.25 * (1 - xi)};
            double x_xi = 0, x_eta = 0, y_xi = 0, y_eta = 0;
            for (int a = 0; a < 4; ++a) {
                x_xi += coords[a][0] * dxi[a];
                x_eta += coords[a][0] * deta[a];
                y_xi += coords[a][1] * dxi[a];
                y_eta += coords[a][1] * deta[a];
            }
            const double det = x_xi * y_eta - x_eta * y_xi;
            if (!(det > 0.0)) throw std::runtime_error("recover_fields: non-positive Jacobian");
            SymTensor2 eps;
            for (int a = 0; a < 4; ++a) {
                const double dx = (y_eta * dxi[a] - y_xi * deta[a]) / det;
                const double dy = (-x_eta * dxi[a] + x_xi * deta[a]) / det;
                eps.xx += dx * local[2 * a];
                eps.yy += dy * local[2 * a + 1];
                eps.xy += 0.5 * (dy * local[2 * a] + dx * local[2 * a + 1]);
            }
            const ConstitutiveEval ce = stress_from_strain(op, p, eps);

            FieldSample fs;
            for (int a = 0; a < 4; ++a) {
                fs.x += shape(a, xi, eta) * coords[a][0];
                fs.y += shape(a, xi, eta) * coords[a][1];
            }
            fs.eps = eps;
            fs.sigma = ce.sigma;
            fs.s = ce.s;
            fs.psi = ce.psi;
            fs.energy = ce.energy;
            fs.energy_half = 0.5 * inner(ce.sigma, eps);
            fs.element = e;
            fs.qpoint = q;
            samples.push_back(fs);
        }
    }
    return samples;
}

TipProbe extract_tip_probe(const std::vector<FieldSample>& samples, const CrackMesh& mesh,
                           ProbeSide side) {
    if (!mesh.cracked)
        throw std::invalid_argument("extract_tip_probe: mesh has no crack tip");
    const int n = mesh.n_div;
    const int half = n / 2;
    // Element row adjacent to the seam, columns ahead of the tip.
    const int row = (side == ProbeSide::Below) ? half - 1 : half;

    TipProbe probe;
    for (int col = 0; col < half; ++col) {
        const int e = row * n + col;
        // Of this element's samples, keep the quadrature row nearest the seam.
        std::vector<FieldSample> in_element;
        for (const auto& fs : samples)
            if (fs.element == e) in_element.push_back(fs);
        if (in_element.empty()) continue;
        double y_pick = in_element.front().y;
        for (const auto& fs : in_element)
            y_pick = (side == ProbeSide::Below) ? std::max(y_pick, fs.y) : std::min(y_pick, fs.y);
        for (const auto& fs : in_element)
            if (std::abs(fs.y - y_pick) <= 1e-12) probe.samples.push_back(fs);
    }
    if (probe.samples.empty()) throw std::runtime_error("extract_tip_probe: no probe samples");
    std::sort(probe.samples.begin(), probe.samples.end(),
              [](const FieldSample& a, const FieldSample& b) { return a.x > b.x; });

    double best = std::numeric_limits<double>::infinity();
    for (const auto& fs : probe.samples) {
        const double d = std::hypot(fs.x - 0.5, fs.y - 0.5);
        if (d < best) {
            best = d;
            probe.tip_value = fs;
        }
    }
    return probe;
}

std::vector<TrendRow> trend_table(const std::vector<std::pair<std::string, TipProbe>>& runs) {
    if (runs.size() < 2) throw std::invalid_argument("trend_table: need at least 2 runs");
    std::vector<TrendRow> rows;
    rows.reserve(runs.size());
    const auto sign_of = [](double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); };
    for (const auto& [label, probe] : runs) {
        TrendRow row;
        row.label = label;
        row.tip_abs_sigma_yy = std::abs(probe.tip_value.sigma.yy);
        row.tip_abs_eps_yy = std::abs(probe.tip_value.eps.yy);
        row.tip_energy = probe.tip_value.energy;
        row.tip_energy_half = probe.tip_value.energy_half;
        if (!rows.empty()) {
            const TrendRow& prev = rows.back();
            row.cmp_sigma = sign_of(row.tip_abs_sigma_yy - prev.tip_abs_sigma_yy);
            row.cmp_eps = sign_of(row.tip_abs_eps_yy - prev.tip_abs_eps_yy);
            row.cmp_energy = sign_of(row.tip_energy - prev.tip_energy);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace slfem
