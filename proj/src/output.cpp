#include "slfem/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace slfem {

namespace {

// Fixed 17-significant-digit scientific formatting, locale-independent.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_probe_csv(const std::string& path, const TipProbe& probe) {
    std::ofstream out = open_or_throw(path);
    out << "x,y,sigma_xx,sigma_yy,sigma_xy,eps_xx,eps_yy,eps_xy,s,psi,W,W_half\n";
    for (const auto& fs : probe.samples) {
        out << num(fs.x) << ',' << num(fs.y) << ',' << num(fs.sigma.xx) << ',' << num(fs.sigma.yy)
            << ',' << num(fs.sigma.xy) << ',' << num(fs.eps.xx) << ',' << num(fs.eps.yy) << ','
            << num(fs.eps.xy) << ',' << num(fs.s) << ',' << num(fs.psi) << ',' << num(fs.energy)
            << ',' << num(fs.energy_half) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_fields_vtk(const std::string& path, const CrackMesh& mesh, const Eigen::VectorXd& u,
                      const std::vector<FieldSample>& samples, const QuadratureRule& rule) {
    if (u.size() != 2 * mesh.n_nodes())
        throw std::invalid_argument("write_fields_vtk: displacement length mismatch");
    if (samples.size() != static_cast<size_t>(mesh.n_quads()) * rule.size())
        throw std::invalid_argument("write_fields_vtk: sample count mismatch");

    // Per-cell means over the quadrature points.
    struct CellMean {
        double sxx = 0, syy = 0, sxy = 0, exx = 0, eyy = 0, exy = 0, s = 0, psi = 0, energy = 0;
    };
    std::vector<CellMean> cells(mesh.n_quads());
    for (const auto& fs : samples) {
        CellMean& c = cells[fs.element];
        c.sxx += fs.sigma.xx;
        c.syy += fs.sigma.yy;
        c.sxy += fs.sigma.xy;
        c.exx += fs.eps.xx;
        c.eyy += fs.eps.yy;
        c.exy += fs.eps.xy;
        c.s += fs.s;
        c.psi += fs.psi;
        c.energy += fs.energy;
    }
    const double inv_q = 1.0 / rule.size();

    std::ofstream out = open_or_throw(path);
    out << "# vtk DataFile Version 3.0\n";
    out << "slfem fields\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << mesh.n_nodes() << " double\n";
    for (const auto& node : mesh.nodes)
        out << num(node[0]) << ' ' << num(node[1]) << " 0.0000000000000000e+00\n";
    out << "CELLS " << mesh.n_quads() << ' ' << mesh.n_quads() * 5 << '\n';
    for (const auto& q : mesh.quads)
        out << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
    out << "CELL_TYPES " << mesh.n_quads() << '\n';
    for (int e = 0; e < mesh.n_quads(); ++e) out << "9\n";  // VTK_QUAD

    out << "POINT_DATA " << mesh.n_nodes() << '\n';
    out << "VECTORS displacement double\n";
    for (int i = 0; i < mesh.n_nodes(); ++i)
        out << num(u[2 * i]) << ' ' << num(u[2 * i + 1]) << " 0.0000000000000000e+00\n";

    out << "CELL_DATA " << mesh.n_quads() << '\n';
    const auto scalar = [&](const char* name, auto pick) {
        out << "SCALARS " << name << " double 1\n";
        out << "LOOKUP_TABLE default\n";
        for (const auto& c : cells) out << num(pick(c) * inv_q) << '\n';
    };
    scalar("sigma_xx", [](const CellMean& c) { return c.sxx; });
    scalar("sigma_yy", [](const CellMean& c) { return c.syy; });
    scalar("sigma_xy", [](const CellMean& c) { return c.sxy; });
    scalar("eps_xx", [](const CellMean& c) { return c.exx; });
    scalar("eps_yy", [](const CellMean& c) { return c.eyy; });
    scalar("eps_xy", [](const CellMean& c) { return c.exy; });
    scalar("s", [](const CellMean& c) { return c.s; });
    scalar("psi", [](const CellMean& c) { return c.psi; });
    scalar("W", [](const CellMean& c) { return c.energy; });
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_report(const std::string& path, const SolveReport& report, bool probe_written) {
    std::ofstream out = open_or_throw(path);
    out << "converged: " << (report.converged ? "true" : "false") << '\n';
    out << "iterations: " << report.iterations << '\n';
    out << "max_beta_s: " << num(report.max_beta_s_final) << '\n';
    out << "final_clamp_count: "
        << (report.clamp_history.empty() ? 0 : report.clamp_history.back()) << '\n';
    out << "tip_probe: " << (probe_written ? "written" : "no tip probe") << '\n';
    out << "residual_history:";
    for (double r : report.residual_history) out << ' ' << num(r);
    out << '\n';
    out << "increment_history:";
    for (double r : report.increment_history) out << ' ' << num(r);
    out << '\n';
    out << "clamp_history:";
    for (int c : report.clamp_history) out << ' ' << c;
    out << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_or_throw(path);
    out << "key,value,converged,iterations,tip_abs_sigma_yy,tip_abs_eps_yy,tip_W,tip_W_half,"
           "cmp_sigma,cmp_eps,cmp_W\n";
    for (const auto& row : rows) {
        out << row.key << ',' << row.value << ',' << (row.converged ? "true" : "false") << ','
            << row.iterations << ',' << num(row.trend.tip_abs_sigma_yy) << ','
            << num(row.trend.tip_abs_eps_yy) << ',' << num(row.trend.tip_energy) << ','
            << num(row.trend.tip_energy_half) << ',' << row.trend.cmp_sigma << ','
            << row.trend.cmp_eps << ',' << row.trend.cmp_energy << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace slfem
