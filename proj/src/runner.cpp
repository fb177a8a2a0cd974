#include "slfem/runner.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>

#include "slfem/solver.hpp"

namespace slfem {

namespace {

ElasticOperator make_operator(const RunConfig& cfg) {
    std::optional<std::array<double, 2>> fiber;
    if (cfg.fiber == FiberOrientation::X) fiber = std::array<double, 2>{1.0, 0.0};
    if (cfg.fiber == FiberOrientation::Y) fiber = std::array<double, 2>{0.0, 1.0};
    return ElasticOperator(cfg.mu, cfg.lambda, cfg.gamma, fiber);
}

SolverConfig make_solver_config(const RunConfig& cfg) {
    SolverConfig sc;
    sc.tol = cfg.tol;
    sc.max_iter = cfg.max_iter;
    sc.relaxation = cfg.relaxation;
    sc.quad_order = cfg.quad_order;
    return sc;
}

std::string sanitize(const std::string& value) {
    std::string out = value;
    for (char& c : out)
        if (c == '.' || c == '-' || c == '+') c = '_';
    return out;
}

}  // namespace

RunResult run_single(const RunConfig& cfg) {
    const CrackMesh mesh =
        cfg.cracked ? build_cracked_square(cfg.n_div) : build_uncracked_square(cfg.n_div);
    const ElasticOperator op = make_operator(cfg);
    const ModelParams params{cfg.alpha, cfg.beta};
    const DofMap dofs = apply_benchmark_bcs(mesh, cfg.load_c);
    const SolverConfig sc = make_solver_config(cfg);

    RunResult result;
    auto [u, report] = solve_picard(mesh, dofs, op, params, sc);
    result.report = report;

    const QuadratureRule rule = QuadratureRule::gauss(cfg.quad_order);
    const std::vector<FieldSample> samples = recover_fields(mesh, op, params, u, rule);
    if (cfg.cracked) {
        result.probe = extract_tip_probe(samples, mesh);
        write_probe_csv(cfg.output_prefix + "_probe.csv", *result.probe);
    }
    write_fields_vtk(cfg.output_prefix + "_fields.vtk", mesh, u, samples, rule);
    write_report(cfg.output_prefix + "_report.txt", report, result.probe.has_value());

    result.exit_status = report.converged ? 0 : 1;
    return result;
}

int run_sweep(const RunConfig& base, const std::string& key,
              const std::vector<std::string>& values) {
    if (values.size() < 2) throw std::invalid_argument("run_sweep: need at least 2 values");

    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, TipProbe>> converged_probes;
    bool all_converged = true;

    for (const std::string& value : values) {
        RunConfig cfg = base;
        if (key == "alpha") {
            cfg.alpha = std::stod(value);
            if (!(cfg.alpha > 0.0)) throw std::invalid_argument("sweep value: alpha must be > 0");
        } else if (key == "beta") {
            cfg.beta = std::stod(value);
            if (!(cfg.beta >= 0.0)) throw std::invalid_argument("sweep value: beta must be >= 0");
        } else if (key == "load_c") {
            cfg.load_c = std::stod(value);
            if (!(cfg.load_c >= 0.0))
                throw std::invalid_argument("sweep value: load_c must be >= 0");
        } else if (key == "fiber") {
            if (value == "none")
                cfg.fiber = FiberOrientation::None;
            else if (value == "x")
                cfg.fiber = FiberOrientation::X;
            else if (value == "y")
                cfg.fiber = FiberOrientation::Y;
            else
                throw std::invalid_argument("sweep value: fiber must be none, x, or y");
        } else {
            throw std::invalid_argument("run_sweep: key must be alpha, beta, load_c, or fiber");
        }
        cfg.output_prefix = base.output_prefix + "_" + key + "_" + sanitize(value);

        const RunResult run = run_single(cfg);
        SweepRow row;
        row.key = key;
        row.value = value;
        row.converged = run.report.converged;
        row.iterations = run.report.iterations;
        rows.push_back(row);
        if (run.report.converged && run.probe)
            converged_probes.emplace_back(value, *run.probe);
        else
            all_converged = false;
    }

    if (converged_probes.size() >= 2) {
        const std::vector<TrendRow> trends = trend_table(converged_probes);
        size_t t = 0;
        for (auto& row : rows)
            if (row.converged && t < trends.size()) row.trend = trends[t++];
    }
    write_sweep_csv(base.output_prefix + "_sweep.csv", rows);
    return all_converged ? 0 : 1;
}

namespace {

bool check(const char* name, bool ok) {
    std::printf("selftest: %-42s %s\n", name, ok ? "ok" : "FAILED");
    return ok;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int run_selftest() {
    bool all = true;
    std::mt19937 rng(20240511);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.2, 5.0);
    const auto rand_tensor = [&] { return SymTensor2{unit(rng), unit(rng), unit(rng)}; };
    const auto rand_op = [&] {
        const double angle = 3.14159265358979 * unit(rng);
        return ElasticOperator(pos(rng), pos(rng), pos(rng),
                               std::array<double, 2>{std::cos(angle), std::sin(angle)});
    };

    {
        bool ok = true;
        for (int k = 0; k < 200 && ok; ++k) {
            const ElasticOperator op = rand_op();
            const SymTensor2 a = rand_tensor(), b = rand_tensor();
            const double lhs = inner(a, op.apply(b)), rhs = inner(b, op.apply(a));
            ok = std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs));
        }
        all &= check("stiffness self-adjointness", ok);
    }
    {
        bool ok = true;
        for (int k = 0; k < 200 && ok; ++k) {
            const ElasticOperator op = rand_op();
            const SymTensor2 a = rand_tensor();
            const SymTensor2 round = op.apply_inverse(op.apply(a));
            ok = norm(round - a) <= 1e-12 * (1.0 + norm(a));
        }
        all &= check("compliance round trip", ok);
    }
    {
        bool ok = true;
        const ModelParams p{2.0, 0.5};
        for (int k = 0; k < 200 && ok; ++k) {
            const ElasticOperator op = rand_op();
            SymTensor2 eps = rand_tensor();
            const double s = op.energy_norm(eps);
            if (p.beta * s > 0.95) eps = eps * (0.95 / (p.beta * s));
            const SymTensor2 back = strain_from_stress(op, p, stress_from_strain(op, p, eps).sigma);
            ok = norm(back - eps) <= 1e-12 * (1.0 + norm(eps));
        }
        all &= check("constitutive inverse pair", ok);
    }
    {
        const ModelParams p{2.0, 0.5};
        all &= check("response factor value",
                     near(evaluate_psi(p, 1.0).psi, 1.1547005383792515, 1e-14));
        const ElasticOperator iso(1.0, 1.0);
        const SymTensor2 eps = SymTensor2::identity() * std::sqrt(1.0 / 8.0);  // s = 1
        all &= check("energy density closed form",
                     near(strain_energy_density(iso, p, eps), 0.5358983848622456, 1e-12));
    }
    {
        const CrackMesh mesh = build_cracked_square(8);
        double area = 0.0;
        for (int e = 0; e < mesh.n_quads(); ++e) {
            const auto& q = mesh.quads[e];
            const auto& n = mesh.nodes;
            area += 0.5 * std::abs((n[q[2]][0] - n[q[0]][0]) * (n[q[3]][1] - n[q[1]][1]) -
                                   (n[q[3]][0] - n[q[1]][0]) * (n[q[2]][1] - n[q[0]][1]));
        }
        all &= check("cracked mesh bookkeeping",
                     mesh.n_nodes() == 81 + 4 && mesh.n_quads() == 64 && near(area, 1.0, 1e-12));
    }
    {
        const CrackMesh mesh = build_uncracked_square(4);
        const ElasticOperator op(1.0, 1.0);
        const double c = 0.1;
        const DofMap dofs = apply_benchmark_bcs(mesh, c);
        const Eigen::VectorXd u = solve_linear(mesh, dofs, op);
        const double a = op.lambda() * c / (2.0 * op.mu() + op.lambda());
        double err = 0.0;
        for (int i = 0; i < mesh.n_nodes(); ++i) {
            err = std::max(err, std::abs(u[2 * i] - a * mesh.nodes[i][0]));
            err = std::max(err, std::abs(u[2 * i + 1] + c * mesh.nodes[i][1]));
        }
        all &= check("linear patch test", err <= 1e-10);
    }
    std::printf("selftest: %s\n", all ? "all checks passed" : "FAILURES detected");
    return all ? 0 : 1;
}

}  // namespace slfem
