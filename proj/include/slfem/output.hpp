#ifndef SLFEM_OUTPUT_HPP
#define SLFEM_OUTPUT_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "slfem/postprocess.hpp"
#include "slfem/solver.hpp"

namespace slfem {

/// Probe CSV, one row per sample ordered tip outward. Numbers are written
/// with 17 significant digits so repeated runs are byte-identical.
void write_probe_csv(const std::string& path, const TipProbe& probe);

/// Legacy ASCII VTK unstructured grid: quad cells, a point vector
/// `displacement`, and per-cell means of the recovered fields.
void write_fields_vtk(const std::string& path, const CrackMesh& mesh, const Eigen::VectorXd& u,
                      const std::vector<FieldSample>& samples, const QuadratureRule& rule);

void write_report(const std::string& path, const SolveReport& report, bool probe_written);

struct SweepRow {
    std::string key;
    std::string value;
    bool converged = false;
    int iterations = 0;
    TrendRow trend;  // ordering flags cover converged runs only
};

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace slfem

#endif
