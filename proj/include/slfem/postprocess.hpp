#ifndef SLFEM_POSTPROCESS_HPP
#define SLFEM_POSTPROCESS_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "slfem/assembly.hpp"

namespace slfem {

/// One quadrature-point record of the recovered fields. Fields live at the
/// solver's native points; no nodal averaging is applied, so the tip
/// concentration is reported unsmoothed.
struct FieldSample {
    double x = 0.0, y = 0.0;
    SymTensor2 eps{};
    SymTensor2 sigma{};
    double s = 0.0;
    double psi = 1.0;
    double energy = 0.0;       // W(eps), the stored-energy potential
    double energy_half = 0.0;  // (1/2) sigma : eps
    int element = -1;
    int qpoint = -1;
};

std::vector<FieldSample> recover_fields(const CrackMesh& mesh, const ElasticOperator& op,
                                        const ModelParams& p, const Eigen::VectorXd& u,
                                        const QuadratureRule& rule);

enum class ProbeSide { Below, Above };

/// Samples along the line ahead of the tip (x <= 0.5 on the quadrature row
/// adjacent to y = 0.5), ordered tip outward (x descending). tip_value is
/// the probe sample nearest to (0.5, 0.5).
struct TipProbe {
    std::vector<FieldSample> samples;
    FieldSample tip_value{};
};

/// Requires a cracked mesh; ProbeSide picks the row below (default) or above
/// the seam.
TipProbe extract_tip_probe(const std::vector<FieldSample>& samples, const CrackMesh& mesh,
                           ProbeSide side = ProbeSide::Below);

/// Crack-tip scalar summary of one run plus ordering flags against the
/// previous row (-1 / 0 / +1 per quantity; 0 for the first row).
struct TrendRow {
    std::string label;
    double tip_abs_sigma_yy = 0.0;
    double tip_abs_eps_yy = 0.0;
    double tip_energy = 0.0;
    double tip_energy_half = 0.0;
    int cmp_sigma = 0;
    int cmp_eps = 0;
    int cmp_energy = 0;
};

std::vector<TrendRow> trend_table(const std::vector<std::pair<std::string, TipProbe>>& runs);

}  // namespace slfem

#endif
