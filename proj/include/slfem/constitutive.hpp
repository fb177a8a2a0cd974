#ifndef SLFEM_CONSTITUTIVE_HPP
#define SLFEM_CONSTITUTIVE_HPP

#include "slfem/tensor.hpp"

namespace slfem {

/// Model parameters of the strain-limiting response. beta = 0 is the
/// classical linear limit; alpha may be any positive real.
struct ModelParams {
    double alpha = 2.0;
    double beta = 0.5;

    void validate() const;
};

struct ResponseEval {
    double psi = 1.0;
    bool clamped = false;
};

/// Scalar response factor
///
///   psi(s) = (1 - (beta*s)^alpha)^(-1/alpha)
///
/// evaluated at the energy seminorm s. Arguments with beta*s at or beyond the
/// admissibility cap (1 - 1e-8) are evaluated at the cap and flagged; this
/// keeps intermediate Picard iterates evaluable while recording the
/// violation. psi == 1 exactly for beta == 0 or s == 0.
ResponseEval evaluate_psi(const ModelParams& p, double s);

/// One constitutive evaluation at a material point.
struct ConstitutiveEval {
    double s = 0.0;       // energy seminorm of the strain
    double psi = 1.0;     // response factor at s
    SymTensor2 sigma{};   // psi * E[eps]
    double energy = 0.0;  // stored energy density W(eps)
    bool clamped = false;
};

/// Stress (and stored energy) from strain: sigma = psi(s) * E[eps].
ConstitutiveEval stress_from_strain(const ElasticOperator& op, const ModelParams& p,
                                    const SymTensor2& eps);

/// Strain from stress, the algebraic inverse of stress_from_strain:
///
///   eps = K[sigma] / (1 + beta^alpha * t^alpha)^(1/alpha),  t = sqrt(sigma : K[sigma])
///
/// Total for any finite stress; the energy seminorm of the result is
/// bounded by 1/beta.
SymTensor2 strain_from_stress(const ElasticOperator& op, const ModelParams& p,
                              const SymTensor2& sigma);

/// Stored energy density W(eps) = integral_0^s t*psi(t) dt, the potential
/// whose strain gradient is the stress. Closed form for beta == 0 (s^2/2) and
/// alpha == 2; adaptive Gauss-Legendre quadrature otherwise (relative
/// tolerance 1e-10).
double strain_energy_density(const ElasticOperator& op, const ModelParams& p,
                             const SymTensor2& eps);

/// Same integral expressed in the seminorm variable; shared by
/// stress_from_strain and strain_energy_density.
double energy_from_seminorm(const ModelParams& p, double s);

}  // namespace slfem

#endif
