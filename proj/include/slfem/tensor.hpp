#ifndef SLFEM_TENSOR_HPP
#define SLFEM_TENSOR_HPP

#include <array>
#include <optional>

namespace slfem {

/// Symmetric 2x2 tensor (strain or stress). The off-diagonal entry is stored
/// once; the inner product carries the factor-2 shear weighting:
///   <A,B> = A.xx*B.xx + A.yy*B.yy + 2*A.xy*B.xy
struct SymTensor2 {
    double xx = 0.0;
    double yy = 0.0;
    double xy = 0.0;

    static SymTensor2 identity() { return {1.0, 1.0, 0.0}; }

    double trace() const { return xx + yy; }

    SymTensor2 operator+(const SymTensor2& o) const { return {xx + o.xx, yy + o.yy, xy + o.xy}; }
    SymTensor2 operator-(const SymTensor2& o) const { return {xx - o.xx, yy - o.yy, xy - o.xy}; }
    SymTensor2 operator*(double a) const { return {a * xx, a * yy, a * xy}; }
    SymTensor2& operator+=(const SymTensor2& o) {
        xx += o.xx;
        yy += o.yy;
        xy += o.xy;
        return *this;
    }
};

inline SymTensor2 operator*(double a, const SymTensor2& t) { return t * a; }

double inner(const SymTensor2& a, const SymTensor2& b);
double norm(const SymTensor2& a);

/// Fourth-order stiffness acting on SymTensor2:
///
///   stress = 2*mu*eps + lambda*tr(eps)*I + gamma*(eps:M)*M,   M = m (x) m
///
/// The fiber direction m is optional; without it the gamma term is absent and
/// the material is isotropic. The operator is self-adjoint and positive
/// definite under the weighted inner product above. Its inverse (the
/// compliance) is obtained by inverting the 3x3 component matrix once at
/// construction and caching it.
class ElasticOperator {
public:
    ElasticOperator(double mu, double lambda, double gamma = 0.0,
                    std::optional<std::array<double, 2>> fiber = std::nullopt);

    double mu() const { return mu_; }
    double lambda() const { return lambda_; }
    double gamma() const { return gamma_; }
    const std::optional<std::array<double, 2>>& fiber() const { return fiber_; }

    /// Linear stress from strain (the operator itself).
    SymTensor2 apply(const SymTensor2& eps) const;

    /// Compliance: strain from stress, apply(apply_inverse(s)) == s.
    SymTensor2 apply_inverse(const SymTensor2& sigma) const;

    /// Energy seminorm sqrt(eps : apply(eps)). Zero iff eps == 0.
    /// Throws if the quadratic form comes out negative beyond roundoff.
    double energy_norm(const SymTensor2& eps) const;

private:
    double mu_;
    double lambda_;
    double gamma_;
    std::optional<std::array<double, 2>> fiber_;
    std::array<std::array<double, 3>, 3> inv_;  // cached compliance components
};

}  // namespace slfem

#endif
