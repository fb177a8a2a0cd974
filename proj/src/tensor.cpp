#include "slfem/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace slfem {

double inner(const SymTensor2& a, const SymTensor2& b) {
    return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

double norm(const SymTensor2& a) { return std::sqrt(inner(a, a)); }

namespace {

// Component matrix of the stiffness acting on (xx, yy, xy). Not symmetric in
// these coordinates; self-adjointness holds under the weighted inner product.
std::array<std::array<double, 3>, 3> component_matrix(double mu, double lambda, double gamma,
                                                      const std::optional<std::array<double, 2>>& fiber) {
    std::array<std::array<double, 3>, 3> e{};
    e[0] = {2.0 * mu + lambda, lambda, 0.0};
    e[1] = {lambda, 2.0 * mu + lambda, 0.0};
    e[2] = {0.0, 0.0, 2.0 * mu};
    if (fiber) {
        const double m1 = (*fiber)[0], m2 = (*fiber)[1];
        const double mxx = m1 * m1, myy = m2 * m2, mxy = m1 * m2;
        e[0][0] += gamma * mxx * mxx;
        e[0][1] += gamma * mxx * myy;
        e[0][2] += 2.0 * gamma * mxx * mxy;
        e[1][0] += gamma * myy * mxx;
        e[1][1] += gamma * myy * myy;
        e[1][2] += 2.0 * gamma * myy * mxy;
        e[2][0] += gamma * mxy * mxx;
        e[2][1] += gamma * mxy * myy;
        e[2][2] += 2.0 * gamma * mxy * mxy;
    }
    return e;
}

std::array<std::array<double, 3>, 3> invert3(const std::array<std::array<double, 3>, 3>& a) {
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (!std::isfinite(det) || std::abs(det) < 1e-280)
        throw std::runtime_error("ElasticOperator: singular component matrix");
    const double id = 1.0 / det;
    std::array<std::array<double, 3>, 3> inv;
    inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) * id;
    inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) * id;
    inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) * id;
    inv[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) * id;
    inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) * id;
    inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) * id;
    inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) * id;
    inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) * id;
    inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) * id;
    return inv;
}

}  // namespace

ElasticOperator::ElasticOperator(double mu, double lambda, double gamma,
                                 std::optional<std::array<double, 2>> fiber)
    : mu_(mu), lambda_(lambda), gamma_(gamma), fiber_(fiber) {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("ElasticOperator: mu must be > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("ElasticOperator: lambda must be > 0");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("ElasticOperator: gamma must be >= 0");
    if (fiber_) {
        const double len = std::sqrt((*fiber_)[0] * (*fiber_)[0] + (*fiber_)[1] * (*fiber_)[1]);
        if (std::abs(len - 1.0) > 1e-14)
            throw std::invalid_argument("ElasticOperator: fiber direction must be a unit vector");
    }
    inv_ = invert3(component_matrix(mu_, lambda_, gamma_, fiber_));
}

SymTensor2 ElasticOperator::apply(const SymTensor2& eps) const {
    const double tr = eps.trace();
    SymTensor2 out{2.0 * mu_ * eps.xx + lambda_ * tr, 2.0 * mu_ * eps.yy + lambda_ * tr,
                   2.0 * mu_ * eps.xy};
    if (fiber_) {
        const double m1 = (*fiber_)[0], m2 = (*fiber_)[1];
        const SymTensor2 m{m1 * m1, m2 * m2, m1 * m2};
        out += (gamma_ * inner(eps, m)) * m;
    }
    return out;
}

SymTensor2 ElasticOperator::apply_inverse(const SymTensor2& sigma) const {
    return {inv_[0][0] * sigma.xx + inv_[0][1] * sigma.yy + inv_[0][2] * sigma.xy,
            inv_[1][0] * sigma.xx + inv_[1][1] * sigma.yy + inv_[1][2] * sigma.xy,
            inv_[2][0] * sigma.xx + inv_[2][1] * sigma.yy + inv_[2][2] * sigma.xy};
}

double ElasticOperator::energy_norm(const SymTensor2& eps) const {
    const double q = inner(eps, apply(eps));
    if (q < -1e-14)
        throw std::runtime_error("ElasticOperator: negative energy quadratic form");
    return std::sqrt(q < 0.0 ? 0.0 : q);
}

}  // namespace slfem
