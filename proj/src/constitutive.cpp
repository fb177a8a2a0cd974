#include "slfem/constitutive.hpp"

#include <cmath>
#include <stdexcept>

namespace slfem {

namespace {

constexpr double kCap = 1.0 - 1e-8;  // admissibility cap on beta*s

bool finite(const SymTensor2& t) {
    return std::isfinite(t.xx) && std::isfinite(t.yy) && std::isfinite(t.xy);
}

// 7-point Gauss-Legendre on [-1, 1].
constexpr int kGlN = 7;
constexpr double kGlX[kGlN] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                               0.0,
                               0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
constexpr double kGlW[kGlN] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                               0.4179591836734694,
                               0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

template <class F>
double gl7(const F& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double acc = 0.0;
    for (int i = 0; i < kGlN; ++i) acc += kGlW[i] * f(c + h * kGlX[i]);
    return h * acc;
}

template <class F>
double adaptive_gl(const F& f, double a, double b, double rel_tol, double scale, int depth) {
    if (depth > 60) throw std::runtime_error("strain_energy_density: quadrature did not converge");
    const double m = 0.5 * (a + b);
    const double whole = gl7(f, a, b);
    const double halves = gl7(f, a, m) + gl7(f, m, b);
    if (std::abs(halves - whole) <= rel_tol * std::max(scale, std::abs(halves))) return halves;
    // Halve the budget per level so the leaf errors sum to the requested one.
    return adaptive_gl(f, a, m, 0.5 * rel_tol, scale, depth + 1) +
           adaptive_gl(f, m, b, 0.5 * rel_tol, scale, depth + 1);
}

}  // namespace

void ModelParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("ModelParams: alpha must be > 0");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("ModelParams: beta must be >= 0");
}

ResponseEval evaluate_psi(const ModelParams& p, double s) {
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("evaluate_psi: s must be finite and >= 0");
    if (p.beta == 0.0 || s == 0.0) return {1.0, false};
    double u = p.beta * s;
    bool clamped = false;
    if (u >= kCap) {
        u = kCap;
        clamped = true;
    }
    const double psi = std::pow(1.0 - std::pow(u, p.alpha), -1.0 / p.alpha);
    return {psi, clamped};
}

double energy_from_seminorm(const ModelParams& p, double s) {
    if (p.beta == 0.0) return 0.5 * s * s;
    // Integrate only up to the admissible part of [0, s].
    const double s_eff = std::min(s, kCap / p.beta);
    if (s_eff == 0.0) return 0.0;
    if (p.alpha == 2.0) {
        const double u = p.beta * s_eff;
        return (1.0 - std::sqrt(1.0 - u * u)) / (p.beta * p.beta);
    }
    const auto integrand = [&](double t) { return t * evaluate_psi(p, t).psi; };
    // Linear-limit value as the error scale floor; the integral is >= s^2/2.
    return adaptive_gl(integrand, 0.0, s_eff, 1e-10, 0.5 * s_eff * s_eff, 0);
}

ConstitutiveEval stress_from_strain(const ElasticOperator& op, const ModelParams& p,
                                    const SymTensor2& eps) {
    p.validate();
    if (!finite(eps)) throw std::invalid_argument("stress_from_strain: non-finite strain");
    ConstitutiveEval out;
    out.s = op.energy_norm(eps);
    const ResponseEval r = evaluate_psi(p, out.s);
    out.psi = r.psi;
    out.clamped = r.clamped;
    out.sigma = r.psi * op.apply(eps);
    out.energy = energy_from_seminorm(p, out.s);
    return out;
}

SymTensor2 strain_from_stress(const ElasticOperator& op, const ModelParams& p,
                              const SymTensor2& sigma) {
    p.validate();
    if (!finite(sigma)) throw std::invalid_argument("strain_from_stress: non-finite stress");
    const SymTensor2 k = op.apply_inverse(sigma);
    if (p.beta == 0.0) return k;
    const double q = inner(sigma, k);
    const double t = std::sqrt(q < 0.0 ? 0.0 : q);
    const double w = p.beta * t;
    // (1 + w^alpha)^(1/alpha), rearranged for w > 1 so w^alpha cannot overflow.
    double denom;
    if (w <= 1.0)
        denom = std::pow(1.0 + std::pow(w, p.alpha), 1.0 / p.alpha);
    else
        denom = w * std::exp(std::log1p(std::pow(w, -p.alpha)) / p.alpha);
    return k * (1.0 / denom);
}

double strain_energy_density(const ElasticOperator& op, const ModelParams& p,
                             const SymTensor2& eps) {
    p.validate();
    if (!finite(eps)) throw std::invalid_argument("strain_energy_density: non-finite strain");
    return energy_from_seminorm(p, op.energy_norm(eps));
}

}  // namespace slfem
