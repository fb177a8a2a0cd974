#include <doctest.h>

#include <cmath>
#include <random>

#include "slfem/tensor.hpp"
#include "test_oracles.hpp"

using namespace slfem;

namespace {

std::mt19937 rng(12345);

SymTensor2 random_tensor(double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng)};
}

ElasticOperator random_operator(bool with_fiber) {
    std::uniform_real_distribution<double> pos(0.2, 5.0);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    if (!with_fiber) return ElasticOperator(pos(rng), pos(rng));
    const double a = angle(rng);
    return ElasticOperator(pos(rng), pos(rng), pos(rng),
                           std::array<double, 2>{std::cos(a), std::sin(a)});
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("inner product carries the shear factor") {
    const SymTensor2 a{1.0, 2.0, 3.0};
    const SymTensor2 b{4.0, 5.0, 6.0};
    CHECK(inner(a, b) == doctest::Approx(4.0 + 10.0 + 2.0 * 18.0).epsilon(1e-15));
    CHECK(norm(SymTensor2{}) == 0.0);
    CHECK(norm(a) > 0.0);
}

TEST_CASE("stiffness on the identity, isotropic") {
    const ElasticOperator op(1.0, 1.0);
    const SymTensor2 out = op.apply(SymTensor2::identity());
    CHECK(out.xx == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(out.yy == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(out.xy == 0.0);
}

TEST_CASE("stiffness on the identity with a fiber along x") {
    const ElasticOperator op(1.0, 1.0, 1.0, std::array<double, 2>{1.0, 0.0});
    const SymTensor2 out = op.apply(SymTensor2::identity());
    CHECK(out.xx == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(out.yy == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(out.xy == 0.0);
}

TEST_CASE("zero maps to zero") {
    const ElasticOperator op = random_operator(true);
    const SymTensor2 out = op.apply(SymTensor2{});
    CHECK(out.xx == 0.0);
    CHECK(out.yy == 0.0);
    CHECK(out.xy == 0.0);
    CHECK(op.energy_norm(SymTensor2{}) == 0.0);
}

TEST_CASE("energy seminorm hand values") {
    const ElasticOperator op(1.0, 1.0);
    CHECK(op.energy_norm(SymTensor2::identity()) ==
          doctest::Approx(2.8284271247461903).epsilon(1e-15));
    CHECK(op.energy_norm(SymTensor2{0.0, 0.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ElasticOperator(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ElasticOperator(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ElasticOperator(1.0, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(ElasticOperator(1.0, 1.0, 1.0, std::array<double, 2>{1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("compliance inverts the hand example") {
    const ElasticOperator op(1.0, 1.0);
    const SymTensor2 eps = op.apply_inverse(SymTensor2{4.0, 4.0, 0.0});
    CHECK(eps.xx == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eps.yy == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eps.xy == doctest::Approx(0.0).epsilon(1e-14));
    const SymTensor2 zero = op.apply_inverse(SymTensor2{});
    CHECK(zero.xx == 0.0);
    CHECK(zero.yy == 0.0);
    CHECK(zero.xy == 0.0);
}

TEST_CASE("self-adjointness over random operators") {
    for (int k = 0; k < 1000; ++k) {
        const ElasticOperator op = random_operator(k % 2 == 0);
        const SymTensor2 a = random_tensor(), b = random_tensor();
        const double lhs = inner(a, op.apply(b));
        const double rhs = inner(b, op.apply(a));
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("positive definiteness over random nonzero tensors") {
    for (int k = 0; k < 1000; ++k) {
        const ElasticOperator op = random_operator(k % 3 == 0);
        SymTensor2 a = random_tensor();
        if (norm(a) == 0.0) a.xx = 1.0;
        REQUIRE(inner(a, op.apply(a)) > 0.0);
    }
}

TEST_CASE("linearity") {
    for (int k = 0; k < 200; ++k) {
        const ElasticOperator op = random_operator(true);
        const SymTensor2 a = random_tensor(), b = random_tensor();
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        const double ca = d(rng), cb = d(rng);
        const SymTensor2 lhs = op.apply(ca * a + cb * b);
        const SymTensor2 rhs = ca * op.apply(a) + cb * op.apply(b);
        REQUIRE(norm(lhs - rhs) <= 1e-13 * (1.0 + norm(lhs)));
    }
}

TEST_CASE("compliance round trip both directions against the elimination oracle") {
    for (int k = 0; k < 1000; ++k) {
        const bool fib = k % 2 == 0;
        const ElasticOperator op = random_operator(fib);
        const SymTensor2 a = random_tensor(2.0);

        const SymTensor2 ea = op.apply(a);
        const SymTensor2 round1 = op.apply_inverse(ea);
        REQUIRE(norm(round1 - a) <= 1e-12 * (1.0 + norm(a)));
        const SymTensor2 round2 = op.apply(op.apply_inverse(a));
        REQUIRE(norm(round2 - a) <= 1e-12 * (1.0 + norm(a)));

        // Independent route: Gaussian elimination on the component matrix.
        const auto mat = oracle::stiffness_matrix(op.mu(), op.lambda(), op.gamma(), op.fiber());
        const auto x = oracle::solve3(mat, {a.xx, a.yy, a.xy});
        const SymTensor2 k_oracle{x[0], x[1], x[2]};
        REQUIRE(norm(op.apply_inverse(a) - k_oracle) <= 1e-11 * (1.0 + norm(k_oracle)));
    }
}

TEST_CASE("energy seminorm squared equals the quadratic form") {
    for (int k = 0; k < 200; ++k) {
        const ElasticOperator op = random_operator(true);
        const SymTensor2 a = random_tensor();
        const double s = op.energy_norm(a);
        REQUIRE(std::abs(s * s - inner(a, op.apply(a))) <= 1e-13 * (1.0 + s * s));
    }
}

}  // TEST_SUITE
