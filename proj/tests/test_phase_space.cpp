#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dapg/phase_space.hpp"
#include "dapg/reference.hpp"
#include "dapg/tomography.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace dapg;
using test_util::max_abs;

namespace {

constexpr double kTol = 1e-12;

struct Fixture {
    Geometry g;
    LineOperatorSet ops;
    explicit Fixture(int d) : g(make_prime_dim(d)), ops(g) {}
};

}  // namespace

TEST_CASE("quasi-distribution of basic operators") {
    Fixture f(3);

    // maximally mixed state maps to the flat distribution
    const Operator mixed = Operator::Identity(3, 3) / 3.0;
    const QuasiDistribution v = quasi_distribution(mixed, f.ops);
    for (int j = 0; j < 9; ++j) CHECK(std::abs(v.values(j) - 1.0 / 3.0) < kTol);

    // a point projector maps to its incidence indicator
    for (int pi = 0; pi < f.g.num_points(); ++pi) {
        const Point a = f.g.point_at(pi);
        const QuasiDistribution va = quasi_distribution(f.ops.point_op(a), f.ops);
        for (int j = 0; j < 9; ++j) {
            CHECK(std::abs(va.values(j) - f.g.incidence(a, f.g.line_at(j))) < kTol);
        }
    }

    // a line operator maps to d times its own indicator
    const QuasiDistribution vp = quasi_distribution(f.ops.line_op(4), f.ops);
    for (int j = 0; j < 9; ++j) {
        CHECK(std::abs(vp.values(j) - (j == 4 ? 3.0 : 0.0)) < kTol);
    }

    CHECK_THROWS_AS(quasi_distribution(Operator::Identity(4, 4), f.ops),
                    std::invalid_argument);
}

TEST_CASE("quasi-distribution traces are real for Hermitian input") {
    Fixture f(5);
    std::mt19937_64 eng(11);
    const Operator h = test_util::random_hermitian(5, eng);
    for (int j = 0; j < f.g.num_lines(); ++j) {
        const cplx t = trace_product(h, f.ops.line_op(j));
        CHECK(std::abs(t.imag()) < kTol);
    }
}

TEST_CASE("normalization: (1/d) sum_j V(j) = tr rho") {
    Fixture f(5);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Operator rho = random_density_matrix(5, seed);
        const QuasiDistribution v = quasi_distribution(rho, f.ops);
        CHECK(std::abs(v.values.sum() / 5.0 - 1.0) < kTol);
    }
}

TEST_CASE("reconstruct_operator inverts quasi_distribution") {
    Fixture f(3);

    QuasiDistribution flat{3, Eigen::VectorXd::Constant(9, 1.0 / 3.0)};
    CHECK(max_abs(reconstruct_operator(flat, f.ops) - Operator::Identity(3, 3) / 3.0) < kTol);

    // the incidence indicator of a point back-projects to its projector
    const Point a{0, 2};
    QuasiDistribution indicator{3, Eigen::VectorXd(9)};
    for (int j = 0; j < 9; ++j) indicator.values(j) = f.g.incidence(a, f.g.line_at(j));
    CHECK(max_abs(reconstruct_operator(indicator, f.ops) - f.ops.point_op(a)) < kTol);

    QuasiDistribution wrong{3, Eigen::VectorXd::Zero(8)};
    CHECK_THROWS_AS(reconstruct_operator(wrong, f.ops), std::invalid_argument);
}

TEST_CASE("round trip on random Hermitian and general operators") {
    std::mt19937_64 eng(2024);
    for (int d : {3, 5}) {
        Fixture f(d);
        for (int trial = 0; trial < 20; ++trial) {
            const Operator h = test_util::random_hermitian(d, eng);
            CHECK(max_abs(reconstruct_operator(quasi_distribution(h, f.ops), f.ops) - h) < kTol);

            // general operators split into Hermitian parts, each carried by
            // the real-valued distribution; linearity rebuilds the original
            const Operator b = test_util::random_matrix(d, eng);
            const Operator hr = 0.5 * (b + b.adjoint());
            const Operator hi = (b - b.adjoint()) / cplx(0.0, 2.0);
            const Operator rebuilt =
                reconstruct_operator(quasi_distribution(hr, f.ops), f.ops) +
                cplx(0.0, 1.0) * reconstruct_operator(quasi_distribution(hi, f.ops), f.ops);
            CHECK(max_abs(rebuilt - b) < kTol);
        }
    }
}

TEST_CASE("pair_expectation") {
    Fixture f(3);
    const Operator a = f.ops.point_op(Point{1, 1});
    const QuasiDistribution va = quasi_distribution(a, f.ops);
    CHECK(std::abs(pair_expectation(va, va) - 1.0) < kTol);  // tr A^2 = 1

    const Operator mixed = Operator::Identity(3, 3) / 3.0;
    const QuasiDistribution vm = quasi_distribution(mixed, f.ops);
    std::mt19937_64 eng(5);
    const Operator h = test_util::random_hermitian(3, eng);
    const QuasiDistribution vh = quasi_distribution(h, f.ops);
    CHECK(std::abs(pair_expectation(vm, vh) - h.trace().real() / 3.0) < kTol);

    QuasiDistribution other{5, Eigen::VectorXd::Zero(25)};
    CHECK_THROWS_AS(pair_expectation(va, other), std::invalid_argument);
}

TEST_CASE("pair_expectation matches the direct trace at d = 5") {
    Fixture f(5);
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Operator rho = random_density_matrix(5, 100 + trial);
        const Operator b = test_util::random_hermitian(5, eng);
        const double via_pairing = pair_expectation(quasi_distribution(rho, f.ops),
                                                    quasi_distribution(b, f.ops));
        CHECK(std::abs(via_pairing - trace_product(rho, b).real()) < kTol);
    }
}

TEST_CASE("radon_forward on reference states") {
    Fixture f(3);

    const Operator mixed = Operator::Identity(3, 3) / 3.0;
    const PointMarginals pm = radon_forward(quasi_distribution(mixed, f.ops), f.g);
    for (int pi = 0; pi < 12; ++pi) CHECK(std::abs(pm.values(pi) - 1.0 / 3.0) < kTol);

    // projector onto |1>: certain in its own column, flat elsewhere
    const PointMarginals pp =
        radon_forward(quasi_distribution(f.ops.point_op(Point{1, -1}), f.ops), f.g);
    for (int pi = 0; pi < 12; ++pi) {
        const Point a = f.g.point_at(pi);
        const double expected = (a.b == -1) ? (a.m == 1 ? 1.0 : 0.0) : 1.0 / 3.0;
        CHECK(std::abs(pp.values(pi) - expected) < kTol);
    }
}

TEST_CASE("radon_forward agrees with direct traces") {
    for (int d : {3, 5, 7}) {
        Fixture f(d);
        for (std::uint64_t seed : {10u, 11u, 12u}) {
            const Operator rho = random_density_matrix(d, seed);
            const PointMarginals via_lines =
                radon_forward(quasi_distribution(rho, f.ops), f.g);
            const PointMarginals direct = ref::point_marginals(rho, f.ops);
            CHECK((via_lines.values - direct.values).cwiseAbs().maxCoeff() < kTol);
        }
    }
}

TEST_CASE("radon_inverse on reference marginals") {
    Fixture f(3);

    PointMarginals flat{3, Eigen::VectorXd::Constant(12, 1.0 / 3.0)};
    const QuasiDistribution v = radon_inverse(flat, f.g);
    for (int j = 0; j < 9; ++j) CHECK(std::abs(v.values(j) - 1.0 / 3.0) < kTol);

    // marginals of A_(1,-1): line (1,2) passes through (1,-1), so V = 1 there
    const PointMarginals pp = ref::point_marginals(f.ops.point_op(Point{1, -1}), f.ops);
    const QuasiDistribution vp = radon_inverse(pp, f.g);
    CHECK(std::abs(vp.values(f.g.line_index(Line{1, 2})) - 1.0) < kTol);

    PointMarginals wrong{3, Eigen::VectorXd::Zero(11)};
    CHECK_THROWS_AS(radon_inverse(wrong, f.g), std::invalid_argument);
}

TEST_CASE("radon round trip on random density matrices") {
    for (int d : {3, 5, 7}) {
        Fixture f(d);
        for (std::uint64_t seed : {21u, 22u, 23u}) {
            const Operator rho = random_density_matrix(d, seed);
            const QuasiDistribution v = quasi_distribution(rho, f.ops);
            const QuasiDistribution back = radon_inverse(radon_forward(v, f.g), f.g);
            CHECK((back.values - v.values).cwiseAbs().maxCoeff() < kTol);
        }
    }
}

TEST_CASE("marginals of a density matrix sum to one per column") {
    Fixture f(5);
    const Operator rho = random_density_matrix(5, 77);
    const PointMarginals p = radon_forward(quasi_distribution(rho, f.ops), f.g);
    for (int b = -1; b < 5; ++b) {
        double s = 0.0;
        for (int m = 0; m < 5; ++m) s += p.values((b + 1) * 5 + m);
        CHECK(std::abs(s - 1.0) < kTol);
    }
}

TEST_CASE("the distribution goes negative on a two-level superposition") {
    Fixture f(3);
    Ket psi(3);
    psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
    const Operator rho = psi * psi.adjoint();
    const QuasiDistribution v = quasi_distribution(rho, f.ops);

    // frozen witness: V on line (2,1) is exactly -1/2
    CHECK(std::abs(v.values(f.g.line_index(Line{2, 1})) - (-0.5)) < kTol);
    CHECK(v.values.minCoeff() < -1e-6);

    // the whole phase family (|0> + e^{it}|1>)/sqrt(2) stays negative somewhere
    for (int k = 0; k < 24; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 24.0;
        Ket phi(3);
        phi << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), t), 0.0;
        const Operator r = phi * phi.adjoint();
        CHECK(quasi_distribution(r, f.ops).values.minCoeff() < -1e-6);
    }
}

TEST_CASE("parallel kernels agree with the serial reference") {
    Fixture f(7);
    const Eigen::MatrixXd lam = lambda_matrix(f.g);
    for (std::uint64_t seed : {31u, 32u}) {
        const Operator rho = random_density_matrix(7, seed);

        const QuasiDistribution v = quasi_distribution(rho, f.ops);
        const QuasiDistribution vr = ref::quasi_distribution(rho, f.ops);
        CHECK((v.values - vr.values).cwiseAbs().maxCoeff() < kTol);

        CHECK(max_abs(reconstruct_operator(v, f.ops) - ref::reconstruct_operator(v, f.ops)) <
              kTol);

        const PointMarginals m = radon_forward(v, f.g);
        const PointMarginals mr = ref::radon_forward(v, f.g, lam);
        CHECK((m.values - mr.values).cwiseAbs().maxCoeff() < kTol);

        const QuasiDistribution i = radon_inverse(m, f.g);
        const QuasiDistribution ir = ref::radon_inverse(m, f.g);
        CHECK((i.values - ir.values).cwiseAbs().maxCoeff() < kTol);
    }
}
