#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dapg/mub.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace dapg;
using test_util::max_abs;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("omega is the primitive d-th root of unity") {
    const PrimeDim p3 = make_prime_dim(3);
    const cplx w = omega(p3);
    CHECK(std::abs(w - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < kTol);
    CHECK(std::abs(w * w * w - 1.0) < kTol);
    CHECK(std::abs(1.0 + w + w * w) < kTol);  // geometric sum

    for (int d : {5, 7, 11}) {
        const PrimeDim p = make_prime_dim(d);
        cplx acc = 1.0;
        for (int k = 0; k < d; ++k) acc *= omega(p);
        CHECK(std::abs(acc - 1.0) < kTol);
    }
}

TEST_CASE("omega_pow reduces exponents first") {
    const PrimeDim p = make_prime_dim(7);
    CHECK(std::abs(omega_pow(p, 9) - omega_pow(p, 2)) == 0.0);
    CHECK(std::abs(omega_pow(p, -1) - omega_pow(p, 6)) == 0.0);
    CHECK(omega_pow(p, 0) == cplx(1.0, 0.0));
}

TEST_CASE("Z is the clock, X the shift") {
    const PrimeDim p = make_prime_dim(3);
    const Operator z = z_operator(p);
    const Operator x = x_operator(p);
    const cplx w = omega(p);

    CHECK(std::abs(z(0, 0) - 1.0) < kTol);
    CHECK(std::abs(z(1, 1) - w) < kTol);
    CHECK(std::abs(z(2, 2) - w * w) < kTol);

    CHECK(max_abs(x * x * x - Operator::Identity(3, 3)) < kTol);

    // Weyl commutation Z X = w X Z (Z X |n> = w^{n+1} |n+1>)
    for (int d : {3, 5, 7}) {
        const PrimeDim q = make_prime_dim(d);
        const Operator zz = z_operator(q), xx = x_operator(q);
        CHECK(max_abs(zz * xx - omega(q) * xx * zz) < kTol);
    }
}

TEST_CASE("mub_state basics") {
    const PrimeDim p = make_prime_dim(3);

    const Ket flat = mub_state(0, 0, p);
    for (int n = 0; n < 3; ++n) {
        CHECK(std::abs(flat(n) - 1.0 / std::sqrt(3.0)) < kTol);
    }

    for (int m = 0; m < 3; ++m) {
        const Ket e = mub_state(m, -1, p);
        for (int n = 0; n < 3; ++n) {
            CHECK(std::abs(e(n) - (n == m ? 1.0 : 0.0)) < kTol);
        }
    }

    for (int b = -1; b < 3; ++b) {
        for (int m = 0; m < 3; ++m) {
            CHECK(std::abs(mub_state(m, b, p).norm() - 1.0) < kTol);
            // leading amplitude real positive, no re-phasing
            const Ket psi = mub_state(m, b, p);
            if (b >= 0) {
                CHECK(psi(0).real() > 0.0);
                CHECK(std::abs(psi(0).imag()) < kTol);
            }
        }
    }

    CHECK_THROWS_AS(mub_state(3, 0, p), std::out_of_range);
    CHECK_THROWS_AS(mub_state(0, 3, p), std::out_of_range);
    CHECK_THROWS_AS(mub_state(-1, 0, p), std::out_of_range);
    CHECK_THROWS_AS(mub_state(0, -2, p), std::out_of_range);
}

TEST_CASE("eigen-relation X Z^b |m;b> = w^m |m;b>") {
    for (int d : {3, 5, 7}) {
        const PrimeDim p = make_prime_dim(d);
        const Operator x = x_operator(p);
        const Operator z = z_operator(p);
        for (int b = 0; b < d; ++b) {
            Operator zb = Operator::Identity(d, d);
            for (int k = 0; k < b; ++k) zb = zb * z;
            const Operator xzb = x * zb;
            for (int m = 0; m < d; ++m) {
                const Ket psi = mub_state(m, b, p);
                CHECK((xzb * psi - omega_pow(p, m) * psi).cwiseAbs().maxCoeff() < kTol);
            }
        }
    }
}

TEST_CASE("unbiasedness: cross-basis overlaps are 1/sqrt(d)") {
    for (int d : {3, 5}) {
        const PrimeDim p = make_prime_dim(d);
        const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
        for (int b1 = -1; b1 < d; ++b1) {
            for (int b2 = -1; b2 < d; ++b2) {
                for (int m1 = 0; m1 < d; ++m1) {
                    for (int m2 = 0; m2 < d; ++m2) {
                        const cplx ov = mub_state(m1, b1, p).dot(mub_state(m2, b2, p));
                        if (b1 == b2) {
                            CHECK(std::abs(ov - (m1 == m2 ? 1.0 : 0.0)) < kTol);
                        } else {
                            CHECK(std::abs(std::abs(ov) - inv_sqrt_d) < kTol);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("point operators are rank-1 projectors") {
    for (int d : {3, 5}) {
        const PrimeDim p = make_prime_dim(d);
        for (int b = -1; b < d; ++b) {
            for (int m = 0; m < d; ++m) {
                const Operator a = point_operator(Point{m, b}, p);
                CHECK(std::abs(a.trace() - cplx(1.0)) < kTol);
                CHECK(max_abs(a * a - a) < kTol);
                CHECK(max_abs(a - a.adjoint().eval()) < kTol);
            }
        }
    }
}

TEST_CASE("d=3 point operators match the worked example") {
    const PrimeDim p = make_prime_dim(3);
    const cplx w = omega(p);
    const cplx w2 = w * w;

    Operator a1m1 = Operator::Zero(3, 3);
    a1m1(1, 1) = 1.0;
    CHECK(max_abs(point_operator(Point{1, -1}, p) - a1m1) < kTol);

    Operator a20(3, 3);
    a20 << 1.0, w2, w,
           w, 1.0, w2,
           w2, w, 1.0;
    CHECK(max_abs(point_operator(Point{2, 0}, p) - a20 / 3.0) < kTol);

    Operator a11(3, 3);
    a11 << 1.0, w, w,
           w2, 1.0, 1.0,
           w2, 1.0, 1.0;
    CHECK(max_abs(point_operator(Point{1, 1}, p) - a11 / 3.0) < kTol);

    Operator a02(3, 3);
    a02 << 1.0, 1.0, w,
           1.0, 1.0, w,
           w2, w2, 1.0;
    CHECK(max_abs(point_operator(Point{0, 2}, p) - a02 / 3.0) < kTol);

    // the b = 0, m = 2 projector equals the outer product of its state
    const Ket psi = mub_state(2, 0, p);
    CHECK(max_abs(point_operator(Point{2, 0}, p) - (psi * psi.adjoint()).eval()) < kTol);
}

TEST_CASE("resolutions of the identity") {
    for (int d : {3, 5, 7}) {
        const PrimeDim p = make_prime_dim(d);
        Operator all = Operator::Zero(d, d);
        for (int b = -1; b < d; ++b) {
            Operator col = Operator::Zero(d, d);
            for (int m = 0; m < d; ++m) col += point_operator(Point{m, b}, p);
            CHECK(max_abs(col - Operator::Identity(d, d)) < kTol);
            all += col;
        }
        CHECK(max_abs(all - double(d + 1) * Operator::Identity(d, d)) < kTol);
    }
}

TEST_CASE("pairwise traces: 1 same point, 0 same column, 1/d across columns") {
    for (int d : {3, 5, 7}) {
        const PrimeDim p = make_prime_dim(d);
        std::vector<Operator> as;
        std::vector<Point> pts;
        for (int b = -1; b < d; ++b) {
            for (int m = 0; m < d; ++m) {
                pts.push_back(Point{m, b});
                as.push_back(point_operator(Point{m, b}, p));
            }
        }
        for (size_t i = 0; i < as.size(); ++i) {
            for (size_t k = 0; k < as.size(); ++k) {
                const cplx t = trace_product(as[i], as[k]);
                double expected;
                if (i == k) {
                    expected = 1.0;
                } else if (pts[i].b == pts[k].b) {
                    expected = 0.0;
                } else {
                    expected = 1.0 / d;
                }
                CHECK(std::abs(t - expected) < kTol);
            }
        }
    }
}

TEST_CASE("trace_product equals the trace of the product") {
    std::mt19937_64 eng(42);
    for (int d : {3, 7}) {
        const Operator a = test_util::random_matrix(d, eng);
        const Operator b = test_util::random_matrix(d, eng);
        CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < 1e-10);
    }
}
