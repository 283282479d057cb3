#include "dapg/phase_space.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dapg {

QuasiDistribution quasi_distribution(const Operator& B, const LineOperatorSet& ops) {
    const int d = ops.d();
    if (B.rows() != d || B.cols() != d) {
        throw std::invalid_argument("quasi_distribution: operator is " +
                                    std::to_string(B.rows()) + "x" +
                                    std::to_string(B.cols()) + ", geometry has d = " +
                                    std::to_string(d));
    }
    const int nl = ops.geometry().num_lines();
    QuasiDistribution v{d, Eigen::VectorXd(nl)};
#pragma omp parallel for schedule(static) if (nl > 256)
    for (int j = 0; j < nl; ++j) {
        v.values(j) = trace_product(B, ops.line_op(j)).real();
    }
    return v;
}

Operator reconstruct_operator(const QuasiDistribution& V, const LineOperatorSet& ops) {
    const int d = ops.d();
    const int nl = ops.geometry().num_lines();
    if (V.values.size() != nl) {
        throw std::invalid_argument("reconstruct_operator: expected " + std::to_string(nl) +
                                    " line values, got " + std::to_string(V.values.size()));
    }
    Operator acc = Operator::Zero(d, d);
#pragma omp parallel if (nl > 256)
    {
        Operator local = Operator::Zero(d, d);
#pragma omp for schedule(static) nowait
        for (int j = 0; j < nl; ++j) {
            local += V.values(j) * ops.line_op(j);
        }
#pragma omp critical
        acc += local;
    }
    return acc / static_cast<double>(d);
}

double pair_expectation(const QuasiDistribution& v_rho, const QuasiDistribution& v_b) {
    if (v_rho.d != v_b.d) {
        throw std::invalid_argument("pair_expectation: dimension mismatch (" +
                                    std::to_string(v_rho.d) + " vs " +
                                    std::to_string(v_b.d) + ")");
    }
    return v_rho.values.dot(v_b.values) / static_cast<double>(v_rho.d);
}

PointMarginals radon_forward(const QuasiDistribution& V, const Geometry& g) {
    const int nl = g.num_lines();
    if (V.d != g.d() || V.values.size() != nl) {
        throw std::invalid_argument("radon_forward: quasi-distribution does not match d = " +
                                    std::to_string(g.d()));
    }
    const int np = g.num_points();
    PointMarginals p{g.d(), Eigen::VectorXd(np)};
#pragma omp parallel for schedule(static) if (np > 256)
    for (int pi = 0; pi < np; ++pi) {
        double s = 0.0;
        for (const Line& j : g.lines_through_point(g.point_at(pi))) {
            s += V.values(g.line_index(j));
        }
        p.values(pi) = s / static_cast<double>(g.d());
    }
    return p;
}

QuasiDistribution radon_inverse(const PointMarginals& p, const Geometry& g) {
    const int np = g.num_points();
    if (p.d != g.d() || p.values.size() != np) {
        throw std::invalid_argument("radon_inverse: marginals do not match d = " +
                                    std::to_string(g.d()));
    }
    const int nl = g.num_lines();
    QuasiDistribution v{g.d(), Eigen::VectorXd(nl)};
#pragma omp parallel for schedule(static) if (nl > 256)
    for (int j = 0; j < nl; ++j) {
        double s = -1.0;
        for (const Point& a : g.points_on_line(g.line_at(j))) {
            s += p.values(g.point_index(a));
        }
        v.values(j) = s;
    }
    return v;
}

}  // namespace dapg
