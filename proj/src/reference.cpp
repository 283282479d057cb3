#include "dapg/reference.hpp"

#include <algorithm>
#include <cmath>

namespace dapg::ref {

QuasiDistribution quasi_distribution(const Operator& B, const LineOperatorSet& ops) {
    const int nl = ops.geometry().num_lines();
    QuasiDistribution v{ops.d(), Eigen::VectorXd(nl)};
    for (int j = 0; j < nl; ++j) {
        const Operator& p = ops.line_op(j);
        cplx t = 0.0;
        for (int r = 0; r < ops.d(); ++r) {
            for (int c = 0; c < ops.d(); ++c) t += B(r, c) * p(c, r);
        }
        v.values(j) = t.real();
    }
    return v;
}

Operator reconstruct_operator(const QuasiDistribution& V, const LineOperatorSet& ops) {
    const int d = ops.d();
    Operator acc = Operator::Zero(d, d);
    for (int j = 0; j < ops.geometry().num_lines(); ++j) {
        acc += V.values(j) * ops.line_op(j);
    }
    return acc / static_cast<double>(d);
}

PointMarginals radon_forward(const QuasiDistribution& V, const Geometry& g,
                             const Eigen::MatrixXd& lambda) {
    PointMarginals p{g.d(), Eigen::VectorXd(g.num_points())};
    for (int pi = 0; pi < g.num_points(); ++pi) {
        double s = 0.0;
        for (int j = 0; j < g.num_lines(); ++j) s += lambda(pi, j) * V.values(j);
        p.values(pi) = s / static_cast<double>(g.d());
    }
    return p;
}

QuasiDistribution radon_inverse(const PointMarginals& p, const Geometry& g) {
    QuasiDistribution v{g.d(), Eigen::VectorXd(g.num_lines())};
    for (int j = 0; j < g.num_lines(); ++j) {
        double s = -1.0;
        for (const Point& a : g.points_on_line(g.line_at(j))) {
            s += p.values(g.point_index(a));
        }
        v.values(j) = s;
    }
    return v;
}

PointMarginals point_marginals(const Operator& B, const LineOperatorSet& ops) {
    const Geometry& g = ops.geometry();
    PointMarginals p{g.d(), Eigen::VectorXd(g.num_points())};
    for (int pi = 0; pi < g.num_points(); ++pi) {
        const Operator& a = ops.point_op(pi);
        cplx t = 0.0;
        for (int r = 0; r < g.d(); ++r) {
            for (int c = 0; c < g.d(); ++c) t += B(r, c) * a(c, r);
        }
        p.values(pi) = t.real();
    }
    return p;
}

double max_orthogonality_deviation(const LineOperatorSet& ops) {
    const int nl = ops.geometry().num_lines();
    const double d = static_cast<double>(ops.d());
    double dev = 0.0;
    for (int j1 = 0; j1 < nl; ++j1) {
        for (int j2 = j1; j2 < nl; ++j2) {
            const cplx t = trace_product(ops.line_op(j1), ops.line_op(j2));
            dev = std::max(dev, std::abs(t - (j1 == j2 ? d : 0.0)));
        }
    }
    return dev;
}

}  // namespace dapg::ref
