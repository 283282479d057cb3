#include "dapg/line_operators.hpp"

#include <algorithm>
#include <cmath>

namespace dapg {

LineOperatorSet::LineOperatorSet(Geometry g) : geom_(std::move(g)) {
    const int d = geom_.d();
    points_.resize(geom_.num_points());
    for (int pi = 0; pi < geom_.num_points(); ++pi) {
        points_[pi] = point_operator(geom_.point_at(pi), geom_.dim());
    }
    lines_.resize(geom_.num_lines());
#pragma omp parallel for schedule(static) if (geom_.num_lines() > 256)
    for (int j = 0; j < geom_.num_lines(); ++j) {
        Operator p = -Operator::Identity(d, d);
        for (const Point& a : geom_.points_on_line(geom_.line_at(j))) {
            p += points_[geom_.point_index(a)];
        }
        lines_[j] = std::move(p);
    }
}

Operator line_operator(const Line& j, const Geometry& g) {
    const int d = g.d();
    Operator p = -Operator::Identity(d, d);
    for (const Point& a : g.points_on_line(j)) {
        p += point_operator(a, g.dim());
    }
    return p;
}

double lambda_trace(const Point& alpha, const Line& j, const LineOperatorSet& ops) {
    return trace_product(ops.point_op(alpha), ops.line_op(j)).real();
}

Operator point_from_lines(const Point& alpha, const LineOperatorSet& ops) {
    const Geometry& g = ops.geometry();
    const int d = g.d();
    Operator acc = Operator::Zero(d, d);
    for (const Line& j : g.lines_through_point(alpha)) {
        acc += ops.line_op(j);
    }
    return acc / static_cast<double>(d);
}

Eigen::MatrixXd lambda_matrix(const Geometry& g) {
    Eigen::MatrixXd lam = Eigen::MatrixXd::Zero(g.num_points(), g.num_lines());
    for (int j = 0; j < g.num_lines(); ++j) {
        for (const Point& a : g.points_on_line(g.line_at(j))) {
            lam(g.point_index(a), j) = 1.0;
        }
    }
    return lam;
}

double max_orthogonality_deviation(const LineOperatorSet& ops) {
    const long long nl = ops.geometry().num_lines();
    const double d = static_cast<double>(ops.d());
    double dev = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : dev) if (nl > 32)
    for (long long j1 = 0; j1 < nl; ++j1) {
        for (long long j2 = j1; j2 < nl; ++j2) {
            const cplx t = trace_product(ops.line_op(j1), ops.line_op(j2));
            dev = std::max(dev, std::abs(t - (j1 == j2 ? d : 0.0)));
        }
    }
    return dev;
}

bool IdentityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.pass; });
}

const IdentityCheck* IdentityReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

IdentityReport verify_operator_identities(const LineOperatorSet& ops, double tol) {
    std::vector<Operator> lines(ops.geometry().num_lines());
    for (int j = 0; j < ops.geometry().num_lines(); ++j) lines[j] = ops.line_op(j);
    return verify_operator_identities(ops, lines, tol);
}

IdentityReport verify_operator_identities(const LineOperatorSet& ops,
                                          const std::vector<Operator>& line_ops,
                                          double tol) {
    const Geometry& g = ops.geometry();
    const int d = g.d();
    const long long nl = static_cast<long long>(line_ops.size());
    const int np = g.num_points();

    IdentityReport report;
    report.d = d;
    report.tolerance = tol;

    auto finish = [&](IdentityCheck& c) {
        c.pass = c.max_dev <= tol;
        if (c.pass) c.witness.clear();
        report.checks.push_back(std::move(c));
    };

    // tr P_j = 1
    IdentityCheck c1{"line_trace_one", false, 0.0, ""};
    for (long long j = 0; j < nl; ++j) {
        const double dev = std::abs(line_ops[j].trace() - cplx(1.0));
        if (dev > c1.max_dev) {
            c1.max_dev = dev;
            c1.witness = "tr P_" + std::to_string(j) + " deviates by " + std::to_string(dev);
        }
    }
    finish(c1);

    // tr P_j P_j' = d delta
    IdentityCheck c2{"pair_orthogonality", false, 0.0, ""};
    double dev2 = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : dev2) if (nl > 32)
    for (long long j1 = 0; j1 < nl; ++j1) {
        for (long long j2 = j1; j2 < nl; ++j2) {
            const cplx t = trace_product(line_ops[j1], line_ops[j2]);
            dev2 = std::max(dev2, std::abs(t - (j1 == j2 ? double(d) : 0.0)));
        }
    }
    c2.max_dev = dev2;
    if (dev2 > tol) {
        for (long long j1 = 0; j1 < nl && c2.witness.empty(); ++j1) {
            for (long long j2 = j1; j2 < nl; ++j2) {
                const cplx t = trace_product(line_ops[j1], line_ops[j2]);
                const double dev = std::abs(t - (j1 == j2 ? double(d) : 0.0));
                if (dev > tol) {
                    c2.witness = "tr P_" + std::to_string(j1) + " P_" + std::to_string(j2) +
                                 " deviates by " + std::to_string(dev);
                    break;
                }
            }
        }
    }
    finish(c2);

    // P_j^2 = I
    IdentityCheck c3{"involution", false, 0.0, ""};
    double dev3 = 0.0;
#pragma omp parallel for schedule(static) reduction(max : dev3) if (nl > 32)
    for (long long j = 0; j < nl; ++j) {
        const double dev =
            (line_ops[j] * line_ops[j] - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
        dev3 = std::max(dev3, dev);
    }
    c3.max_dev = dev3;
    if (dev3 > tol) {
        for (long long j = 0; j < nl; ++j) {
            const double dev =
                (line_ops[j] * line_ops[j] - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
            if (dev > tol) {
                c3.witness = "P_" + std::to_string(j) + "^2 deviates from I by " +
                             std::to_string(dev);
                break;
            }
        }
    }
    finish(c3);

    // tr A_alpha P_j equals the geometric incidence
    IdentityCheck c4{"lambda_incidence", false, 0.0, ""};
    double dev4 = 0.0;
#pragma omp parallel for schedule(static) reduction(max : dev4) if (np > 16)
    for (int pi = 0; pi < np; ++pi) {
        const Point a = g.point_at(pi);
        for (long long j = 0; j < nl; ++j) {
            const cplx t = trace_product(ops.point_op(pi), line_ops[j]);
            const double expected = g.incidence(a, g.line_at(static_cast<int>(j)));
            dev4 = std::max(dev4, std::abs(t - expected));
        }
    }
    c4.max_dev = dev4;
    if (dev4 > tol) {
        for (int pi = 0; pi < np && c4.witness.empty(); ++pi) {
            const Point a = g.point_at(pi);
            for (long long j = 0; j < nl; ++j) {
                const cplx t = trace_product(ops.point_op(pi), line_ops[j]);
                const double expected = g.incidence(a, g.line_at(static_cast<int>(j)));
                if (std::abs(t - expected) > tol) {
                    c4.witness = "tr A_" + std::to_string(pi) + " P_" + std::to_string(j) +
                                 " deviates by " + std::to_string(std::abs(t - expected));
                    break;
                }
            }
        }
    }
    finish(c4);

    // sum over alpha != alpha' in j of A A' equals the plain sum, per line
    IdentityCheck c5{"pair_product_identity", false, 0.0, ""};
    double dev5 = 0.0;
    long long worst5 = -1;
#pragma omp parallel for schedule(static) if (nl > 32)
    for (long long j = 0; j < static_cast<long long>(g.num_lines()); ++j) {
        const auto pts = g.points_on_line(g.line_at(static_cast<int>(j)));
        Operator cross = Operator::Zero(d, d);
        Operator plain = Operator::Zero(d, d);
        for (size_t u = 0; u < pts.size(); ++u) {
            plain += ops.point_op(pts[u]);
            for (size_t v = 0; v < pts.size(); ++v) {
                if (u == v) continue;
                cross += ops.point_op(pts[u]) * ops.point_op(pts[v]);
            }
        }
        const double dev = (cross - plain).cwiseAbs().maxCoeff();
#pragma omp critical
        {
            if (dev > dev5) {
                dev5 = dev;
                worst5 = j;
            }
        }
    }
    c5.max_dev = dev5;
    if (dev5 > tol) {
        c5.witness = "cross-product sum on line " + std::to_string(worst5) +
                     " deviates by " + std::to_string(dev5);
    }
    finish(c5);

    // per-column resolutions: sum_m A_(m,b) = (1/d) sum_j P_j
    //                         = (1/(d+1)) sum_alpha A_alpha = I
    IdentityCheck c6{"operator_resolution", false, 0.0, ""};
    const Operator id = Operator::Identity(d, d);
    Operator all_points = Operator::Zero(d, d);
    for (int b = -1; b < d; ++b) {
        Operator col = Operator::Zero(d, d);
        for (int m = 0; m < d; ++m) col += ops.point_op(Point{m, b});
        all_points += col;
        const double dev = (col - id).cwiseAbs().maxCoeff();
        if (dev > c6.max_dev) {
            c6.max_dev = dev;
            c6.witness = "column b = " + std::to_string(b) +
                         " resolution deviates by " + std::to_string(dev);
        }
    }
    Operator all_lines = Operator::Zero(d, d);
    for (long long j = 0; j < nl; ++j) all_lines += line_ops[j];
    const double dev_l = (all_lines / double(d) - id).cwiseAbs().maxCoeff();
    if (dev_l > c6.max_dev) {
        c6.max_dev = dev_l;
        c6.witness = "line-operator sum deviates from d I by " + std::to_string(dev_l);
    }
    const double dev_p = (all_points / double(d + 1) - id).cwiseAbs().maxCoeff();
    if (dev_p > c6.max_dev) {
        c6.max_dev = dev_p;
        c6.witness = "point-operator sum deviates from (d+1) I by " + std::to_string(dev_p);
    }
    finish(c6);

    return report;
}

}  // namespace dapg
