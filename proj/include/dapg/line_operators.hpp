#pragma once

#include "dapg/mub.hpp"

#include <string>
#include <vector>

namespace dapg {

// Caches all d(d+1) point projectors and all d^2 line operators
//   P_j = sum_{alpha in j} A_alpha - I
// in canonical order. Every verification suite sweeps the full set
// repeatedly, so the dense matrices are materialized once up front.
// Immutable after construction; safe to share across threads.
class LineOperatorSet {
public:
    explicit LineOperatorSet(Geometry g);

    const Geometry& geometry() const { return geom_; }
    int d() const { return geom_.d(); }

    const Operator& line_op(int line_index) const { return lines_[line_index]; }
    const Operator& line_op(const Line& j) const { return lines_[geom_.line_index(j)]; }
    const Operator& point_op(int point_index) const { return points_[point_index]; }
    const Operator& point_op(const Point& a) const { return points_[geom_.point_index(a)]; }

private:
    Geometry geom_;
    std::vector<Operator> points_;
    std::vector<Operator> lines_;
};

// Standalone build of one P_j (the cached set is preferred for sweeps).
Operator line_operator(const Line& j, const Geometry& g);

// Re tr(A_alpha P_j); contracts to the geometric incidence value.
double lambda_trace(const Point& alpha, const Line& j, const LineOperatorSet& ops);

// A_alpha recovered as (1/d) sum of the d line operators through alpha.
Operator point_from_lines(const Point& alpha, const LineOperatorSet& ops);

// 0/1 incidence table, d(d+1) rows (points) by d^2 columns (lines).
// Row sums are d, column sums d+1.
Eigen::MatrixXd lambda_matrix(const Geometry& g);

// Largest |tr P_j P_j' - d delta_{jj'}| over all ordered pairs.
double max_orthogonality_deviation(const LineOperatorSet& ops);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    double max_dev = 0.0;
    std::string witness;  // first offending index pair; empty when pass
};

struct IdentityReport {
    int d = 0;
    double tolerance = 0.0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
    const IdentityCheck* first_failure() const;
};

// Sweeps every operator identity of the line/point algebra:
//   line_trace_one        tr P_j = 1
//   pair_orthogonality    tr P_j P_j' = d delta_{jj'}
//   involution            P_j^2 = I
//   lambda_incidence      tr A_alpha P_j equals the geometric incidence
//   pair_product_identity sum_{alpha != alpha' in j} A_alpha A_alpha'
//                           = sum_{alpha in j} A_alpha, per line
//   operator_resolution   per-column sum of A = (1/d) sum_j P_j
//                           = (1/(d+1)) sum_alpha A_alpha = I
// Each check reports its maximum absolute elementwise deviation.
IdentityReport verify_operator_identities(const LineOperatorSet& ops, double tol = 1e-12);

// Variant taking explicit line operators (canonical order), so tests can
// verify that a perturbed set is rejected with a witness.
IdentityReport verify_operator_identities(const LineOperatorSet& ops,
                                          const std::vector<Operator>& line_ops,
                                          double tol = 1e-12);

}  // namespace dapg
