#pragma once

#include "dapg/line_operators.hpp"

namespace dapg {

// V(j; B) = tr B P_j over the d^2 lines, canonical order. Real-valued: the
// imaginary residue of the trace is below 1e-12 whenever B is Hermitian.
// Normalization for a density operator: (1/d) sum_j V(j) = tr rho = 1.
struct QuasiDistribution {
    int d = 0;
    Eigen::VectorXd values;  // length d^2
};

// p_alpha = tr rho A_alpha over the d(d+1) points, canonical order.
// For a density operator each column of d values sums to 1.
struct PointMarginals {
    int d = 0;
    Eigen::VectorXd values;  // length d(d+1)
};

// B -> V(j;B) = tr B P_j. Throws std::invalid_argument on dimension mismatch.
QuasiDistribution quasi_distribution(const Operator& B, const LineOperatorSet& ops);

// V -> (1/d) sum_j V(j) P_j; left inverse of quasi_distribution on Hermitian
// operators (the P_j form a complete orthogonal operator basis).
Operator reconstruct_operator(const QuasiDistribution& V, const LineOperatorSet& ops);

// tr rho B = (1/d) sum_j V(j;rho) V(j;B)
double pair_expectation(const QuasiDistribution& v_rho, const QuasiDistribution& v_b);

// p_alpha = (1/d) sum_j V(j) Lambda_{alpha,j}: the sum of V over the d lines
// through alpha, divided by d.
PointMarginals radon_forward(const QuasiDistribution& V, const Geometry& g);

// V(j) = sum_{alpha in j} p_alpha - 1; inverts radon_forward on
// quasi-distributions of unit-trace Hermitian operators.
QuasiDistribution radon_inverse(const PointMarginals& p, const Geometry& g);

}  // namespace dapg
