#pragma once

#include "dapg/phase_space.hpp"

namespace dapg::ref {

// Serial reference implementations of the parallel kernels. Kept for unit
// tests (kernel output must match within tolerance) and for the benchmark
// tool. radon_forward deliberately takes a different route than the kernel:
// it applies the full dense incidence table instead of walking the lines
// through each point, and point_marginals bypasses phase space entirely via
// direct traces.

QuasiDistribution quasi_distribution(const Operator& B, const LineOperatorSet& ops);

Operator reconstruct_operator(const QuasiDistribution& V, const LineOperatorSet& ops);

PointMarginals radon_forward(const QuasiDistribution& V, const Geometry& g,
                             const Eigen::MatrixXd& lambda);

QuasiDistribution radon_inverse(const PointMarginals& p, const Geometry& g);

// p_alpha = tr B A_alpha evaluated directly, no quasi-distribution involved
PointMarginals point_marginals(const Operator& B, const LineOperatorSet& ops);

double max_orthogonality_deviation(const LineOperatorSet& ops);

}  // namespace dapg::ref
