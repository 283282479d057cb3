#pragma once

#include "dapg/geometry.hpp"

#include <Eigen/Dense>
#include <complex>

namespace dapg {

using cplx = std::complex<double>;
using Operator = Eigen::MatrixXcd;  // d x d, computational-basis entries
using Ket = Eigen::VectorXcd;       // d amplitudes

// w = exp(i 2 pi / d), the primitive d-th root of unity
cplx omega(const PrimeDim& p);

// w^e with the exponent reduced mod d first, so the phase stays in [0, 2 pi)
// and results reproduce bit-for-bit across evaluation orders
cplx omega_pow(const PrimeDim& p, long long e);

Operator z_operator(const PrimeDim& p);  // Z|n> = w^n |n>
Operator x_operator(const PrimeDim& p);  // X|n> = |n+1 mod d>

// The MUB state |m;b> = (1/sqrt d) sum_n w^((b/2) n(n-1) - n m) |n> for
// b = 0..d-1; b = -1 selects the computational-basis vector e_m. The n = 0
// amplitude is always the real positive 1/sqrt(d) (no re-phasing).
// Throws std::out_of_range for labels outside the grid.
Ket mub_state(int m, int b, const PrimeDim& p);

// Rank-1 projector A_alpha = |m,b><b,m|
Operator point_operator(const Point& alpha, const PrimeDim& p);

// tr(A B) in O(d^2), no product matrix formed
cplx trace_product(const Operator& a, const Operator& b);

}  // namespace dapg
