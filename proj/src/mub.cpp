#include "dapg/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dapg {

cplx omega(const PrimeDim& p) { return omega_pow(p, 1); }

cplx omega_pow(const PrimeDim& p, long long e) {
    const int r = p.reduce(e);
    return std::polar(1.0, 2.0 * std::numbers::pi * r / p.d);
}

Operator z_operator(const PrimeDim& p) {
    Operator z = Operator::Zero(p.d, p.d);
    for (int n = 0; n < p.d; ++n) z(n, n) = omega_pow(p, n);
    return z;
}

Operator x_operator(const PrimeDim& p) {
    Operator x = Operator::Zero(p.d, p.d);
    for (int n = 0; n < p.d; ++n) x((n + 1) % p.d, n) = 1.0;
    return x;
}

Ket mub_state(int m, int b, const PrimeDim& p) {
    if (m < 0 || m >= p.d) {
        throw std::out_of_range("mub_state: m = " + std::to_string(m) +
                                " outside [0, " + std::to_string(p.d) + ")");
    }
    if (b < -1 || b >= p.d) {
        throw std::out_of_range("mub_state: b = " + std::to_string(b) +
                                " outside [-1, " + std::to_string(p.d) + ")");
    }
    Ket psi = Ket::Zero(p.d);
    if (b == -1) {
        psi(m) = 1.0;
        return psi;
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(p.d));
    for (int n = 0; n < p.d; ++n) {
        // (b/2) n(n-1) - n m, reduced mod d before exponentiating
        const long long e = static_cast<long long>(half(b, p)) * n * (n - 1) -
                            static_cast<long long>(n) * m;
        psi(n) = norm * omega_pow(p, e);
    }
    return psi;
}

Operator point_operator(const Point& alpha, const PrimeDim& p) {
    const Ket psi = mub_state(alpha.m, alpha.b, p);
    return psi * psi.adjoint();
}

cplx trace_product(const Operator& a, const Operator& b) {
    return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace dapg
