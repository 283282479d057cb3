#pragma once

#include "dapg/phase_space.hpp"

#include <cstdint>

namespace dapg {

// Finite-shot MUB measurement record: counts[b+1][m] outcomes for basis
// b = -1..d-1, with sum_m counts[b+1][m] == shots for every basis.
struct MeasurementRecord {
    int d = 0;
    long long shots = 0;
    std::vector<std::vector<long long>> counts;
};

struct ReconstructionReport {
    Operator rho_hat;              // PSD-projected when requested, else raw inversion
    double fidelity = 0.0;         // vs the true state; NaN when no true state given
    double trace_distance = 0.0;   // likewise
    double min_eigenvalue = 0.0;   // smallest eigenvalue of the raw linear inversion
    long long shots = 0;           // filled by the caller; 0 marks exact marginals
};

// Randomness scheme (fixed so records reproduce bit-for-bit):
//   - derive_seed(seed, stream) = splitmix64(seed + (stream + 1) * 2^64/phi),
//     giving independent substreams from one user seed
//   - each substream drives a std::mt19937_64
//   - uniform doubles are (engine() >> 11) * 2^-53
//   - outcomes are drawn by inverse CDF over the basis probabilities
// simulate_measurements uses stream b + 1 for basis b.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Throws std::invalid_argument naming the violated property (Hermiticity,
// positivity within 1e-9, unit trace) when rho is not a density matrix.
void validate_density(const Operator& rho, double tol = 1e-9);

// Draws `shots` outcomes per basis from {tr rho A_(m,b)}_m. Deterministic in
// (rho, shots, seed). Throws on invalid rho or shots < 1.
MeasurementRecord simulate_measurements(const Operator& rho, long long shots,
                                        std::uint64_t seed, const LineOperatorSet& ops);

// p_(m,b) = counts[b][m] / shots
PointMarginals estimate_marginals(const MeasurementRecord& rec);

// p_alpha = tr rho A_alpha, the infinite-shot limit
PointMarginals exact_marginals(const Operator& rho, const LineOperatorSet& ops);

// Linear-inversion estimate rho_hat = reconstruct_operator(radon_inverse(p)),
// i.e. sum_alpha p_alpha A_alpha - I. With project_psd the eigenvalues are
// clipped at zero and the trace renormalized. When true_rho is supplied the
// report carries fidelity and trace distance against it.
ReconstructionReport reconstruct_state(const PointMarginals& p, const LineOperatorSet& ops,
                                       bool project_psd = false,
                                       const Operator* true_rho = nullptr);

// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0,1];
// reduces to <psi|sigma|psi> for pure rho.
double fidelity(const Operator& rho, const Operator& sigma);

// (1/2) tr |rho - sigma|
double trace_distance(const Operator& rho, const Operator& sigma);

// Eigenvalue clipping at zero followed by trace renormalization.
Operator project_to_density(const Operator& rho);

// Haar-like random pure state / Ginibre random density matrix, driven by the
// documented generator scheme.
Ket random_pure_state(int d, std::uint64_t seed);
Operator random_density_matrix(int d, std::uint64_t seed);

}  // namespace dapg
