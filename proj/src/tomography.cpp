#include "dapg/tomography.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace dapg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair of standard normals from the documented uniform stream
void gaussian_pair(std::mt19937_64& eng, double& g1, double& g2) {
    double u1 = uniform01(eng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01(eng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    g1 = r * std::cos(2.0 * std::numbers::pi * u2);
    g2 = r * std::sin(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXcd ginibre(int rows, int cols, std::mt19937_64& eng) {
    Eigen::MatrixXcd g(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            double re, im;
            gaussian_pair(eng, re, im);
            g(r, c) = cplx(re, im);
        }
    }
    return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

void validate_density(const Operator& rho, double tol) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("density matrix must be square, got " +
                                    std::to_string(rho.rows()) + "x" +
                                    std::to_string(rho.cols()));
    }
    const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol) {
        throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                    std::to_string(herm_dev) + ")");
    }
    const double trace_dev = std::abs(rho.trace() - cplx(1.0));
    if (trace_dev > tol) {
        throw std::invalid_argument("density matrix trace differs from 1 by " +
                                    std::to_string(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho + rho.adjoint()));
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol) {
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(min_eig));
    }
}

MeasurementRecord simulate_measurements(const Operator& rho, long long shots,
                                        std::uint64_t seed, const LineOperatorSet& ops) {
    if (shots < 1) {
        throw std::invalid_argument("simulate_measurements: shots must be >= 1, got " +
                                    std::to_string(shots));
    }
    validate_density(rho);
    const int d = ops.d();
    if (rho.rows() != d) {
        throw std::invalid_argument("simulate_measurements: state is " +
                                    std::to_string(rho.rows()) + "-dimensional, geometry has d = " +
                                    std::to_string(d));
    }

    MeasurementRecord rec;
    rec.d = d;
    rec.shots = shots;
    rec.counts.assign(d + 1, std::vector<long long>(d, 0));

    for (int b = -1; b < d; ++b) {
        // outcome distribution, clipped and renormalized against 1e-9 slack
        Eigen::VectorXd probs(d);
        for (int m = 0; m < d; ++m) {
            probs(m) = std::max(0.0, trace_product(rho, ops.point_op(Point{m, b})).real());
        }
        Eigen::VectorXd cdf(d);
        double acc = 0.0;
        for (int m = 0; m < d; ++m) {
            acc += probs(m);
            cdf(m) = acc;
        }

        std::mt19937_64 eng(derive_seed(seed, static_cast<std::uint64_t>(b + 1)));
        auto& counts = rec.counts[b + 1];
        for (long long s = 0; s < shots; ++s) {
            const double u = uniform01(eng) * acc;
            int m = 0;
            while (m < d - 1 && u >= cdf(m)) ++m;
            ++counts[m];
        }
    }
    return rec;
}

PointMarginals estimate_marginals(const MeasurementRecord& rec) {
    const int d = rec.d;
    PointMarginals p{d, Eigen::VectorXd(d * (d + 1))};
    for (int b = -1; b < d; ++b) {
        for (int m = 0; m < d; ++m) {
            p.values((b + 1) * d + m) =
                static_cast<double>(rec.counts[b + 1][m]) / static_cast<double>(rec.shots);
        }
    }
    return p;
}

PointMarginals exact_marginals(const Operator& rho, const LineOperatorSet& ops) {
    const Geometry& g = ops.geometry();
    PointMarginals p{g.d(), Eigen::VectorXd(g.num_points())};
    for (int pi = 0; pi < g.num_points(); ++pi) {
        p.values(pi) = trace_product(rho, ops.point_op(pi)).real();
    }
    return p;
}

ReconstructionReport reconstruct_state(const PointMarginals& p, const LineOperatorSet& ops,
                                       bool project_psd, const Operator* true_rho) {
    const QuasiDistribution v = radon_inverse(p, ops.geometry());
    const Operator raw = reconstruct_operator(v, ops);

    ReconstructionReport report;
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (raw + raw.adjoint()));
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.rho_hat = project_psd ? project_to_density(raw) : raw;
    if (true_rho != nullptr) {
        report.fidelity = fidelity(*true_rho, report.rho_hat);
        report.trace_distance = trace_distance(*true_rho, report.rho_hat);
    } else {
        report.fidelity = std::numeric_limits<double>::quiet_NaN();
        report.trace_distance = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

double fidelity(const Operator& rho, const Operator& sigma) {
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho + rho.adjoint()));
    const Operator sqrt_rho =
        es.eigenvectors() *
        es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        es.eigenvectors().adjoint();
    const Operator m = sqrt_rho * sigma * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Operator> es2(0.5 * (m + m.adjoint()));
    const double root_sum = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    const double f = root_sum * root_sum;
    return std::clamp(f, 0.0, 1.0);
}

double trace_distance(const Operator& rho, const Operator& sigma) {
    const Operator diff = rho - sigma;
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (diff + diff.adjoint()));
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Operator project_to_density(const Operator& rho) {
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho + rho.adjoint()));
    const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    const double total = clipped.sum();
    if (total <= 0.0) {
        throw std::invalid_argument("project_to_density: no positive eigenvalues to keep");
    }
    return es.eigenvectors() * (clipped / total).asDiagonal() * es.eigenvectors().adjoint();
}

Ket random_pure_state(int d, std::uint64_t seed) {
    std::mt19937_64 eng(derive_seed(seed, 0));
    Ket psi = ginibre(d, 1, eng).col(0);
    return psi / psi.norm();
}

Operator random_density_matrix(int d, std::uint64_t seed) {
    std::mt19937_64 eng(derive_seed(seed, 0));
    const Eigen::MatrixXcd g = ginibre(d, d, eng);
    Operator rho = g * g.adjoint();
    return rho / rho.trace().real();
}

}  // namespace dapg
