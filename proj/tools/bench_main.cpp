// Times the OpenMP kernels against the serial reference implementations and
// reports the largest disagreement between the two routes.

#include "dapg/reference.hpp"
#include "dapg/tomography.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

namespace {

double time_best_ms(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, double serial_ms, double parallel_ms, double max_dev) {
    std::printf("%-26s %10.2f ms %10.2f ms %8.2fx   %.3e\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_dev);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    int d = 13;
    int batch = 64;
    int repeats = 3;
    app.add_option("--d", d, "odd prime dimension");
    app.add_option("--batch", batch, "operators per batched benchmark");
    app.add_option("--repeats", repeats, "timing repeats (best is reported)");
    CLI11_PARSE(app, argc, argv);

    const dapg::Geometry g(dapg::make_prime_dim(d));
    const dapg::LineOperatorSet ops(g);
    const Eigen::MatrixXd lambda = dapg::lambda_matrix(g);

    std::vector<dapg::Operator> states(batch);
    for (int k = 0; k < batch; ++k) {
        states[k] = dapg::random_density_matrix(d, 1000 + k);
    }

    std::printf("d = %d: %d lines, %d points, batch = %d\n", d, g.num_lines(),
                g.num_points(), batch);
    std::printf("%-26s %13s %13s %9s   %s\n", "kernel", "serial", "openmp", "speedup",
                "max |serial - openmp|");

    {
        double dev_s = 0, dev_p = 0;
        const double ts = time_best_ms(repeats, [&] {
            dev_s = dapg::ref::max_orthogonality_deviation(ops);
        });
        const double tp = time_best_ms(repeats, [&] {
            dev_p = dapg::max_orthogonality_deviation(ops);
        });
        row("pair orthogonality sweep", ts, tp, std::abs(dev_s - dev_p));
    }

    {
        std::vector<dapg::QuasiDistribution> vs(batch), vp(batch);
        const double ts = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) vs[k] = dapg::ref::quasi_distribution(states[k], ops);
        });
        const double tp = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) vp[k] = dapg::quasi_distribution(states[k], ops);
        });
        double dev = 0;
        for (int k = 0; k < batch; ++k) {
            dev = std::max(dev, (vs[k].values - vp[k].values).cwiseAbs().maxCoeff());
        }
        row("quasi-distribution batch", ts, tp, dev);

        std::vector<dapg::Operator> rs(batch), rp(batch);
        const double ts2 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) rs[k] = dapg::ref::reconstruct_operator(vs[k], ops);
        });
        const double tp2 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) rp[k] = dapg::reconstruct_operator(vp[k], ops);
        });
        double dev2 = 0;
        for (int k = 0; k < batch; ++k) {
            dev2 = std::max(dev2, (rs[k] - rp[k]).cwiseAbs().maxCoeff());
        }
        row("operator reconstruction", ts2, tp2, dev2);

        std::vector<dapg::PointMarginals> ms(batch), mp(batch);
        const double ts3 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) ms[k] = dapg::ref::radon_forward(vs[k], g, lambda);
        });
        const double tp3 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) mp[k] = dapg::radon_forward(vp[k], g);
        });
        double dev3 = 0;
        for (int k = 0; k < batch; ++k) {
            dev3 = std::max(dev3, (ms[k].values - mp[k].values).cwiseAbs().maxCoeff());
        }
        row("radon forward batch", ts3, tp3, dev3);

        std::vector<dapg::QuasiDistribution> is(batch), ip(batch);
        const double ts4 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) is[k] = dapg::ref::radon_inverse(ms[k], g);
        });
        const double tp4 = time_best_ms(repeats, [&] {
            for (int k = 0; k < batch; ++k) ip[k] = dapg::radon_inverse(mp[k], g);
        });
        double dev4 = 0;
        for (int k = 0; k < batch; ++k) {
            dev4 = std::max(dev4, (is[k].values - ip[k].values).cwiseAbs().maxCoeff());
        }
        row("radon inverse batch", ts4, tp4, dev4);
    }

    return 0;
}
