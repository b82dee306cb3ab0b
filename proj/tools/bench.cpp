// Timing harness comparing the serial reference implementations against the
// production kernels at one thread and at the full thread pool.

#include <chrono>
#include <cstdio>
#include <functional>

#include "hawkfs/baselines.hpp"
#include "hawkfs/exec.hpp"
#include "hawkfs/linalg.hpp"
#include "hawkfs/reference.hpp"
#include "hawkfs/rng.hpp"
#include "hawkfs/rwn.hpp"
#include "hawkfs/synthetic.hpp"
#include "hawkfs/wrapper.hpp"

using namespace hawkfs;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double ref_ms, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f %12.1f %14.1f %9.2fx\n", name, ref_ms, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    const int threads = exec::max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %10s %12s %14s %10s\n", "kernel", "ref(ms)", "serial(ms)", "parallel(ms)",
                "speedup");

    // sigmoid hidden layer on a tall input block
    {
        Rng rng(1);
        const Eigen::Index m = 20000, f = 115, n = 256;
        Matrix x(m, f);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < f; ++j) x(i, j) = rng.uniform();
        RwnConfig cfg;
        cfg.n_hidden = static_cast<int>(n);
        cfg.seed = 9;
        RwnModel model = rwn_train(x.topRows(32), std::vector<int>(32, 0), 1, cfg);

        Matrix h_ref, h_serial, h_parallel;
        const double t_ref = time_ms([&] {
            h_ref = reference::hidden_activations(model.input_weights, model.hidden_biases, x);
        });
        exec::set_max_threads(1);
        const double t_serial = time_ms([&] { h_serial = hidden_activations(model, x); });
        exec::set_max_threads(threads);
        const double t_parallel = time_ms([&] { h_parallel = hidden_activations(model, x); });
        row("hidden_activations", t_ref, t_serial, t_parallel);
        if (h_serial != h_parallel) std::printf("  !! serial/parallel kernels disagree\n");
        if ((h_ref - h_parallel).cwiseAbs().maxCoeff() > 1e-9) {
            std::printf("  !! kernel deviates from the reference\n");
        }
    }

    // k-nearest-neighbour voting
    {
        const Dataset d = synthetic::two_blobs(2500, 48, 3.0, 5);
        const Matrix queries = d.features.topRows(1500);
        const KnnModel model = knn_train(d.features, d.labels, 2, 5);

        std::vector<int> ref_pred, serial_pred, parallel_pred;
        const double t_ref = time_ms(
            [&] { ref_pred = reference::knn_predict(d.features, d.labels, 5, 2, queries); });
        exec::set_max_threads(1);
        const double t_serial = time_ms([&] { serial_pred = knn_predict(model, queries); });
        exec::set_max_threads(threads);
        const double t_parallel = time_ms([&] { parallel_pred = knn_predict(model, queries); });
        row("knn_predict", t_ref, t_serial, t_parallel);
        if (serial_pred != parallel_pred) std::printf("  !! serial/parallel kernels disagree\n");
        if (ref_pred != parallel_pred) std::printf("  !! kernel deviates from the reference\n");
    }

    // full wrapper iteration: candidate evaluations dominated by the
    // least-squares solve; hawks are scored on the thread pool
    {
        const Dataset d = synthetic::phishing_like(4000, 11);
        SplitSpec spec;
        spec.seed = 3;
        const Splits raw = split(d, spec);
        const NormalizationParams norm = fit_normalizer(raw.train);
        const Splits splits{apply_normalizer(raw.train, norm),
                            apply_normalizer(raw.validation, norm),
                            apply_normalizer(raw.test, norm)};
        WrapperSettings ws;
        ws.hho.population_size = 10;
        ws.hho.max_iterations = 6;
        ws.neuron_bits = 8;

        exec::set_max_threads(1);
        SearchResult serial_run;
        const double t_serial = time_ms([&] { serial_run = run_wrapper(splits, ws, 17); });
        exec::set_max_threads(threads);
        SearchResult parallel_run;
        const double t_parallel = time_ms([&] { parallel_run = run_wrapper(splits, ws, 17); });
        row("wrapper_search", 0.0, t_serial, t_parallel);
        if (serial_run.validation_eval.fitness != parallel_run.validation_eval.fitness ||
            serial_run.curve.best_fitness != parallel_run.curve.best_fitness) {
            std::printf("  !! serial/parallel searches disagree\n");
        }
    }

    // least-squares solver across training shapes
    for (const auto [m, n] : {std::pair<int, int>{2000, 128}, {4950, 512}}) {
        Rng rng(static_cast<std::uint64_t>(m + n));
        Matrix h(m, n);
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = rng.uniform();
        Matrix t = Matrix::Zero(m, 2);
        for (Eigen::Index i = 0; i < t.rows(); ++i) t(i, i % 2) = 1.0;

        Matrix b;
        char name[64];
        std::snprintf(name, sizeof(name), "lstsq_min_norm %dx%d", m, n);
        const double t_solve = time_ms([&] { b = linalg::lstsq_min_norm(h, t); });
        row(name, 0.0, t_solve, t_solve);
    }

    return 0;
}
