#include "hawkfs/hho.hpp"

#include <atomic>
#include <stdexcept>

#include "hawkfs/exec.hpp"

namespace hawkfs::hho {

namespace {

// Substream tags; iteration streams start at 1 so they never collide with
// the initialization stream.
constexpr std::uint64_t kInitStream = 0;

void check_in_box(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!(v(i) >= 0.0 && v(i) <= 1.0)) {
            throw std::logic_error("hho: position escaped the unit box");
        }
    }
}

}  // namespace

void HhoParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("hho: population_size must be >= 2");
    if (max_iterations < 1) throw std::invalid_argument("hho: max_iterations must be >= 1");
    if (!(levy_beta > 1.0 && levy_beta <= 2.0)) {
        throw std::invalid_argument("hho: levy_beta must lie in (1, 2]");
    }
}

DecodedSolution decode(const Vector& position, const SolutionLayout& layout) {
    if (position.size() != layout.dimension()) {
        throw std::invalid_argument("decode: position length does not match layout");
    }
    DecodedSolution sol;
    sol.feature_mask.resize(static_cast<std::size_t>(layout.n_features));
    bool any = false;
    for (int j = 0; j < layout.n_features; ++j) {
        const bool bit = position(j) >= 0.5;
        sol.feature_mask[static_cast<std::size_t>(j)] = bit;
        any = any || bit;
    }
    if (!any) {
        // promote the strongest coordinate; ties go to the lowest index
        int best = 0;
        for (int j = 1; j < layout.n_features; ++j) {
            if (position(j) > position(best)) best = j;
        }
        sol.feature_mask[static_cast<std::size_t>(best)] = true;
    }

    int value = 0;
    for (int i = 0; i < layout.neuron_bits; ++i) {
        value = (value << 1) | (position(layout.n_features + i) >= 0.5 ? 1 : 0);
    }
    sol.n_hidden = 1 + value;
    return sol;
}

double levy_sigma(double beta) {
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den =
        std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

std::vector<Hawk> initialize(const HhoParams& params, int dimension, const FitnessFn& fitness) {
    params.validate();
    if (dimension < 1) throw std::invalid_argument("hho: dimension must be >= 1");
    std::vector<Hawk> hawks(static_cast<std::size_t>(params.population_size));
    exec::parallel_for_dynamic(params.population_size, [&](std::int64_t i) {
        Rng rng(derive_seed(params.seed, kInitStream, static_cast<std::uint64_t>(i)));
        Vector x(dimension);
        for (int d = 0; d < dimension; ++d) x(d) = rng.uniform();
        const double f = fitness(x);
        hawks[static_cast<std::size_t>(i)] = {std::move(x), f};
    });
    return hawks;
}

HhoResult optimize(const HhoParams& params, int dimension, const FitnessFn& fitness) {
    const std::vector<Hawk> start = initialize(params, dimension, fitness);

    const auto pop = static_cast<std::size_t>(params.population_size);
    std::vector<Vector> positions(pop);
    std::vector<double> values(pop);
    std::atomic<std::uint64_t> evaluations{static_cast<std::uint64_t>(params.population_size)};
    for (std::size_t i = 0; i < pop; ++i) {
        positions[i] = start[i].position;
        values[i] = start[i].fitness;
    }

    Hawk best{positions[0], values[0]};
    for (std::size_t i = 1; i < pop; ++i) {
        if (values[i] < best.fitness) best = {positions[i], values[i]};
    }

    HhoResult result;
    result.curve.best_fitness.reserve(static_cast<std::size_t>(params.max_iterations));

    std::vector<Vector> next_positions(pop);
    std::vector<double> next_values(pop);

    for (int t = 0; t < params.max_iterations; ++t) {
        const Vector prey = best.position;
        Vector mean = Vector::Zero(dimension);
        for (const auto& x : positions) mean += x;
        mean /= static_cast<double>(pop);

        exec::parallel_for_dynamic(static_cast<std::int64_t>(pop), [&](std::int64_t i) {
            const auto ui = static_cast<std::size_t>(i);
            Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(t) + 1,
                                static_cast<std::uint64_t>(i)));
            const double e0 = 2.0 * rng.uniform() - 1.0;
            const double energy = escape_energy(t, params.max_iterations, e0);

            Vector moved;
            std::optional<double> moved_fitness;
            if (std::abs(energy) >= 1.0) {
                moved = exploration_move(positions[ui], positions, mean, prey, rng);
            } else {
                auto counting = [&](const Vector& x) {
                    evaluations.fetch_add(1, std::memory_order_relaxed);
                    return fitness(x);
                };
                std::tie(moved, moved_fitness) =
                    exploitation_move(positions[ui], values[ui], prey, mean, energy,
                                      counting, rng, params.levy_beta);
            }
            check_in_box(moved);
            if (!moved_fitness) {
                moved_fitness = fitness(moved);
                evaluations.fetch_add(1, std::memory_order_relaxed);
            }
            next_positions[ui] = std::move(moved);
            next_values[ui] = *moved_fitness;
        });

        positions.swap(next_positions);
        values.swap(next_values);
        for (std::size_t i = 0; i < pop; ++i) {
            if (values[i] < best.fitness) best = {positions[i], values[i]};
        }
        result.curve.best_fitness.push_back(best.fitness);
    }

    result.best = std::move(best);
    result.fitness_evaluations = evaluations.load();
    const std::uint64_t bound =
        static_cast<std::uint64_t>(params.population_size) *
        (1 + 3 * static_cast<std::uint64_t>(params.max_iterations));
    if (result.fitness_evaluations > bound) {
        throw std::logic_error("hho: fitness evaluation budget exceeded");
    }
    return result;
}

}  // namespace hawkfs::hho
