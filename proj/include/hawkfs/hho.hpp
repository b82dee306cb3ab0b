#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "hawkfs/linalg.hpp"
#include "hawkfs/rng.hpp"

namespace hawkfs::hho {

// Candidate encoding: L feature bits followed by M bits for the hidden
// neuron count, all living in the continuous box [0,1]^(L+M).
struct SolutionLayout {
    int n_features = 0;
    int neuron_bits = 10;

    int dimension() const { return n_features + neuron_bits; }
    int max_neurons() const { return 1 << neuron_bits; }
};

struct HhoParams {
    int population_size = 200;
    int max_iterations = 100;
    std::uint64_t seed = 0;
    double levy_beta = 1.5;

    void validate() const;
};

struct DecodedSolution {
    std::vector<bool> feature_mask;
    int n_hidden = 1;

    int selected_count() const {
        int n = 0;
        for (const bool b : feature_mask) n += b ? 1 : 0;
        return n;
    }
};

struct ConvergenceCurve {
    std::vector<double> best_fitness;  // best-so-far after each iteration
};

struct Hawk {
    Vector position;
    double fitness = 0.0;
};

struct HhoResult {
    Hawk best;
    ConvergenceCurve curve;
    std::uint64_t fitness_evaluations = 0;
};

// Must be safe to call from multiple threads.
using FitnessFn = std::function<double(const Vector&)>;

// Threshold at 0.5, repair an all-zero mask by promoting the largest
// feature coordinate, and read the neuron bits most-significant-first with
// a +1 offset so n_hidden covers [1, 2^M].
DecodedSolution decode(const Vector& position, const SolutionLayout& layout);

inline double escape_energy(int iteration, int max_iterations, double initial_energy) {
    return 2.0 * initial_energy *
           (1.0 - static_cast<double>(iteration) / static_cast<double>(max_iterations));
}

double levy_sigma(double beta);

inline Vector clamp_unit(Vector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::clamp(v(i), 0.0, 1.0);
    return v;
}

template <UniformRng R>
Vector levy_flight(int dim, double beta, R& rng) {
    const double sigma = levy_sigma(beta);
    Vector step(dim);
    for (int i = 0; i < dim; ++i) {
        const double u = rng.normal() * sigma;
        const double v = rng.normal();
        step(i) = 0.01 * u / std::pow(std::abs(v), 1.0 / beta);
    }
    return step;
}

// Exploration: perch on a random population member or drift relative to the
// swarm mean. Draw order: q, then (member index, r1, r2) or (r3, r4).
template <UniformRng R>
Vector exploration_move(const Vector& position, const std::vector<Vector>& population,
                        const Vector& population_mean, const Vector& prey, R& rng) {
    const double q = rng.uniform();
    if (q >= 0.5) {
        const auto pick = static_cast<std::size_t>(rng.uniform_int(population.size()));
        const Vector& x_rand = population[pick];
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        return clamp_unit(x_rand - r1 * (x_rand - 2.0 * r2 * position).cwiseAbs());
    }
    const double r3 = rng.uniform();
    const double r4 = rng.uniform();
    // lower bound 0, upper bound 1 in every coordinate
    return clamp_unit(((prey - population_mean).array() - r3 * r4).matrix());
}

// Exploitation: the four besiege strategies keyed on escape chance r and
// energy magnitude. Dive branches are greedy and may return the cached
// fitness of an accepted candidate so the caller skips a re-evaluation.
template <UniformRng R>
std::pair<Vector, std::optional<double>> exploitation_move(
    const Vector& position, double position_fitness, const Vector& prey,
    const Vector& population_mean, double energy, const FitnessFn& fitness, R& rng,
    double levy_beta) {
    const double r = rng.uniform();
    const double abs_e = std::abs(energy);

    if (r >= 0.5 && abs_e >= 0.5) {  // soft besiege
        const double jump = 2.0 * (1.0 - rng.uniform());
        return {clamp_unit((prey - position) - energy * (jump * prey - position).cwiseAbs()),
                std::nullopt};
    }
    if (r >= 0.5) {  // hard besiege
        return {clamp_unit(prey - energy * (prey - position).cwiseAbs()), std::nullopt};
    }

    // rapid dives: soft uses the hawk itself, hard the population mean
    const double jump = 2.0 * (1.0 - rng.uniform());
    const Vector& anchor = abs_e >= 0.5 ? position : population_mean;
    const Vector y = clamp_unit(prey - energy * (jump * prey - anchor).cwiseAbs());
    const double fy = fitness(y);
    if (fy < position_fitness) return {y, fy};

    Vector scale(position.size());
    for (Eigen::Index i = 0; i < scale.size(); ++i) scale(i) = rng.uniform();
    const Vector z = clamp_unit(
        y + scale.cwiseProduct(levy_flight(static_cast<int>(position.size()), levy_beta, rng)));
    const double fz = fitness(z);
    if (fz < position_fitness) return {z, fz};

    return {position, position_fitness};
}

// Population of i.i.d. uniform positions, each evaluated once; hawk i draws
// from its own substream so initialization parallelizes deterministically.
std::vector<Hawk> initialize(const HhoParams& params, int dimension, const FitnessFn& fitness);

// Synchronous generation update: every hawk moves against a snapshot of the
// previous generation with its own derived random stream, so the parallel
// schedule reproduces the serial one exactly.
HhoResult optimize(const HhoParams& params, int dimension, const FitnessFn& fitness);

}  // namespace hawkfs::hho
