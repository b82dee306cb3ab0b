#pragma once

#include <atomic>
#include <cstdint>
#include <future>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hawkfs/classifier.hpp"
#include "hawkfs/dataset.hpp"
#include "hawkfs/hho.hpp"
#include "hawkfs/metrics.hpp"

namespace hawkfs {

// Weights of the three fitness terms: validation error, selected-feature
// ratio, and hidden-neuron ratio.
struct FitnessWeights {
    double alpha = 0.99;
    double beta = 0.01;
    double gamma = 0.01;

    void validate() const;
};

double fitness_value(double err, int n_selected, int total_features, int n_hidden,
                     int max_neurons, const FitnessWeights& weights);

struct CandidateEvaluation {
    double fitness = 0.0;
    double f_measure = 0.0;
    double err = 0.0;
    int n_selected = 0;
    int total_features = 0;
    int n_hidden = 0;
    int max_neurons = 0;
};

// Memo of candidate evaluations keyed by the decoded bitstring. Each key is
// computed exactly once per run; concurrent callers of an in-flight key
// block on its future, so training counts and results are identical under
// every thread schedule.
class CandidateCache {
public:
    CandidateEvaluation get_or_compute(const std::string& key,
                                       const std::function<CandidateEvaluation()>& compute);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_future<CandidateEvaluation>> entries_;
};

// Test instrumentation: receives the provenance row ids of every dataset a
// classifier is trained on.
using TrainingObserver = std::function<void(std::span<const std::uint64_t> rows)>;

struct WrapperSettings {
    hho::HhoParams hho;
    FitnessWeights weights;
    int neuron_bits = 10;
    std::string classifier = "rwn";
    int knn_k = 5;
    bool use_cache = true;
    TrainingObserver observer;  // optional

    ClassifierFactory make_factory() const;
};

struct SearchResult {
    hho::DecodedSolution decoded;
    std::vector<std::string> selected_features;
    CandidateEvaluation validation_eval;
    MetricsReport test_metrics;
    hho::ConvergenceCurve curve;
    std::uint64_t fitness_evaluations = 0;
    std::uint64_t classifier_trainings = 0;
    std::uint64_t run_seed = 0;
    double wall_time_ms = 0.0;
};

struct MetricMoments {
    double mean = 0.0;
    double stddev = 0.0;
};

struct AggregateReport {
    std::vector<SearchResult> runs;
    MetricMoments accuracy, precision, recall, f_measure;
    double mean_selected_features = 0.0;
    double mean_hidden_neurons = 0.0;
    std::vector<double> mean_curve;
    std::vector<double> selection_frequency;  // per feature, over runs
};

Matrix project_columns(const Matrix& x, const std::vector<bool>& mask);

std::string candidate_key(const hho::DecodedSolution& decoded);

// Decode, project, train on the candidate's columns, score validation
// F-measure, and combine into the weighted fitness. Results are memoized by
// the decoded bitstring when a cache is supplied.
CandidateEvaluation evaluate_candidate(const Vector& position, const hho::SolutionLayout& layout,
                                       const Dataset& train, const Dataset& validation,
                                       const FitnessWeights& weights,
                                       const ClassifierFactory& factory, std::uint64_t run_seed,
                                       CandidateCache* cache,
                                       const TrainingObserver& observer = {},
                                       std::atomic<std::uint64_t>* trainings = nullptr);

// Full wrapper run: HHO search over feature mask and hidden-layer size,
// final retrain on train+validation restricted to the winning mask, and a
// held-out test evaluation.
SearchResult run_wrapper(const Splits& splits, const WrapperSettings& settings,
                         std::uint64_t run_seed);

AggregateReport repeat_runs(int n_runs, const Splits& splits, const WrapperSettings& settings,
                            std::uint64_t base_seed);

MetricMoments moments(std::span<const double> values);

}  // namespace hawkfs
