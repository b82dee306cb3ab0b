#include "hawkfs/wrapper.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hawkfs {

void FitnessWeights::validate() const {
    for (const double w : {alpha, beta, gamma}) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw std::invalid_argument("fitness weights must lie in [0, 1]");
        }
    }
}

double fitness_value(double err, int n_selected, int total_features, int n_hidden,
                     int max_neurons, const FitnessWeights& weights) {
    weights.validate();
    if (!(err >= 0.0 && err <= 1.0)) throw std::invalid_argument("fitness: err outside [0, 1]");
    if (n_selected < 1 || n_selected > total_features) {
        throw std::invalid_argument("fitness: selected feature count outside [1, F]");
    }
    if (n_hidden < 1 || n_hidden > max_neurons) {
        throw std::invalid_argument("fitness: hidden neuron count outside [1, N]");
    }
    return weights.alpha * err +
           weights.beta * static_cast<double>(n_selected) / static_cast<double>(total_features) +
           weights.gamma * static_cast<double>(n_hidden) / static_cast<double>(max_neurons);
}

CandidateEvaluation CandidateCache::get_or_compute(
    const std::string& key, const std::function<CandidateEvaluation()>& compute) {
    std::promise<CandidateEvaluation> promise;
    std::shared_future<CandidateEvaluation> ready;
    {
        std::lock_guard lock(mutex_);
        const auto it = entries_.find(key);
        if (it != entries_.end()) {
            ready = it->second;
        } else {
            entries_.emplace(key, promise.get_future().share());
        }
    }
    if (ready.valid()) return ready.get();
    try {
        CandidateEvaluation eval = compute();
        promise.set_value(eval);
        return eval;
    } catch (...) {
        // a failing candidate fails identically on retry; waiters see the
        // same exception
        promise.set_exception(std::current_exception());
        throw;
    }
}

std::size_t CandidateCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

ClassifierFactory WrapperSettings::make_factory() const {
    return make_classifier_factory(classifier, knn_k);
}

Matrix project_columns(const Matrix& x, const std::vector<bool>& mask) {
    if (static_cast<Eigen::Index>(mask.size()) != x.cols()) {
        throw std::invalid_argument("project_columns: mask length does not match column count");
    }
    Eigen::Index selected = 0;
    for (const bool b : mask) selected += b ? 1 : 0;
    Matrix out(x.rows(), selected);
    Eigen::Index at = 0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (mask[static_cast<std::size_t>(j)]) out.col(at++) = x.col(j);
    }
    return out;
}

std::string candidate_key(const hho::DecodedSolution& decoded) {
    std::string key;
    key.reserve(decoded.feature_mask.size() + 8);
    for (const bool b : decoded.feature_mask) key.push_back(b ? '1' : '0');
    key.push_back('#');
    key += std::to_string(decoded.n_hidden);
    return key;
}

namespace {

CandidateEvaluation evaluate_uncached(const hho::DecodedSolution& decoded, const std::string& key,
                                      const hho::SolutionLayout& layout, const Dataset& train,
                                      const Dataset& validation, const FitnessWeights& weights,
                                      const ClassifierFactory& factory, std::uint64_t run_seed,
                                      const TrainingObserver& observer,
                                      std::atomic<std::uint64_t>* trainings) {
    const Matrix x_train = project_columns(train.features, decoded.feature_mask);
    const Matrix x_val = project_columns(validation.features, decoded.feature_mask);
    const std::uint64_t seed = derive_seed(run_seed, fnv1a(key.data(), key.size()));

    auto clf = factory();
    try {
        clf->train(x_train, train.labels, train.n_classes(), decoded.n_hidden, seed);
    } catch (const std::exception& e) {
        throw std::runtime_error("candidate " + key + ": classifier training failed: " + e.what());
    }
    if (trainings) trainings->fetch_add(1, std::memory_order_relaxed);
    if (observer) observer(train.row_ids);

    const std::vector<int> predicted = clf->predict(x_val);
    const MetricsReport rep = report(confusion(validation.labels, predicted, train.n_classes()),
                                     default_averaging(train.n_classes()));

    CandidateEvaluation eval;
    eval.f_measure = rep.f_measure;
    eval.err = 1.0 - rep.f_measure;
    eval.n_selected = decoded.selected_count();
    eval.total_features = static_cast<int>(train.n_features());
    eval.n_hidden = decoded.n_hidden;
    eval.max_neurons = layout.max_neurons();
    eval.fitness = fitness_value(eval.err, eval.n_selected, eval.total_features, eval.n_hidden,
                                 eval.max_neurons, weights);
    return eval;
}

}  // namespace

CandidateEvaluation evaluate_candidate(const Vector& position, const hho::SolutionLayout& layout,
                                       const Dataset& train, const Dataset& validation,
                                       const FitnessWeights& weights,
                                       const ClassifierFactory& factory, std::uint64_t run_seed,
                                       CandidateCache* cache, const TrainingObserver& observer,
                                       std::atomic<std::uint64_t>* trainings) {
    const hho::DecodedSolution decoded = hho::decode(position, layout);
    const std::string key = candidate_key(decoded);
    const auto compute = [&] {
        return evaluate_uncached(decoded, key, layout, train, validation, weights, factory,
                                 run_seed, observer, trainings);
    };
    return cache ? cache->get_or_compute(key, compute) : compute();
}

SearchResult run_wrapper(const Splits& splits, const WrapperSettings& settings,
                         std::uint64_t run_seed) {
    const auto t0 = std::chrono::steady_clock::now();

    hho::SolutionLayout layout;
    layout.n_features = static_cast<int>(splits.train.n_features());
    layout.neuron_bits = settings.neuron_bits;

    hho::HhoParams params = settings.hho;
    params.seed = run_seed;

    const ClassifierFactory factory = settings.make_factory();
    CandidateCache cache;
    CandidateCache* cache_ptr = settings.use_cache ? &cache : nullptr;
    std::atomic<std::uint64_t> trainings{0};

    const auto fitness = [&](const Vector& position) {
        return evaluate_candidate(position, layout, splits.train, splits.validation,
                                  settings.weights, factory, run_seed, cache_ptr,
                                  settings.observer, &trainings)
            .fitness;
    };

    const hho::HhoResult search = hho::optimize(params, layout.dimension(), fitness);

    SearchResult result;
    result.run_seed = run_seed;
    result.curve = search.curve;
    result.fitness_evaluations = search.fitness_evaluations;
    result.decoded = hho::decode(search.best.position, layout);
    result.validation_eval =
        evaluate_candidate(search.best.position, layout, splits.train, splits.validation,
                           settings.weights, factory, run_seed, cache_ptr, settings.observer,
                           &trainings);

    for (std::size_t j = 0; j < result.decoded.feature_mask.size(); ++j) {
        if (result.decoded.feature_mask[j] && j < splits.train.feature_names.size()) {
            result.selected_features.push_back(splits.train.feature_names[j]);
        }
    }

    // Final model: retrain on everything except the held-out test set,
    // restricted to the winning subset.
    const Dataset pool = concat(splits.train, splits.validation);
    const Matrix x_pool = project_columns(pool.features, result.decoded.feature_mask);
    const std::string key = candidate_key(result.decoded);
    const std::uint64_t final_seed = derive_seed(run_seed, fnv1a(key.data(), key.size()));

    auto final_clf = factory();
    final_clf->train(x_pool, pool.labels, pool.n_classes(), result.decoded.n_hidden, final_seed);
    trainings.fetch_add(1, std::memory_order_relaxed);
    if (settings.observer) settings.observer(pool.row_ids);

    const Matrix x_test = project_columns(splits.test.features, result.decoded.feature_mask);
    const std::vector<int> predicted = final_clf->predict(x_test);
    result.test_metrics = report(confusion(splits.test.labels, predicted, pool.n_classes()),
                                 default_averaging(pool.n_classes()));

    result.classifier_trainings = trainings.load();
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

MetricMoments moments(std::span<const double> values) {
    MetricMoments m;
    if (values.empty()) return m;
    for (const double v : values) m.mean += v;
    m.mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (const double v : values) ss += (v - m.mean) * (v - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(values.size()));
    return m;
}

AggregateReport repeat_runs(int n_runs, const Splits& splits, const WrapperSettings& settings,
                            std::uint64_t base_seed) {
    if (n_runs < 1) throw std::invalid_argument("repeat_runs: n_runs must be >= 1");

    AggregateReport agg;
    agg.runs.reserve(static_cast<std::size_t>(n_runs));
    for (int i = 0; i < n_runs; ++i) {
        agg.runs.push_back(run_wrapper(splits, settings, base_seed + static_cast<std::uint64_t>(i)));
    }

    std::vector<double> acc, prec, rec, f1;
    for (const auto& run : agg.runs) {
        acc.push_back(run.test_metrics.accuracy);
        prec.push_back(run.test_metrics.precision);
        rec.push_back(run.test_metrics.recall);
        f1.push_back(run.test_metrics.f_measure);
        agg.mean_selected_features += run.decoded.selected_count();
        agg.mean_hidden_neurons += run.decoded.n_hidden;
    }
    agg.accuracy = moments(acc);
    agg.precision = moments(prec);
    agg.recall = moments(rec);
    agg.f_measure = moments(f1);
    agg.mean_selected_features /= static_cast<double>(n_runs);
    agg.mean_hidden_neurons /= static_cast<double>(n_runs);

    const std::size_t iters = agg.runs.front().curve.best_fitness.size();
    agg.mean_curve.assign(iters, 0.0);
    for (const auto& run : agg.runs) {
        for (std::size_t t = 0; t < iters; ++t) agg.mean_curve[t] += run.curve.best_fitness[t];
    }
    for (double& v : agg.mean_curve) v /= static_cast<double>(n_runs);

    const std::size_t n_feat = static_cast<std::size_t>(splits.train.n_features());
    agg.selection_frequency.assign(n_feat, 0.0);
    for (const auto& run : agg.runs) {
        for (std::size_t j = 0; j < n_feat; ++j) {
            if (run.decoded.feature_mask[j]) agg.selection_frequency[j] += 1.0;
        }
    }
    for (double& v : agg.selection_frequency) v /= static_cast<double>(n_runs);
    return agg;
}

}  // namespace hawkfs
