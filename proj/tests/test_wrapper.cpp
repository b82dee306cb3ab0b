#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mutex>
#include <set>

#include "hawkfs/synthetic.hpp"
#include "hawkfs/wrapper.hpp"

using namespace hawkfs;

namespace {

Splits make_splits(const Dataset& d, std::uint64_t seed) {
    SplitSpec spec;
    spec.seed = seed;
    const Splits raw = split(d, spec);
    const NormalizationParams norm = fit_normalizer(raw.train);
    return {apply_normalizer(raw.train, norm), apply_normalizer(raw.validation, norm),
            apply_normalizer(raw.test, norm)};
}

// position vector for a given mask and most-significant-first neuron bits
Vector encode(const std::vector<bool>& mask, int n_hidden, int neuron_bits) {
    Vector v(static_cast<Eigen::Index>(mask.size()) + neuron_bits);
    for (std::size_t j = 0; j < mask.size(); ++j) v(static_cast<Eigen::Index>(j)) = mask[j] ? 0.9 : 0.1;
    const int value = n_hidden - 1;
    for (int b = 0; b < neuron_bits; ++b) {
        const bool bit = (value >> (neuron_bits - 1 - b)) & 1;
        v(static_cast<Eigen::Index>(mask.size()) + b) = bit ? 0.9 : 0.1;
    }
    return v;
}

bool same_result(const SearchResult& a, const SearchResult& b) {
    return a.decoded.feature_mask == b.decoded.feature_mask &&
           a.decoded.n_hidden == b.decoded.n_hidden &&
           a.validation_eval.fitness == b.validation_eval.fitness &&
           a.test_metrics.accuracy == b.test_metrics.accuracy &&
           a.test_metrics.f_measure == b.test_metrics.f_measure &&
           a.curve.best_fitness == b.curve.best_fitness;
}

}  // namespace

TEST_CASE("fitness_value computes the exact weighted sum") {
    const FitnessWeights w;
    CHECK(fitness_value(0.0, 100, 100, 1024, 1024, w) == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(fitness_value(1.0, 100, 100, 1024, 1024, w) == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(fitness_value(0.1, 10, 100, 512, 1024, w) == doctest::Approx(0.105).epsilon(1e-12));
}

TEST_CASE("fitness_value rejects violated preconditions") {
    const FitnessWeights w;
    CHECK_THROWS_AS((void)fitness_value(-0.1, 1, 10, 1, 16, w), std::invalid_argument);
    CHECK_THROWS_AS((void)fitness_value(1.1, 1, 10, 1, 16, w), std::invalid_argument);
    CHECK_THROWS_AS((void)fitness_value(0.5, 0, 10, 1, 16, w), std::invalid_argument);
    CHECK_THROWS_AS((void)fitness_value(0.5, 11, 10, 1, 16, w), std::invalid_argument);
    CHECK_THROWS_AS((void)fitness_value(0.5, 1, 10, 0, 16, w), std::invalid_argument);
    CHECK_THROWS_AS((void)fitness_value(0.5, 1, 10, 17, 16, w), std::invalid_argument);
    FitnessWeights bad;
    bad.alpha = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("fitness_value increases in every argument") {
    const FitnessWeights w;
    const double base = fitness_value(0.3, 5, 20, 64, 1024, w);
    CHECK(fitness_value(0.31, 5, 20, 64, 1024, w) > base);
    CHECK(fitness_value(0.3, 6, 20, 64, 1024, w) > base);
    CHECK(fitness_value(0.3, 5, 20, 65, 1024, w) > base);
}

TEST_CASE("evaluate_candidate memoizes by decoded bitstring") {
    const Dataset d = synthetic::informative_noise(300, 3, 5, 0.5, 0.15, 3);
    const Splits s = make_splits(d, 1);
    hho::SolutionLayout layout{.n_features = 8, .neuron_bits = 4};
    const FitnessWeights w;
    const ClassifierFactory factory = make_classifier_factory("rwn");
    CandidateCache cache;
    std::atomic<std::uint64_t> trainings{0};

    const Vector a = encode({true, true, false, false, true, false, false, false}, 7, 4);
    Vector b = a;
    b(0) = 0.51;  // different continuous values, same decoded bits

    const CandidateEvaluation ea =
        evaluate_candidate(a, layout, s.train, s.validation, w, factory, 5, &cache, {}, &trainings);
    const CandidateEvaluation eb =
        evaluate_candidate(b, layout, s.train, s.validation, w, factory, 5, &cache, {}, &trainings);
    CHECK(trainings.load() == 1);  // second call hit the cache
    CHECK(cache.size() == 1);
    CHECK(ea.fitness == eb.fitness);
    CHECK(ea.f_measure == eb.f_measure);

    SUBCASE("fitness recombines from the stored fields") {
        CHECK(ea.fitness == doctest::Approx(fitness_value(ea.err, ea.n_selected,
                                                          ea.total_features, ea.n_hidden,
                                                          ea.max_neurons, w))
                                .epsilon(1e-15));
        CHECK(ea.err == doctest::Approx(1.0 - ea.f_measure).epsilon(1e-15));
        CHECK(ea.n_selected == 3);
        CHECK(ea.n_hidden == 7);
    }
}

TEST_CASE("perfect validation reduces fitness to the structural terms") {
    // wide separation makes validation error vanish
    const Dataset d = synthetic::two_blobs(120, 4, 20.0, 7);
    const Splits s = make_splits(d, 2);
    hho::SolutionLayout layout{.n_features = 4, .neuron_bits = 4};
    const FitnessWeights w;
    const ClassifierFactory factory = make_classifier_factory("rwn");

    const Vector pos = encode({true, true, true, true}, 8, 4);
    const CandidateEvaluation e =
        evaluate_candidate(pos, layout, s.train, s.validation, w, factory, 3, nullptr);
    REQUIRE(e.err == 0.0);
    CHECK(e.fitness == doctest::Approx(w.beta * 1.0 + w.gamma * 8.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("a sufficient single feature beats the full set at equal width") {
    // feature 0 fully determines the label; extra features only add cost
    Dataset d;
    const int n = 240;
    d.features.resize(n, 6);
    d.labels.resize(static_cast<std::size_t>(n));
    Rng rng(17);
    for (int i = 0; i < n; ++i) {
        const int y = i % 2;
        d.labels[static_cast<std::size_t>(i)] = y;
        d.features(i, 0) = y == 0 ? rng.uniform(0.0, 0.35) : rng.uniform(0.65, 1.0);
        for (int j = 1; j < 6; ++j) d.features(i, j) = rng.uniform();
    }
    d.class_names = {"a", "b"};
    const Splits s = make_splits(d, 9);

    hho::SolutionLayout layout{.n_features = 6, .neuron_bits = 5};
    const FitnessWeights w;
    const ClassifierFactory factory = make_classifier_factory("rwn");
    const CandidateEvaluation only_first = evaluate_candidate(
        encode({true, false, false, false, false, false}, 12, 5), layout, s.train, s.validation,
        w, factory, 4, nullptr);
    const CandidateEvaluation all = evaluate_candidate(
        encode({true, true, true, true, true, true}, 12, 5), layout, s.train, s.validation, w,
        factory, 4, nullptr);
    CHECK(only_first.fitness < all.fitness);
}

TEST_CASE("run_wrapper is deterministic for a fixed seed") {
    const Dataset d = synthetic::informative_noise(400, 4, 6, 0.45, 0.18, 21);
    const Splits s = make_splits(d, 5);
    WrapperSettings ws;
    ws.hho.population_size = 8;
    ws.hho.max_iterations = 6;
    ws.neuron_bits = 5;

    const SearchResult a = run_wrapper(s, ws, 31);
    const SearchResult b = run_wrapper(s, ws, 31);
    CHECK(same_result(a, b));

    SUBCASE("the cache does not change any outcome") {
        WrapperSettings no_cache = ws;
        no_cache.use_cache = false;
        const SearchResult c = run_wrapper(s, no_cache, 31);
        CHECK(same_result(a, c));
        CHECK(c.classifier_trainings >= a.classifier_trainings);
    }
}

TEST_CASE("the final model sees only selected columns and no test rows") {
    const Dataset d = synthetic::informative_noise(350, 3, 7, 0.5, 0.2, 33);
    const Splits s = make_splits(d, 8);

    std::mutex mu;
    std::vector<std::size_t> train_sizes;
    std::set<std::uint64_t> rows_touched;
    WrapperSettings ws;
    ws.hho.population_size = 6;
    ws.hho.max_iterations = 4;
    ws.neuron_bits = 4;
    ws.observer = [&](std::span<const std::uint64_t> rows) {
        std::lock_guard lock(mu);
        train_sizes.push_back(rows.size());
        rows_touched.insert(rows.begin(), rows.end());
    };

    const SearchResult r = run_wrapper(s, ws, 11);

    CHECK(static_cast<int>(r.selected_features.size()) == r.decoded.selected_count());
    // every training during search and finalization stayed off the test set
    for (const std::uint64_t row : s.test.row_ids) CHECK(!rows_touched.contains(row));
    // the final retrain consumed train+validation
    CHECK(train_sizes.back() ==
          static_cast<std::size_t>(s.train.n_samples() + s.validation.n_samples()));
}

TEST_CASE("repeat_runs aggregates across seeded runs") {
    const Dataset d = synthetic::informative_noise(400, 4, 4, 0.5, 0.18, 41);
    const Splits s = make_splits(d, 14);
    WrapperSettings ws;
    ws.hho.population_size = 6;
    ws.hho.max_iterations = 5;
    ws.neuron_bits = 4;

    const AggregateReport one = repeat_runs(1, s, ws, 100);
    CHECK(one.runs.size() == 1);
    CHECK(one.f_measure.mean == one.runs[0].test_metrics.f_measure);
    CHECK(one.f_measure.stddev == 0.0);

    const AggregateReport agg = repeat_runs(3, s, ws, 100);
    REQUIRE(agg.runs.size() == 3);
    // seeds advance by one per run
    CHECK(agg.runs[0].run_seed == 100);
    CHECK(agg.runs[2].run_seed == 102);
    CHECK(same_result(agg.runs[0], one.runs[0]));

    double mean_f = 0.0;
    for (const auto& run : agg.runs) mean_f += run.test_metrics.f_measure;
    CHECK(agg.f_measure.mean == doctest::Approx(mean_f / 3.0).epsilon(1e-15));

    REQUIRE(agg.mean_curve.size() == 5);
    double first = 0.0;
    for (const auto& run : agg.runs) first += run.curve.best_fitness[0];
    CHECK(agg.mean_curve[0] == doctest::Approx(first / 3.0).epsilon(1e-15));

    REQUIRE(agg.selection_frequency.size() == 8);
    for (const double f : agg.selection_frequency) {
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
}
