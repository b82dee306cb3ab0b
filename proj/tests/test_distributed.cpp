#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "hawkfs/distributed.hpp"
#include "hawkfs/exec.hpp"
#include "hawkfs/synthetic.hpp"

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

DistributedSettings small_settings(int n_clients) {
    DistributedSettings ds;
    ds.wrapper.hho.population_size = 6;
    ds.wrapper.hho.max_iterations = 4;
    ds.wrapper.neuron_bits = 4;
    ds.n_clients = n_clients;
    return ds;
}

}  // namespace

TEST_CASE("client training rows are pairwise disjoint and client-local") {
    const Dataset d = synthetic::informative_noise(600, 4, 6, 0.5, 0.2, 3);
    const Splits s = make_splits(d, 7);

    // reconstruct the expected partition to know each client's row budget
    const Dataset pool = concat(s.train, s.validation);

    std::mutex mu;
    std::map<int, std::set<std::uint64_t>> touched;
    DistributedSettings ds = small_settings(2);
    ds.observer_factory = [&](int client) {
        return [&touched, &mu, client](std::span<const std::uint64_t> rows) {
            std::lock_guard lock(mu);
            touched[client].insert(rows.begin(), rows.end());
        };
    };

    const DistributedReport rep = run_distributed(s, ds, 55);
    REQUIRE(rep.per_client.size() == 2);

    REQUIRE(touched.size() == 2);
    std::set<std::uint64_t> intersection;
    for (const std::uint64_t row : touched[0]) {
        if (touched[1].contains(row)) intersection.insert(row);
    }
    CHECK(intersection.empty());

    const std::set<std::uint64_t> pool_rows(pool.row_ids.begin(), pool.row_ids.end());
    const std::set<std::uint64_t> test_rows(s.test.row_ids.begin(), s.test.row_ids.end());
    for (const auto& [client, rows] : touched) {
        for (const std::uint64_t row : rows) {
            CHECK(pool_rows.contains(row));
            CHECK(!test_rows.contains(row));
        }
    }
}

TEST_CASE("a single client is rejected") {
    const Dataset d = synthetic::two_blobs(100, 3, 3.0, 5);
    const Splits s = make_splits(d, 2);
    CHECK_THROWS_AS((void)run_distributed(s, small_settings(1), 1), std::invalid_argument);
}

TEST_CASE("a single-class client partition is an error") {
    // 3 minority rows across 4 clients guarantees one all-majority slice
    Dataset d;
    d.features.resize(83, 2);
    d.labels.resize(83);
    Rng rng(9);
    for (int i = 0; i < 83; ++i) {
        d.labels[static_cast<std::size_t>(i)] = i < 80 ? 0 : 1;
        d.features(i, 0) = rng.uniform();
        d.features(i, 1) = static_cast<double>(d.labels[static_cast<std::size_t>(i)]);
    }
    d.class_names = {"big", "rare"};
    d.row_ids.resize(83);
    std::iota(d.row_ids.begin(), d.row_ids.end(), std::uint64_t{0});

    Splits s;
    std::vector<Eigen::Index> train_rows, val_rows, test_rows;
    for (Eigen::Index i = 0; i < 60; ++i) train_rows.push_back(i);
    train_rows.push_back(80);
    train_rows.push_back(81);
    for (Eigen::Index i = 60; i < 70; ++i) val_rows.push_back(i);
    val_rows.push_back(82);
    for (Eigen::Index i = 70; i < 80; ++i) test_rows.push_back(i);
    s.train = take_rows(d, train_rows);
    s.validation = take_rows(d, val_rows);
    s.test = take_rows(d, test_rows);

    CHECK_THROWS_WITH_AS((void)run_distributed(s, small_settings(4), 1),
                         doctest::Contains("single-class"), std::runtime_error);
}

TEST_CASE("aggregate means lie within the per-client range") {
    const Dataset d = synthetic::informative_noise(500, 4, 4, 0.5, 0.2, 11);
    const Splits s = make_splits(d, 3);
    const DistributedReport rep = run_distributed(s, small_settings(3), 17);
    REQUIRE(rep.per_client.size() == 3);

    double lo = 1.0, hi = 0.0;
    for (const auto& c : rep.per_client) {
        lo = std::min(lo, c.result.test_metrics.f_measure);
        hi = std::max(hi, c.result.test_metrics.f_measure);
    }
    CHECK(rep.f_measure.mean >= lo - 1e-12);
    CHECK(rep.f_measure.mean <= hi + 1e-12);

    for (const auto& c : rep.per_client) {
        CHECK(c.local_train_size > 0);
        CHECK(c.result.curve.best_fitness.size() == 4);
    }
}

TEST_CASE("the distributed experiment is deterministic and schedule-independent") {
    const Dataset d = synthetic::informative_noise(400, 3, 5, 0.5, 0.2, 23);
    const Splits s = make_splits(d, 29);
    const DistributedSettings ds = small_settings(2);

    exec::set_max_threads(1);
    const DistributedReport serial = run_distributed(s, ds, 99);
    exec::set_max_threads(4);
    const DistributedReport parallel = run_distributed(s, ds, 99);
    exec::set_max_threads(0);

    REQUIRE(serial.per_client.size() == parallel.per_client.size());
    for (std::size_t c = 0; c < serial.per_client.size(); ++c) {
        CHECK(serial.per_client[c].result.decoded.feature_mask ==
              parallel.per_client[c].result.decoded.feature_mask);
        CHECK(serial.per_client[c].result.test_metrics.f_measure ==
              parallel.per_client[c].result.test_metrics.f_measure);
        CHECK(serial.per_client[c].result.curve.best_fitness ==
              parallel.per_client[c].result.curve.best_fitness);
    }
    CHECK(serial.f_measure.mean == parallel.f_measure.mean);

    const DistributedReport again = run_distributed(s, ds, 99);
    CHECK(again.f_measure.mean == serial.f_measure.mean);
}

TEST_CASE("compare reports per-metric deltas") {
    MetricsReport cen;
    cen.accuracy = 0.974;
    cen.precision = 0.975;
    cen.recall = 0.973;
    cen.f_measure = 0.974;

    DistributedReport dist;
    dist.accuracy.mean = 0.969;
    dist.precision.mean = 0.972;
    dist.recall.mean = 0.970;
    dist.f_measure.mean = 0.963;

    const auto rows = compare(cen, dist);
    REQUIRE(rows.size() == 4);
    CHECK(rows[3].metric == "f_measure");
    CHECK(rows[3].delta == doctest::Approx(0.011).epsilon(1e-12));

    SUBCASE("identical reports give zero deltas") {
        DistributedReport same;
        same.accuracy.mean = cen.accuracy;
        same.precision.mean = cen.precision;
        same.recall.mean = cen.recall;
        same.f_measure.mean = cen.f_measure;
        for (const auto& row : compare(cen, same)) CHECK(row.delta == 0.0);
    }

    SUBCASE("mismatched dataset identifiers are rejected") {
        dist.dataset_id = "other";
        CHECK_THROWS_AS((void)compare(cen, dist, "phishing"), std::invalid_argument);
    }
}
