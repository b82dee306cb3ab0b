#include "hawkfs/distributed.hpp"

#include <set>
#include <stdexcept>

namespace hawkfs {

namespace {

constexpr std::uint64_t kPartitionStream = 0xC11E;
constexpr std::uint64_t kLocalSplitStream = 0x5117;
constexpr std::uint64_t kClientStream = 0xC0DE;

}  // namespace

DistributedReport run_distributed(const Splits& splits, const DistributedSettings& settings,
                                  std::uint64_t seed) {
    if (settings.n_clients < 2) {
        throw std::invalid_argument(
            "run_distributed: need at least two clients (use the centralized scheme otherwise)");
    }

    const Dataset pool = concat(splits.train, splits.validation);
    const std::vector<Dataset> parts =
        partition_clients(pool, settings.n_clients, derive_seed(seed, kPartitionStream));

    // validate every partition before any client starts computing
    for (int c = 0; c < settings.n_clients; ++c) {
        const Dataset& local = parts[static_cast<std::size_t>(c)];
        const std::set<int> present(local.labels.begin(), local.labels.end());
        if (present.size() < 2) {
            throw std::runtime_error("client " + std::to_string(c) +
                                     " received a single-class partition; use fewer clients");
        }
    }

    DistributedReport rep;
    rep.per_client.reserve(parts.size());

    for (int c = 0; c < settings.n_clients; ++c) {
        const Dataset& local = parts[static_cast<std::size_t>(c)];
        auto [local_train, local_val] =
            split_two(local, settings.local_train_fraction, true,
                      derive_seed(seed, kLocalSplitStream, static_cast<std::uint64_t>(c)));

        WrapperSettings ws = settings.wrapper;
        if (settings.observer_factory) ws.observer = settings.observer_factory(c);

        ClientRun run;
        run.client_id = c;
        run.local_train_size = static_cast<std::size_t>(local_train.n_samples());
        run.result = run_wrapper({std::move(local_train), std::move(local_val), splits.test}, ws,
                                 derive_seed(seed, kClientStream, static_cast<std::uint64_t>(c)));
        rep.per_client.push_back(std::move(run));
    }

    std::vector<double> acc, prec, rec, f1;
    for (const auto& run : rep.per_client) {
        acc.push_back(run.result.test_metrics.accuracy);
        prec.push_back(run.result.test_metrics.precision);
        rec.push_back(run.result.test_metrics.recall);
        f1.push_back(run.result.test_metrics.f_measure);
        rep.mean_selected_features += run.result.decoded.selected_count();
        rep.mean_hidden_neurons += run.result.decoded.n_hidden;
    }
    rep.accuracy = moments(acc);
    rep.precision = moments(prec);
    rep.recall = moments(rec);
    rep.f_measure = moments(f1);
    rep.mean_selected_features /= static_cast<double>(settings.n_clients);
    rep.mean_hidden_neurons /= static_cast<double>(settings.n_clients);
    return rep;
}

std::vector<ComparisonRow> compare(const MetricsReport& centralized,
                                   const DistributedReport& distributed,
                                   const std::string& centralized_dataset_id) {
    if (!centralized_dataset_id.empty() && !distributed.dataset_id.empty() &&
        centralized_dataset_id != distributed.dataset_id) {
        throw std::invalid_argument("compare: reports describe different datasets ('" +
                                    centralized_dataset_id + "' vs '" + distributed.dataset_id +
                                    "')");
    }
    return {
        {"accuracy", centralized.accuracy, distributed.accuracy.mean,
         centralized.accuracy - distributed.accuracy.mean},
        {"precision", centralized.precision, distributed.precision.mean,
         centralized.precision - distributed.precision.mean},
        {"recall", centralized.recall, distributed.recall.mean,
         centralized.recall - distributed.recall.mean},
        {"f_measure", centralized.f_measure, distributed.f_measure.mean,
         centralized.f_measure - distributed.f_measure.mean},
    };
}

}  // namespace hawkfs
