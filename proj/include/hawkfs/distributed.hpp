#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hawkfs/wrapper.hpp"

namespace hawkfs {

// One simulated edge device: a full wrapper run over its private slice of
// the training pool, evaluated on the shared test set.
struct ClientRun {
    int client_id = 0;
    std::size_t local_train_size = 0;
    SearchResult result;
};

struct DistributedReport {
    std::vector<ClientRun> per_client;
    MetricMoments accuracy, precision, recall, f_measure;
    double mean_selected_features = 0.0;
    double mean_hidden_neurons = 0.0;
    std::optional<MetricsReport> centralized_reference;
    std::string dataset_id;
};

struct DistributedSettings {
    WrapperSettings wrapper;
    int n_clients = 4;
    double local_train_fraction = 0.75;  // client-side train/validation re-split
    // per-client instrumentation; overrides wrapper.observer when set
    std::function<TrainingObserver(int client_id)> observer_factory;
};

// Partitions train+validation into disjoint stratified client slices; each
// client re-splits locally, runs the wrapper with its own derived seed, and
// is scored on the shared global test set. No state crosses clients.
DistributedReport run_distributed(const Splits& splits, const DistributedSettings& settings,
                                  std::uint64_t seed);

struct ComparisonRow {
    std::string metric;
    double centralized = 0.0;
    double distributed_mean = 0.0;
    double delta = 0.0;  // centralized - distributed
};

std::vector<ComparisonRow> compare(const MetricsReport& centralized,
                                   const DistributedReport& distributed,
                                   const std::string& centralized_dataset_id = {});

}  // namespace hawkfs
