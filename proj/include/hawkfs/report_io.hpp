#pragma once

#include <nlohmann/json_fwd.hpp>

#include "hawkfs/config.hpp"
#include "hawkfs/distributed.hpp"
#include "hawkfs/wrapper.hpp"

namespace hawkfs {

nlohmann::json metrics_to_json(const MetricsReport& rep);
nlohmann::json evaluation_to_json(const CandidateEvaluation& eval);
nlohmann::json search_result_to_json(const SearchResult& run);

// Dataset identity block embedded in every report so comparisons can check
// both sides describe the same data.
nlohmann::json dataset_summary(const Dataset& d, const std::string& id);

nlohmann::json aggregate_to_json(const AggregateReport& agg);
nlohmann::json distributed_to_json(const DistributedReport& rep);

// Removes volatile keys (wall-clock fields, timestamps) everywhere in the
// document; what remains is a pure function of config and seed.
nlohmann::json scrub_volatile(nlohmann::json j);

}  // namespace hawkfs
