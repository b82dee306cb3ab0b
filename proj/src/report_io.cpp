#include "hawkfs/report_io.hpp"

#include <nlohmann/json.hpp>

namespace hawkfs {

namespace {

const char* kVolatileKeys[] = {"wall_time_ms", "generated_at"};

}  // namespace

nlohmann::json metrics_to_json(const MetricsReport& rep) {
    nlohmann::json per_class = nlohmann::json::array();
    for (const auto& m : rep.per_class) {
        per_class.push_back({{"precision", m.precision},
                             {"recall", m.recall},
                             {"f_measure", m.f_measure},
                             {"support", m.support}});
    }
    return {{"accuracy", rep.accuracy},
            {"precision", rep.precision},
            {"recall", rep.recall},
            {"f_measure", rep.f_measure},
            {"averaging", to_string(rep.averaging)},
            {"per_class", per_class}};
}

nlohmann::json evaluation_to_json(const CandidateEvaluation& eval) {
    return {{"fitness", eval.fitness},
            {"f_measure", eval.f_measure},
            {"err", eval.err},
            {"n_selected", eval.n_selected},
            {"total_features", eval.total_features},
            {"n_hidden", eval.n_hidden},
            {"max_neurons", eval.max_neurons}};
}

nlohmann::json search_result_to_json(const SearchResult& run) {
    return {{"seed", run.run_seed},
            {"selected_features", run.selected_features},
            {"n_selected", run.decoded.selected_count()},
            {"n_hidden", run.decoded.n_hidden},
            {"validation", evaluation_to_json(run.validation_eval)},
            {"test", metrics_to_json(run.test_metrics)},
            {"fitness_evaluations", run.fitness_evaluations},
            {"classifier_trainings", run.classifier_trainings},
            {"wall_time_ms", run.wall_time_ms}};
}

nlohmann::json dataset_summary(const Dataset& d, const std::string& id) {
    return {{"id", id},
            {"n_samples", d.n_samples()},
            {"n_features", d.n_features()},
            {"class_names", d.class_names}};
}

namespace {

nlohmann::json moments_json(const MetricMoments& m) {
    return {{"mean", m.mean}, {"std", m.stddev}};
}

}  // namespace

nlohmann::json aggregate_to_json(const AggregateReport& agg) {
    return {{"accuracy", moments_json(agg.accuracy)},
            {"precision", moments_json(agg.precision)},
            {"recall", moments_json(agg.recall)},
            {"f_measure", moments_json(agg.f_measure)},
            {"mean_selected_features", agg.mean_selected_features},
            {"mean_hidden_neurons", agg.mean_hidden_neurons},
            {"mean_convergence", agg.mean_curve}};
}

nlohmann::json distributed_to_json(const DistributedReport& rep) {
    nlohmann::json clients = nlohmann::json::array();
    for (const auto& c : rep.per_client) {
        nlohmann::json entry = search_result_to_json(c.result);
        entry["client_id"] = c.client_id;
        entry["local_train_size"] = c.local_train_size;
        clients.push_back(std::move(entry));
    }
    nlohmann::json j;
    j["clients"] = clients;
    j["aggregate"] = {{"accuracy", moments_json(rep.accuracy)},
                      {"precision", moments_json(rep.precision)},
                      {"recall", moments_json(rep.recall)},
                      {"f_measure", moments_json(rep.f_measure)},
                      {"mean_selected_features", rep.mean_selected_features},
                      {"mean_hidden_neurons", rep.mean_hidden_neurons}};
    if (rep.centralized_reference) {
        j["centralized_reference"] = metrics_to_json(*rep.centralized_reference);
    }
    return j;
}

nlohmann::json scrub_volatile(nlohmann::json j) {
    if (j.is_object()) {
        for (const char* key : kVolatileKeys) j.erase(key);
        for (auto& [_, value] : j.items()) value = scrub_volatile(std::move(value));
    } else if (j.is_array()) {
        for (auto& value : j) value = scrub_volatile(std::move(value));
    }
    return j;
}

}  // namespace hawkfs
