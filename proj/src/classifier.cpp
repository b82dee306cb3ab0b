#include "hawkfs/classifier.hpp"

#include <optional>
#include <stdexcept>

#include "hawkfs/baselines.hpp"
#include "hawkfs/rwn.hpp"

namespace hawkfs {

namespace {

class RwnClassifier final : public Classifier {
public:
    void train(const Matrix& x, std::span<const int> labels, int n_classes, int n_hidden,
               std::uint64_t seed) override {
        RwnConfig config;
        config.n_hidden = n_hidden;
        config.seed = seed;
        model_ = rwn_train(x, labels, n_classes, config);
    }

    std::vector<int> predict(const Matrix& x) const override {
        if (!model_) throw std::logic_error("rwn classifier: predict before train");
        return rwn_predict(*model_, x);
    }

    std::string name() const override { return "rwn"; }

private:
    std::optional<RwnModel> model_;
};

class KnnClassifier final : public Classifier {
public:
    explicit KnnClassifier(int k) : k_(k) {}

    void train(const Matrix& x, std::span<const int> labels, int n_classes, int /*n_hidden*/,
               std::uint64_t /*seed*/) override {
        model_ = knn_train(x, labels, n_classes, std::min<int>(k_, static_cast<int>(x.rows())));
    }

    std::vector<int> predict(const Matrix& x) const override {
        if (!model_) throw std::logic_error("knn classifier: predict before train");
        return knn_predict(*model_, x);
    }

    std::string name() const override { return "knn"; }

private:
    int k_;
    std::optional<KnnModel> model_;
};

}  // namespace

ClassifierFactory make_classifier_factory(const std::string& kind, int knn_k) {
    if (kind == "rwn") {
        return [] { return std::make_unique<RwnClassifier>(); };
    }
    if (kind == "knn") {
        return [knn_k] { return std::make_unique<KnnClassifier>(knn_k); };
    }
    throw std::invalid_argument("unknown classifier '" + kind + "' (expected rwn or knn)");
}

}  // namespace hawkfs
