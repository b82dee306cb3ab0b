#include "hawkfs/metrics.hpp"

#include <stdexcept>

namespace hawkfs {

std::int64_t ConfusionMatrix::total() const {
    std::int64_t t = 0;
    for (const auto& row : counts)
        for (const auto v : row) t += v;
    return t;
}

std::int64_t ConfusionMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
    return t;
}

Averaging default_averaging(int n_classes) {
    return n_classes == 2 ? Averaging::binary_positive_class : Averaging::macro;
}

std::string to_string(Averaging a) {
    return a == Averaging::binary_positive_class ? "binary_positive_class" : "macro";
}

Averaging averaging_from_string(const std::string& s) {
    if (s == "binary_positive_class") return Averaging::binary_positive_class;
    if (s == "macro") return Averaging::macro;
    throw std::invalid_argument("unknown averaging mode: " + s);
}

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred, int n_classes) {
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("confusion: true/predicted length mismatch");
    }
    if (n_classes < 1) throw std::invalid_argument("confusion: need at least one class");

    ConfusionMatrix cm;
    cm.counts.assign(static_cast<std::size_t>(n_classes),
                     std::vector<std::int64_t>(static_cast<std::size_t>(n_classes), 0));
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i];
        const int p = y_pred[i];
        if (t < 0 || t >= n_classes || p < 0 || p >= n_classes) {
            throw std::invalid_argument("confusion: label out of range at index " + std::to_string(i));
        }
        ++cm.counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
    }
    return cm;
}

MetricsReport report(const ConfusionMatrix& cm, Averaging averaging) {
    const int n = cm.n_classes();
    const std::int64_t total = cm.total();
    if (n == 0 || total == 0) throw std::invalid_argument("report: empty confusion matrix");
    if (averaging == Averaging::binary_positive_class && n != 2) {
        throw std::invalid_argument("report: binary averaging needs exactly two classes");
    }

    MetricsReport rep;
    rep.averaging = averaging;
    rep.accuracy = static_cast<double>(cm.trace()) / static_cast<double>(total);
    rep.per_class.resize(static_cast<std::size_t>(n));

    for (int c = 0; c < n; ++c) {
        const auto uc = static_cast<std::size_t>(c);
        std::int64_t tp = cm.counts[uc][uc];
        std::int64_t fp = 0, fn = 0, support = 0;
        for (int k = 0; k < n; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            support += cm.counts[uc][uk];
            if (k != c) {
                fp += cm.counts[uk][uc];
                fn += cm.counts[uc][uk];
            }
        }
        ClassMetrics& m = rep.per_class[uc];
        m.support = support;
        m.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        m.recall = (tp + fn) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        m.f_measure = (m.precision + m.recall) > 0.0
                          ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                          : 0.0;
    }

    if (averaging == Averaging::binary_positive_class) {
        rep.precision = rep.per_class[1].precision;
        rep.recall = rep.per_class[1].recall;
        rep.f_measure = rep.per_class[1].f_measure;
    } else {
        for (const auto& m : rep.per_class) {
            rep.precision += m.precision;
            rep.recall += m.recall;
            rep.f_measure += m.f_measure;
        }
        rep.precision /= n;
        rep.recall /= n;
        rep.f_measure /= n;
    }
    return rep;
}

}  // namespace hawkfs
